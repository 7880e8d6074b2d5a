import logging
from typing import Any, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .. import util
from .contraction import grading_from_splitting, weight_indices
from .errors import DimensionMismatch, NotAnIdeal, SingularMatrix
from .fundamental import FundamentalObject, ad_matrix, wedge_basis
from .lie import (
    Fingerprint,
    LieAlgebra,
    bracket,
    center,
    change_basis_lie,
    checked,
    fingerprint,
    induce,
    lie_subalgebra_violation,
    unit,
)
from .linalg import Matrix, Rational, Subspace, format_rational
from .nlie import (
    NLieAlgebra,
    Splitting,
    abelian_violation,
    ideal_violation,
    subalgebra_violation,
)
from .tensor import AntisymTensor, Key, Word

log = logging.getLogger("analysis")


class Claim(NamedTuple):
    name: str
    holds: bool
    witness: Any


class StructureReport:
    """A list of checked claims with witnesses, plus an overall verdict."""

    subject: str
    claims: Tuple[Claim, ...]
    success: str
    failure: str

    def __init__(
        self,
        subject: str,
        claims: Iterable[Claim],
        success: str = "holds",
        failure: str = "fails",
    ) -> None:
        self.subject = subject
        self.claims = tuple(claims)
        self.success = success
        self.failure = failure

    @property
    def holds(self) -> bool:
        return all(claim.holds for claim in self.claims)

    @property
    def verdict(self) -> str:
        return self.success if self.holds else self.failure

    def claim(self, name: str) -> Claim:
        for claim in self.claims:
            if claim.name == name:
                return claim

        raise KeyError(name)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "subject": self.subject,
            "verdict": self.verdict,
            "holds": self.holds,
            "claims": [
                {"name": c.name, "holds": c.holds, "witness": c.witness}
                for c in self.claims
            ],
        }

    def render(self) -> str:
        rows = {
            claim.name: f"{'yes' if claim.holds else 'NO '}  {_describe(claim.witness)}"
            for claim in self.claims
        }
        lines = [f"{self.subject}: {self.verdict}"]
        if rows:
            lines.append(util.text.join_map(rows))

        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"<StructureReport {self.subject!r}: {self.verdict}>"


def _describe(witness: Any) -> str:
    if witness is None:
        return ""
    if isinstance(witness, dict) and set(witness) == {"lower", "upper", "value"}:
        args = ",".join(f"e{i}" for i in witness["lower"])
        return f"[{args}] has {witness['value']}·e{witness['upper']}"

    return util.text.compact_json(witness)


def entry_witness(entry: Tuple[Word, int, Rational]) -> Dict[str, Any]:
    lower, upper, value = entry
    return {"lower": list(lower), "upper": upper, "value": format_rational(value)}


def vector_witness(v: Sequence[Rational]) -> List[str]:
    return [format_rational(x) for x in v]


def subspace_witness(s: Subspace) -> Dict[str, Any]:
    return {"dim": s.dim, "basis": [vector_witness(b) for b in s.basis]}


def _entry_claim(
    name: str, violation: Optional[Tuple[Word, int, Rational]], held: Any
) -> Claim:
    if violation is None:
        return Claim(name, True, held)

    return Claim(name, False, entry_witness(violation))


def semidirect_report_fa(alg: NLieAlgebra, s: Splitting) -> StructureReport:
    """Checks that span(i1) is an abelian ideal and span(i0) a subalgebra."""

    claims = [
        _entry_claim("i0 subalgebra", subalgebra_violation(alg, s), {"i0": list(s.i0)}),
        _entry_claim("i1 ideal", ideal_violation(alg, s), {"i1": list(s.i1)}),
        _entry_claim("i1 abelian", abelian_violation(alg, s), {"i1": list(s.i1)}),
    ]
    return StructureReport(
        f"arity {alg.arity}, dim {alg.dim} algebra split at i0={list(s.i0)}",
        claims,
        success="semidirect V ⋊ G0",
        failure="not semidirect",
    )


def _block_violation(
    lie: LieAlgebra, left: Iterable[int], right: Iterable[int], allowed: Iterable[int]
) -> Optional[Tuple[Word, int, Rational]]:
    """Returns the first [e_a, e_b] with a in left, b in right leaving span(allowed)."""

    first, second, target = set(left), set(right), set(allowed)
    for (a, b), k, value in lie.c.items():
        crosses = (a in first and b in second) or (b in first and a in second)
        if crosses and k not in target:
            return (a, b), k, value

    return None


def graded_structure_report(alg: NLieAlgebra, s: Splitting) -> StructureReport:
    """Checks the weight blocks of Lie 𝔊 for an algebra split at s.

    For a contracted algebra W(0) is a subalgebra, W(1) an abelian ideal and
    every wedge word of weight 2 or more lies in ker ad.
    """

    il = induce(alg)
    g = grading_from_splitting(alg, s, il)
    lie = il.lie
    every = range(1, lie.dim + 1)
    w0 = weight_indices(g, 0)
    w1 = weight_indices(g, 1)

    heavy = [w for w in wedge_basis(alg.dim, alg.arity - 1) if s.weight(w) >= 2]
    live = [
        w
        for w in heavy
        if not ad_matrix(alg, FundamentalObject.word(alg.dim, *w)).is_zero()
    ]

    claims = [
        _entry_claim(
            "W(0) subalgebra", lie_subalgebra_violation(lie, w0), {"dim": len(w0)}
        ),
        _entry_claim(
            "W(1) abelian", _block_violation(lie, w1, w1, ()), {"dim": len(w1)}
        ),
        _entry_claim(
            "W(1) ideal", _block_violation(lie, every, w1, w1), {"indices": list(w1)}
        ),
        Claim(
            "weight >= 2 in ker ad",
            not live,
            {"words": [list(w) for w in (live or heavy)]},
        ),
    ]
    return StructureReport(
        f"Lie algebra of dimension {lie.dim} graded by i0={list(s.i0)}",
        claims,
        success="graded semidirect structure",
        failure="graded structure broken",
    )


def ideal_defect(lie: LieAlgebra, ideal: Subspace) -> Optional[Tuple[int, int]]:
    """Returns (basis index, ideal generator index) with a bracket leaving it."""

    for i in range(1, lie.dim + 1):
        for g, b in enumerate(ideal.basis, start=1):
            if not ideal.contains(bracket(lie, unit(lie, i), b)):
                return i, g

    return None


def quotient_lie(lie: LieAlgebra, ideal: Subspace) -> LieAlgebra:
    """Returns lie / ideal on the coordinate complement of the ideal's pivots."""

    if ideal.ambient_dim != lie.dim:
        raise DimensionMismatch(lie.dim, ideal.ambient_dim, "ideal ambient dimension")

    defect = ideal_defect(lie, ideal)
    if defect is not None:
        raise NotAnIdeal(f"[e{defect[0]}, generator {defect[1]}] leaves the subspace")

    pivots = set(ideal.pivots)
    complement = [c for c in range(lie.dim) if c not in pivots]
    entries: Dict[Key, Rational] = {}
    for a_pos, a in enumerate(complement, start=1):
        for b_pos, b in enumerate(complement[a_pos:], start=a_pos + 1):
            reduced = ideal.reduce(bracket(lie, unit(lie, a + 1), unit(lie, b + 1)))
            for k_pos, k in enumerate(complement, start=1):
                if reduced[k] != 0:
                    entries[((a_pos, b_pos), k_pos)] = reduced[k]

    quotient = LieAlgebra(AntisymTensor(2, len(complement), entries))
    result = checked(quotient, "Quotient")
    log.debug(f"Quotient of dimension {result.dim} by ideal of dimension {ideal.dim}")
    return result


def is_central_subspace(lie: LieAlgebra, s: Subspace) -> bool:
    return s.is_subspace_of(center(lie))


class ConstantsMatch(NamedTuple):
    holds: bool
    mismatch: Optional[Tuple[Word, int, Rational, Rational]]


def match_structure_constants(
    a: LieAlgebra, b: LieAlgebra, basis_map: Matrix
) -> ConstantsMatch:
    """Checks that a, rewritten in the basis given by the columns of the map, is b.

    The mismatch is (lower, upper, transformed value, expected value).
    """

    if a.dim != b.dim:
        raise DimensionMismatch(a.dim, b.dim)

    transformed = change_basis_lie(a, basis_map).c
    keys = sorted(set(transformed.entries) | set(b.c.entries))
    for lower, upper in keys:
        got = transformed.get(lower, upper)
        expected = b.c.get(lower, upper)
        if got != expected:
            return ConstantsMatch(False, (lower, upper, got, expected))

    return ConstantsMatch(True, None)


def _mismatch_witness(match: ConstantsMatch) -> Any:
    if match.mismatch is None:
        return None

    lower, upper, got, expected = match.mismatch
    return {
        "lower": list(lower),
        "upper": upper,
        "got": format_rational(got),
        "expected": format_rational(expected),
    }


def certify_central_extension(
    big: LieAlgebra, ideal: Subspace, target: LieAlgebra, basis_map: Matrix
) -> StructureReport:
    """Certifies that big is a central extension of target by ideal."""

    if basis_map.rows != target.dim or basis_map.cols != target.dim:
        raise DimensionMismatch(
            (target.dim, target.dim),
            (basis_map.rows, basis_map.cols),
            "basis map shape",
        )

    subject = f"extension of dimension {big.dim} by an ideal of dimension {ideal.dim}"
    central = is_central_subspace(big, ideal)
    claims = [Claim("ideal central", central, subspace_witness(ideal))]

    quotient: Optional[LieAlgebra] = None
    if ideal_defect(big, ideal) is None:
        quotient = quotient_lie(big, ideal)

    if quotient is None or quotient.dim != target.dim:
        got = None if quotient is None else quotient.dim
        claims.append(
            Claim("quotient dimension", False, {"quotient": got, "target": target.dim})
        )
        return StructureReport(subject, claims, "central extension", "not certified")

    dims = {"quotient": quotient.dim, "target": target.dim}
    claims.append(Claim("quotient dimension", True, dims))
    try:
        basis_map.inverse()
    except SingularMatrix as e:
        claims.append(Claim("basis map invertible", False, {"rank": e.rank}))
        return StructureReport(subject, claims, "central extension", "not certified")

    claims.append(Claim("basis map invertible", True, {"rank": basis_map.rows}))
    match = match_structure_constants(quotient, target, basis_map)
    witness = _mismatch_witness(match)
    claims.append(Claim("structure constants match", match.holds, witness))

    return StructureReport(subject, claims, "central extension", "not certified")


def compare_report(a: LieAlgebra, b: LieAlgebra) -> StructureReport:
    """Compares fingerprints; only distinct fingerprints settle the question."""

    left, right = fingerprint(a), fingerprint(b)
    claims = [
        Claim(name, x == y, {"left": _plain(x), "right": _plain(y)})
        for name, x, y in zip(Fingerprint._fields, left, right)
    ]
    return StructureReport(
        f"dimension {a.dim} vs dimension {b.dim}",
        claims,
        success="fingerprint-equal (isomorphism not decided)",
        failure="fingerprint-distinct",
    )


def _plain(value: Any) -> Any:
    return list(value) if isinstance(value, tuple) else value
