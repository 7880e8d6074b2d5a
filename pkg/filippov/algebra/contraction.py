import logging
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from .. import util
from . import recheck
from .errors import (
    DimensionMismatch,
    GradingViolation,
    IndexOutOfRange,
    InvalidGrading,
    NotASubalgebra,
)
from .lie import InducedLie, LieAlgebra, checked, lie_subalgebra_violation
from .nlie import FIStatus, NLieAlgebra, Splitting, subalgebra_violation, verify_fi
from .tensor import Word

log = logging.getLogger("contract")


class Grading:
    """Nonnegative integer weight per Lie-algebra basis element (1-based lookup)."""

    weights: Tuple[int, ...]

    def __init__(self, weights: Iterable[int]) -> None:
        values = tuple(weights)
        for w in values:
            if isinstance(w, bool) or not isinstance(w, int) or w < 0:
                raise InvalidGrading(f"Weights must be nonnegative integers, got {w!r}")

        self.weights = values

    @classmethod
    def zero(cls, dim: int) -> "Grading":
        return cls((0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.weights)

    def weight(self, index: int) -> int:
        return self.weights[index - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Grading):
            return NotImplemented

        return self.weights == other.weights

    def __hash__(self) -> int:
        return hash(self.weights)

    def __repr__(self) -> str:
        return f"<Grading {list(self.weights)}>"


class GradingCheck(NamedTuple):
    valid: bool
    violations: Tuple[Tuple[int, int, int], ...]


def _check_length(lie: LieAlgebra, g: Grading) -> None:
    if g.dim != lie.dim:
        raise DimensionMismatch(lie.dim, g.dim, "grading length")


def contract_fa(alg: NLieAlgebra, s: Splitting) -> NLieAlgebra:
    """Contracts the algebra with respect to the subalgebra spanned by s.i0.

    Kept constants: all lower indices and the upper index in i0, or exactly one
    lower index and the upper index in i1.
    """

    alg.require_verified()
    if s.dim != alg.dim:
        raise DimensionMismatch(alg.dim, s.dim, "splitting dimension")

    witness = subalgebra_violation(alg, s)
    if witness is not None:
        raise NotASubalgebra(s.i0, witness)

    n = alg.arity
    sub = set(s.i0)

    def keep(lower: Word, upper: int) -> bool:
        inside = sum(1 for i in lower if i in sub)
        if upper in sub:
            return inside == n

        return inside == n - 1

    start = util.time.usec()
    result = NLieAlgebra(alg.f.filter(keep), FIStatus.VERIFIED)
    if recheck.enabled():
        report = verify_fi(result)
        if not report.holds:
            raise AssertionError(f"Contraction broke the FI at {report.first}")

    log.info(
        f"Contracted {len(alg.f)} constants to {len(result.f)} wrt i0={list(s.i0)} "
        f"in {util.time.since(start)}"
    )
    return result


def grading_from_words(words: Sequence[Word], s: Splitting) -> Grading:
    """Weights each word by the number of its indices lying in s.i1."""

    for word in words:
        for index in word:
            if not 1 <= index <= s.dim:
                raise IndexOutOfRange(index, s.dim)

    return Grading(s.weight(word) for word in words)


def grading_from_splitting(alg: NLieAlgebra, s: Splitting, il: InducedLie) -> Grading:
    if il.source_dim != alg.dim or il.source_arity != alg.arity:
        raise DimensionMismatch(
            (alg.arity, alg.dim), (il.source_arity, il.source_dim), "induced source"
        )
    if s.dim != alg.dim:
        raise DimensionMismatch(alg.dim, s.dim, "splitting dimension")

    return grading_from_words(il.basis_words, s)


def weight_indices(g: Grading, r: int) -> Tuple[int, ...]:
    """Returns the 1-based basis indices of weight r."""

    return tuple(i for i, w in enumerate(g.weights, start=1) if w == r)


def check_ww_grading(lie: LieAlgebra, g: Grading) -> GradingCheck:
    """Checks weight(k) ≤ weight(i) + weight(j) for every c_{ij}^k ≠ 0."""

    _check_length(lie, g)

    violations: List[Tuple[int, int, int]] = []
    for (i, j), k, _ in lie.c.items():
        if g.weight(k) > g.weight(i) + g.weight(j):
            violations.append((i, j, k))

    return GradingCheck(not violations, tuple(violations))


def ww_contract_lie(lie: LieAlgebra, g: Grading) -> LieAlgebra:
    """Keeps c_{ij}^k exactly when weight(k) = weight(i) + weight(j)."""

    check = check_ww_grading(lie, g)
    if not check.valid:
        raise GradingViolation(check.violations)

    def keep(lower: Word, upper: int) -> bool:
        i, j = lower
        return g.weight(upper) == g.weight(i) + g.weight(j)

    result = checked(LieAlgebra(lie.c.filter(keep)), "Graded contraction")
    log.info(
        f"Graded contraction kept {len(result.c)} of {len(lie.c)} constants "
        f"(weights {list(g.weights)})"
    )
    return result


def iw_contract_lie(lie: LieAlgebra, indices: Iterable[int]) -> LieAlgebra:
    """Contracts with respect to the coordinate subalgebra on the given indices."""

    inside = set(indices)
    witness = lie_subalgebra_violation(lie, inside)
    if witness is not None:
        raise NotASubalgebra(sorted(inside), witness)

    g = Grading(0 if i in inside else 1 for i in range(1, lie.dim + 1))
    return ww_contract_lie(lie, g)
