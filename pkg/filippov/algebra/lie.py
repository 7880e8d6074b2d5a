import logging
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .. import util
from . import recheck
from .errors import ArityMismatch, IndexOutOfRange, InternalSpanError
from .fundamental import FundamentalObject, ad_vectors, dot, ker_ad, wedge_basis
from .linalg import (
    ZERO,
    Matrix,
    Rational,
    Subspace,
    Vector,
    echelon_extend,
    kernel,
    rref,
    solve_in_span_many,
    unit_vector,
)
from .nlie import (
    FIReport,
    FIStatus,
    NLieAlgebra,
    change_basis_tensor,
    tensor_bracket,
    verify_fi,
)
from .tensor import AntisymTensor, Entry, Key, Word

log = logging.getLogger("induce")


class LieAlgebra:
    """Ordinary Lie algebra given by structure constants c_{ij}^k (1-based)."""

    dim: int
    c: AntisymTensor
    ji_status: FIStatus

    def __init__(
        self, c: AntisymTensor, ji_status: FIStatus = FIStatus.UNVERIFIED
    ) -> None:
        if c.arity != 2:
            raise ArityMismatch(2, c.arity)

        self.dim = c.dim
        self.c = c
        self.ji_status = ji_status

    @classmethod
    def from_nlie(cls, alg: NLieAlgebra) -> "LieAlgebra":
        """Views a 2-Lie (Filippov) algebra as a Lie algebra; FI and JI coincide."""

        if alg.arity != 2:
            raise ArityMismatch(2, alg.arity)

        return cls(alg.f, alg.fi_status)

    def to_nlie(self) -> NLieAlgebra:
        return NLieAlgebra(self.c, self.ji_status)

    @property
    def verified(self) -> bool:
        return self.ji_status is FIStatus.VERIFIED

    def with_status(self, status: FIStatus) -> "LieAlgebra":
        return LieAlgebra(self.c, status)

    def structure_constant(self, i: int, j: int, k: int) -> Rational:
        return self.c.get((i, j), k)

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.to_nlie().basis_bracket((i, j))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented

        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return (
            f"<LieAlgebra dim {self.dim}, {len(self.c)} constants, "
            f"{self.ji_status.value}>"
        )


class InducedLie:
    """Lie algebra of inner derivations of an n-Lie algebra, with its provenance."""

    lie: LieAlgebra
    source_arity: int
    source_dim: int
    basis_words: Tuple[Word, ...]
    ad_map: Mapping[Word, Vector]
    kernel: Subspace

    def __init__(
        self,
        lie: LieAlgebra,
        source_arity: int,
        source_dim: int,
        basis_words: Iterable[Word],
        ad_map: Mapping[Word, Vector],
        kernel: Subspace,
    ) -> None:
        self.lie = lie
        self.source_arity = source_arity
        self.source_dim = source_dim
        self.basis_words = tuple(basis_words)
        self.ad_map = dict(ad_map)
        self.kernel = kernel

    def basis_object(self, index: int) -> FundamentalObject:
        """Returns the wedge word behind the 1-based basis element as an object."""

        return FundamentalObject.word(self.source_dim, *self.basis_words[index - 1])

    def __repr__(self) -> str:
        return (
            f"<InducedLie dim {self.lie.dim} from arity {self.source_arity}, "
            f"dim {self.source_dim} (ker ad {self.kernel.dim})>"
        )


class Fingerprint(NamedTuple):
    dim: int
    derived: Tuple[int, ...]
    lower_central: Tuple[int, ...]
    center_dim: int
    killing_rank: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "dim": self.dim,
            "derived": list(self.derived),
            "lower_central": list(self.lower_central),
            "center": self.center_dim,
            "killing_rank": self.killing_rank,
        }


def new_lie(dim: int, entries: Iterable[Entry]) -> LieAlgebra:
    """Builds a Lie algebra from ((i, j), k, value) triples without the JI check."""

    return LieAlgebra(AntisymTensor.from_entries(2, dim, entries))


def abelian_lie(dim: int) -> LieAlgebra:
    return LieAlgebra(AntisymTensor.empty(2, dim), FIStatus.VERIFIED)


def direct_sum(*lies: LieAlgebra) -> LieAlgebra:
    """Stacks the given algebras block-diagonally, in order."""

    entries: Dict[Key, Rational] = {}
    offset = 0
    for lie in lies:
        for (i, j), k, value in lie.c.items():
            entries[((i + offset, j + offset), k + offset)] = value
        offset += lie.dim

    status = FIStatus.VERIFIED
    if not all(lie.verified for lie in lies):
        status = FIStatus.UNVERIFIED

    return LieAlgebra(AntisymTensor(2, offset, entries), status)


def bracket(lie: LieAlgebra, x: Sequence[Rational], y: Sequence[Rational]) -> Vector:
    return tensor_bracket(lie.c, [x, y])


def adjoint(lie: LieAlgebra, index: int) -> Matrix:
    """Returns ad e_index; column j holds [e_index, e_j]."""

    if not 1 <= index <= lie.dim:
        raise IndexOutOfRange(index, lie.dim)

    entries = [[ZERO] * lie.dim for _ in range(lie.dim)]
    for j in range(1, lie.dim + 1):
        for k, value in lie.c.column((index, j)).items():
            entries[k - 1][j - 1] = value

    return Matrix.from_rows(entries, lie.dim)


def verify_ji(lie: LieAlgebra) -> FIReport:
    """Checks the Jacobi identity, which is the FI at arity 2."""

    return verify_fi(NLieAlgebra(lie.c))


def verify_lie(lie: LieAlgebra) -> Tuple[LieAlgebra, FIReport]:
    report = verify_ji(lie)
    status = FIStatus.VERIFIED if report.holds else FIStatus.UNVERIFIED
    return lie.with_status(status), report


def checked(lie: LieAlgebra, what: str) -> LieAlgebra:
    """Runs the JI check on a freshly built algebra and records the outcome."""

    result, report = verify_lie(lie)
    if not report.holds:
        log.warning(f"{what} does not satisfy the JI: first violation {report.first}")

    return result


def change_basis_lie(lie: LieAlgebra, p: Matrix) -> LieAlgebra:
    """Rewrites the algebra in the basis given by the columns of p."""

    result = LieAlgebra(change_basis_tensor(lie.c, p), lie.ji_status)
    if lie.verified and recheck.enabled():
        report = verify_ji(result)
        if not report.holds:
            raise AssertionError(f"Basis change broke the JI at {report.first}")

    return result


def induce(alg: NLieAlgebra) -> InducedLie:
    """Builds Lie 𝔊 from a verified n-Lie algebra.

    The basis is the greedy lexicographic selection of wedge words whose ad
    matrices enlarge the span; structure constants come from expressing each
    commutator of basis matrices in that basis.
    """

    alg.require_verified()

    start = util.time.usec()
    pairs = ad_vectors(alg)

    span = Subspace.zero(alg.dim * alg.dim)
    basis_words: List[Word] = []
    basis_vectors: List[Vector] = []
    for word, vector in pairs:
        span, grew = echelon_extend(span, vector)
        if grew:
            basis_words.append(word)
            basis_vectors.append(vector)

    coords = solve_in_span_many(basis_vectors, [v for _, v in pairs])
    ad_map: Dict[Word, Vector] = {}
    for (word, _), coeffs in zip(pairs, coords):
        if coeffs is None:
            raise AssertionError(f"ad{word} left the span it was selected from")
        ad_map[word] = coeffs

    d = alg.dim
    matrices = [Matrix(d, d, v) for v in basis_vectors]
    index_pairs = [
        (i, j) for i in range(len(matrices)) for j in range(i + 1, len(matrices))
    ]
    commutators = [matrices[i].commutator(matrices[j]).entries for i, j in index_pairs]
    solutions = solve_in_span_many(basis_vectors, commutators)

    entries: Dict[Key, Rational] = {}
    for (i, j), coeffs in zip(index_pairs, solutions):
        if coeffs is None:
            raise InternalSpanError((basis_words[i], basis_words[j]))

        for k, value in enumerate(coeffs, start=1):
            if value != 0:
                entries[((i + 1, j + 1), k)] = value

    lie = checked(LieAlgebra(AntisymTensor(2, len(basis_words), entries)), "Lie 𝔊")
    kernel_space = ker_ad(alg)

    log.info(
        f"Induced Lie algebra of dimension {lie.dim} from {len(pairs)} fundamental "
        f"objects (ker ad {kernel_space.dim}) in {util.time.since(start)}"
    )
    return InducedLie(lie, alg.arity, alg.dim, basis_words, ad_map, kernel_space)


def _span_of_brackets(
    lie: LieAlgebra, left: Sequence[Vector], right: Sequence[Vector]
) -> Subspace:
    products = (bracket(lie, u, v) for u in left for v in right)
    return Subspace.span(lie.dim, products)


def _series(lie: LieAlgebra, lower_central: bool) -> Tuple[int, ...]:
    current = Subspace.full(lie.dim)
    dims = [current.dim]
    if lie.dim == 0:
        return tuple(dims)

    generators = current.basis
    while True:
        left = generators if lower_central else current.basis
        following = _span_of_brackets(lie, left, current.basis)
        dims.append(following.dim)
        if following.dim in (0, current.dim):
            return tuple(dims)

        current = following


def derived_series(lie: LieAlgebra) -> Tuple[int, ...]:
    """Returns dims of 𝔤 ⊇ [𝔤,𝔤] ⊇ … until they stop changing or reach 0."""

    return _series(lie, lower_central=False)


def lower_central_series(lie: LieAlgebra) -> Tuple[int, ...]:
    """Returns dims of 𝔤 ⊇ [𝔤,𝔤] ⊇ [𝔤,[𝔤,𝔤]] ⊇ … with the same stopping rule."""

    return _series(lie, lower_central=True)


def center(lie: LieAlgebra) -> Subspace:
    """Returns {x : [x, y] = 0 for all y} in 0-based coordinates."""

    m = lie.dim
    rows = []
    for j in range(1, m + 1):
        for k in range(1, m + 1):
            rows.append([lie.c.get((i, j), k) for i in range(1, m + 1)])

    return kernel(Matrix.from_rows(rows, m))


def killing_form(lie: LieAlgebra) -> Matrix:
    """Returns K_{il} = trace(ad e_i · ad e_l) = Σ_{j,k} c_{ij}^k c_{lk}^j."""

    m = lie.dim
    form = [[ZERO] * m for _ in range(m)]
    for i in range(1, m + 1):
        for l in range(i, m + 1):
            total = ZERO
            for j in range(1, m + 1):
                for k, value in lie.c.column((i, j)).items():
                    other = lie.c.get((l, k), j)
                    if other != 0:
                        total += value * other

            form[i - 1][l - 1] = total
            form[l - 1][i - 1] = total

    return Matrix.from_rows(form, m)


def killing_rank(lie: LieAlgebra) -> int:
    return rref(killing_form(lie)).rank


def fingerprint(lie: LieAlgebra) -> Fingerprint:
    """Returns isomorphism invariants; equal fingerprints do not imply isomorphism."""

    return Fingerprint(
        lie.dim,
        derived_series(lie),
        lower_central_series(lie),
        center(lie).dim,
        killing_rank(lie),
    )


def labelled_constants(
    alg: NLieAlgebra,
) -> Dict[Tuple[Word, Word], FundamentalObject]:
    """Returns word_i · word_j for every ordered pair of wedge basis words."""

    words = wedge_basis(alg.dim, alg.arity - 1)
    objects = {w: FundamentalObject.word(alg.dim, *w) for w in words}
    return {
        (a, b): dot(alg, objects[a], objects[b]) for a in words for b in words
    }


def check_block_antisymmetry(alg: NLieAlgebra) -> bool:
    """Returns whether swapping the two word blocks flips every labelled constant."""

    constants = labelled_constants(alg)
    return all(value == -constants[(b, a)] for (a, b), value in constants.items())


def lie_subalgebra_violation(
    lie: LieAlgebra, indices: Iterable[int]
) -> Optional[Tuple[Word, int, Rational]]:
    """Returns the first c_{ab}^u ≠ 0 with a, b in the set and u outside it."""

    inside = set(indices)
    for index in inside:
        if not 1 <= index <= lie.dim:
            raise IndexOutOfRange(index, lie.dim)

    for lower, upper, value in lie.c.items():
        if upper not in inside and inside.issuperset(lower):
            return lower, upper, value

    return None


def is_lie_subalgebra(lie: LieAlgebra, indices: Iterable[int]) -> bool:
    return lie_subalgebra_violation(lie, indices) is None


def unit(lie: LieAlgebra, index: int) -> Vector:
    """Returns the 1-based basis vector e_index of the algebra."""

    return unit_vector(lie.dim, index - 1)
