import enum
import itertools
import logging
from collections import defaultdict
from typing import DefaultDict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from sympy import LeviCivita

from .. import util
from . import recheck
from .errors import (
    ArityMismatch,
    DimensionMismatch,
    IdentityViolated,
    IndexOutOfRange,
    InvalidArity,
    InvalidSplitting,
    UnverifiedAlgebra,
)
from .linalg import (
    ZERO,
    Matrix,
    Rational,
    Vector,
    add_scaled,
    format_rational,
    is_zero_vector,
    to_rational,
    to_vector,
)
from .tensor import AntisymTensor, Entry, Word

log = logging.getLogger("fi")


class FIStatus(enum.Enum):
    VERIFIED = "verified"
    UNVERIFIED = "unverified"


class FIViolation(NamedTuple):
    k_tuple: Word
    l_tuple: Word
    free_index: int
    residual: Rational

    def __str__(self) -> str:
        k = ",".join(map(str, self.k_tuple))
        l = ",".join(map(str, self.l_tuple))
        return (
            f"k=({k}) l=({l}) index {self.free_index} "
            f"residual {format_rational(self.residual)}"
        )


class FIReport:
    violations: Tuple[FIViolation, ...]
    equations: int

    def __init__(self, violations: Iterable[FIViolation], equations: int) -> None:
        self.violations = tuple(violations)
        self.equations = equations

    @property
    def holds(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[FIViolation]:
        return self.violations[0] if self.violations else None

    def __repr__(self) -> str:
        return f"<FIReport holds={self.holds}, {len(self.violations)} violation(s)>"


class NLieAlgebra:
    arity: int
    dim: int
    f: AntisymTensor
    fi_status: FIStatus

    def __init__(
        self, f: AntisymTensor, fi_status: FIStatus = FIStatus.UNVERIFIED
    ) -> None:
        self.arity = f.arity
        self.dim = f.dim
        self.f = f
        self.fi_status = fi_status

    @property
    def verified(self) -> bool:
        return self.fi_status is FIStatus.VERIFIED

    def with_status(self, status: FIStatus) -> "NLieAlgebra":
        return NLieAlgebra(self.f, status)

    def structure_constant(self, lower: Sequence[int], upper: int) -> Rational:
        return self.f.get(lower, upper)

    def basis_bracket(self, lower: Sequence[int]) -> Vector:
        """Returns [e_{l1},…,e_{ln}] as a coordinate vector."""

        result = [ZERO] * self.dim
        for k, value in self.f.column(lower).items():
            result[k - 1] = value

        return tuple(result)

    def require_verified(self) -> None:
        if not self.verified:
            raise UnverifiedAlgebra()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NLieAlgebra):
            return NotImplemented

        return self.f == other.f

    def __hash__(self) -> int:
        return hash(self.f)

    def __repr__(self) -> str:
        return (
            f"<NLieAlgebra arity {self.arity}, dim {self.dim}, "
            f"{len(self.f)} constants, {self.fi_status.value}>"
        )


class Splitting:
    """Partition of the basis into subalgebra indices i0 and coset indices i1."""

    dim: int
    i0: Tuple[int, ...]
    i1: Tuple[int, ...]

    def __init__(
        self, dim: int, i0: Iterable[int], i1: Optional[Iterable[int]] = None
    ) -> None:
        first = tuple(sorted(int(i) for i in i0))
        if i1 is None:
            second = tuple(i for i in range(1, dim + 1) if i not in first)
        else:
            second = tuple(sorted(int(i) for i in i1))

        for index in first + second:
            if not 1 <= index <= dim:
                raise IndexOutOfRange(index, dim)
        if len(set(first)) != len(first) or len(set(second)) != len(second):
            raise InvalidSplitting("Splitting index sets contain duplicates")
        if set(first) & set(second):
            overlap = sorted(set(first) & set(second))
            raise InvalidSplitting(f"i0 and i1 overlap in {overlap}")
        if len(first) + len(second) != dim:
            raise InvalidSplitting(f"i0 and i1 do not cover all {dim} basis elements")

        self.dim = dim
        self.i0 = first
        self.i1 = second

    def weight(self, word: Iterable[int]) -> int:
        """Returns the number of indices of the word lying in i1."""

        coset = set(self.i1)
        return sum(1 for i in word if i in coset)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Splitting):
            return NotImplemented

        return (self.dim, self.i0, self.i1) == (other.dim, other.i0, other.i1)

    def __hash__(self) -> int:
        return hash((self.dim, self.i0, self.i1))

    def __repr__(self) -> str:
        return f"<Splitting i0={list(self.i0)} i1={list(self.i1)}>"


def new_unchecked(arity: int, dim: int, entries: Iterable[Entry]) -> NLieAlgebra:
    """Builds an algebra from (lower, upper, value) triples without checking the FI."""

    return NLieAlgebra(AntisymTensor.from_entries(arity, dim, entries))


def abelian(arity: int, dim: int) -> NLieAlgebra:
    return NLieAlgebra(AntisymTensor.empty(arity, dim), FIStatus.VERIFIED)


def _check_vectors(dim: int, vectors: Sequence[Sequence[Rational]]) -> None:
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatch(dim, len(v), "vector length")


def tensor_bracket(f: AntisymTensor, args: Sequence[Sequence[Rational]]) -> Vector:
    """Evaluates the multilinear antisymmetric extension of f on the given vectors."""

    if len(args) != f.arity:
        raise ArityMismatch(f.arity, len(args))
    _check_vectors(f.dim, args)

    result = [ZERO] * f.dim
    for word, column in f.lowers():
        minor_rows = [[arg[i - 1] for i in word] for arg in args]
        if any(is_zero_vector(row) for row in minor_rows):
            continue

        minor = Matrix.from_rows(minor_rows).to_domain().det()
        if minor == 0:
            continue

        for k, value in column.items():
            result[k - 1] += minor * value

    return tuple(result)


def change_basis_tensor(f: AntisymTensor, p: Matrix) -> AntisymTensor:
    """Rewrites f in the basis e'_j = Σ_i p[i, j]·e_i."""

    if p.rows != f.dim or p.cols != f.dim:
        raise DimensionMismatch((f.dim, f.dim), (p.rows, p.cols), "basis change shape")

    p_inv = p.inverse()
    columns = [p.column(j) for j in range(f.dim)]
    entries = {}
    for word in itertools.combinations(range(1, f.dim + 1), f.arity):
        image = p_inv.apply(tensor_bracket(f, [columns[i - 1] for i in word]))
        for k, value in enumerate(image, start=1):
            if value != 0:
                entries[(word, k)] = value

    return AntisymTensor(f.arity, f.dim, entries)


def bracket(alg: NLieAlgebra, *args: Sequence[Rational]) -> Vector:
    """Returns the n-bracket [args…] of coordinate vectors."""

    return tensor_bracket(alg.f, [to_vector(a) for a in args])


def fi_defect(
    alg: NLieAlgebra, xs: Sequence[Sequence[Rational]], ys: Sequence[Sequence[Rational]]
) -> Vector:
    """Returns ad_X[Y1,…,Yn] − Σ_i [Y1,…,ad_X Yi,…,Yn], zero when the FI holds."""

    if len(xs) != alg.arity - 1:
        raise ArityMismatch(alg.arity - 1, len(xs))
    if len(ys) != alg.arity:
        raise ArityMismatch(alg.arity, len(ys))

    xs = [to_vector(x) for x in xs]
    ys = [to_vector(y) for y in ys]

    def ad(z: Vector) -> Vector:
        return bracket(alg, *xs, z)

    defect = ad(bracket(alg, *ys))
    for i in range(len(ys)):
        moved = list(ys)
        moved[i] = ad(ys[i])
        defect = add_scaled(defect, bracket(alg, *moved), to_rational(-1))

    return defect


def verify_fi(alg: NLieAlgebra) -> FIReport:
    """Checks the FI in structure-constant form on all strictly increasing tuples.

    For every k-tuple (length n), l-tuple (length n−1) and free upper index it
    compares f_{k}^m f_{l m}^up with Σ_i f_{l k_i}^m f_{k1…m…kn}^up.
    """

    n, d, f = alg.arity, alg.dim, alg.f
    start = util.time.usec()
    violations: List[FIViolation] = []
    equations = 0

    if not f.is_empty():
        indices = range(1, d + 1)
        for ks in itertools.combinations(indices, n):
            col_k = f.column(ks)
            for ls in itertools.combinations(indices, n - 1):
                residual: DefaultDict[int, Rational] = defaultdict(lambda: ZERO)

                for m, a in col_k.items():
                    for up, b in f.column(ls + (m,)).items():
                        residual[up] += a * b

                for i, ki in enumerate(ks):
                    for m, a in f.column(ls + (ki,)).items():
                        replaced = ks[:i] + (m,) + ks[i + 1 :]
                        for up, b in f.column(replaced).items():
                            residual[up] -= a * b

                for up in sorted(residual):
                    if residual[up] != 0:
                        violations.append(FIViolation(ks, ls, up, residual[up]))

                equations += d

    log.debug(
        f"Checked {equations} FI equations (arity {n}, dim {d}) in "
        f"{util.time.since(start)}: {len(violations)} violation(s)"
    )
    return FIReport(violations, equations)


def verify_fi_antisymmetrized(alg: NLieAlgebra) -> FIReport:
    """Checks f_{[k1…kn}^m f_{l1] l2…l(n−1) m}^up = 0.

    The antisymmetrized indices run over strictly increasing (n+1)-tuples,
    reported in the k_tuple slot; l2…l(n−1) fill the l_tuple slot.
    """

    n, d, f = alg.arity, alg.dim, alg.f
    violations: List[FIViolation] = []
    equations = 0

    if not f.is_empty():
        indices = range(1, d + 1)
        for js in itertools.combinations(indices, n + 1):
            for ls in itertools.combinations(indices, n - 2):
                residual: DefaultDict[int, Rational] = defaultdict(lambda: ZERO)

                for p, jp in enumerate(js):
                    sign = -1 if (n - p) % 2 else 1
                    rest = js[:p] + js[p + 1 :]
                    for m, a in f.column(rest).items():
                        for up, b in f.column((jp,) + ls + (m,)).items():
                            residual[up] += sign * a * b

                for up in sorted(residual):
                    if residual[up] != 0:
                        violations.append(FIViolation(js, ls, up, residual[up]))

                equations += d

    return FIReport(violations, equations)


def verify(alg: NLieAlgebra) -> Tuple[NLieAlgebra, FIReport]:
    """Runs verify_fi and returns the algebra upgraded to Verified when it holds."""

    report = verify_fi(alg)
    if report.holds:
        return alg.with_status(FIStatus.VERIFIED), report

    return alg.with_status(FIStatus.UNVERIFIED), report


def require_fi(alg: NLieAlgebra) -> NLieAlgebra:
    """Returns the algebra marked Verified, or raises IdentityViolated."""

    if alg.verified:
        return alg

    result, report = verify(alg)
    if not report.holds:
        raise IdentityViolated("Filippov identity", report.first)

    return result


def simple_a(n: int) -> NLieAlgebra:
    """Returns the simple Euclidean n-Lie algebra A_{n+1} with f = Levi-Civita ε."""

    if n < 2:
        raise InvalidArity(n)

    dim = n + 1
    entries = []
    for lower in itertools.combinations(range(1, dim + 1), n):
        (upper,) = set(range(1, dim + 1)) - set(lower)
        entries.append((lower, upper, to_rational(LeviCivita(*lower, upper))))

    return NLieAlgebra(AntisymTensor.from_entries(n, dim, entries), FIStatus.VERIFIED)


def change_basis_fa(alg: NLieAlgebra, p: Matrix) -> NLieAlgebra:
    """Rewrites the algebra in the basis given by the columns of p."""

    result = NLieAlgebra(change_basis_tensor(alg.f, p), alg.fi_status)
    if alg.verified and recheck.enabled():
        report = verify_fi(result)
        if not report.holds:
            raise AssertionError(f"Basis change broke the FI at {report.first}")

    return result


def subalgebra_violation(
    alg: NLieAlgebra, s: Splitting
) -> Optional[Tuple[Word, int, Rational]]:
    """Returns the first f_{a1…an}^u ≠ 0 with all a in i0 and u in i1, if any."""

    if s.dim != alg.dim:
        raise DimensionMismatch(alg.dim, s.dim, "splitting dimension")

    sub, coset = set(s.i0), set(s.i1)
    for lower, upper, value in alg.f.items():
        if upper in coset and sub.issuperset(lower):
            return lower, upper, value

    return None


def is_subalgebra(alg: NLieAlgebra, s: Splitting) -> bool:
    return subalgebra_violation(alg, s) is None


def ideal_violation(
    alg: NLieAlgebra, s: Splitting
) -> Optional[Tuple[Word, int, Rational]]:
    """Returns the first bracket with an i1 argument that leaves span(i1), if any."""

    if s.dim != alg.dim:
        raise DimensionMismatch(alg.dim, s.dim, "splitting dimension")

    coset = set(s.i1)
    for lower, upper, value in alg.f.items():
        if upper not in coset and coset.intersection(lower):
            return lower, upper, value

    return None


def is_ideal(alg: NLieAlgebra, s: Splitting) -> bool:
    return ideal_violation(alg, s) is None


def abelian_violation(
    alg: NLieAlgebra, s: Splitting, minimum: int = 2
) -> Optional[Tuple[Word, int, Rational]]:
    """Returns the first nonzero bracket with at least `minimum` i1 arguments."""

    if s.dim != alg.dim:
        raise DimensionMismatch(alg.dim, s.dim, "splitting dimension")

    for lower, upper, value in alg.f.items():
        if s.weight(lower) >= minimum:
            return lower, upper, value

    return None


def is_abelian_fa(alg: NLieAlgebra) -> bool:
    return alg.f.is_empty()
