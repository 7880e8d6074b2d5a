import fractions
import re
from typing import (
    Any,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .errors import (
    DependentBasis,
    DimensionMismatch,
    FormatError,
    NotInSpan,
    SingularMatrix,
)

# Elements of sympy's QQ domain: always reduced, denominator positive, exact
Rational = Any
RationalLike = Union[int, str, fractions.Fraction, Rational]
Vector = Tuple[Rational, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")

ZERO = QQ.zero
ONE = QQ.one


def to_rational(value: RationalLike) -> Rational:
    """Converts an int, "p/q" string, Fraction or sympy rational into a QQ element."""

    if isinstance(value, QQ.dtype):
        return value
    if isinstance(value, bool):
        raise FormatError(f"Booleans are not rational values: {value!r}")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, fractions.Fraction):
        return QQ(value.numerator, value.denominator)
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational / sympy.Integer
        return QQ(int(value.p), int(value.q))

    raise FormatError(f"Cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Rational:
    """Parses a decimal integer or "p/q" string."""

    match = _RATIONAL_RE.match(text)
    if match is None:
        raise FormatError(f"Invalid rational literal '{text}'")

    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise FormatError(f"Zero denominator in '{text}'")

    return QQ(num, den)


def format_rational(value: Rational) -> str:
    """Formats a rational as "p" or "p/q" in lowest terms."""

    value = to_rational(value)
    num = int(value.numerator)
    den = int(value.denominator)
    if den == 1:
        return str(num)

    return f"{num}/{den}"


def to_vector(values: Iterable[RationalLike]) -> Vector:
    return tuple(to_rational(v) for v in values)


def zero_vector(length: int) -> Vector:
    return (ZERO,) * length


def unit_vector(length: int, index: int) -> Vector:
    """Returns the 0-based standard basis vector e_index."""

    return tuple(ONE if i == index else ZERO for i in range(length))


def is_zero_vector(v: Sequence[Rational]) -> bool:
    return all(x == 0 for x in v)


def add_scaled(v: Sequence[Rational], w: Sequence[Rational], c: Rational) -> Vector:
    """Returns v + c·w."""

    if c == 0:
        return tuple(v)

    return tuple(a + c * b for a, b in zip(v, w))


def combine(
    coeffs: Sequence[Rational], vectors: Sequence[Sequence[Rational]]
) -> Vector:
    """Returns the linear combination Σ coeffs[i]·vectors[i]."""

    if not vectors:
        return ()

    result = zero_vector(len(vectors[0]))
    for c, v in zip(coeffs, vectors):
        result = add_scaled(result, v, c)

    return result


class Matrix:
    rows: int
    cols: int
    entries: Tuple[Rational, ...]

    def __init__(self, rows: int, cols: int, entries: Iterable[RationalLike]) -> None:
        values = tuple(to_rational(x) for x in entries)
        if len(values) != rows * cols:
            raise DimensionMismatch(rows * cols, len(values), "entry count")

        self.rows = rows
        self.cols = cols
        self.entries = values

    @classmethod
    def from_rows(
        cls, rows: Sequence[Sequence[RationalLike]], cols: Optional[int] = None
    ) -> "Matrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0

        for row in rows:
            if len(row) != cols:
                raise DimensionMismatch(cols, len(row), "row length")

        return cls(len(rows), cols, (x for row in rows for x in row))

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[RationalLike]], rows: Optional[int] = None
    ) -> "Matrix":
        if rows is None:
            rows = len(columns[0]) if columns else 0

        return cls.from_rows(columns, rows).transpose()

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(
            size,
            size,
            (ONE if i == j else ZERO for i in range(size) for j in range(size)),
        )

    @classmethod
    def from_domain(cls, dm: DomainMatrix) -> "Matrix":
        rows, cols = dm.shape
        if rows == 0 or cols == 0:
            return cls.zero(rows, cols)

        return cls(rows, cols, (QQ.convert(x) for row in dm.to_list() for x in row))

    def to_domain(self) -> DomainMatrix:
        rows = [list(row) for row in self.to_rows()]
        return DomainMatrix(rows, (self.rows, self.cols), QQ)

    def __getitem__(self, key: Tuple[int, int]) -> Rational:
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j :: self.cols] if self.cols else ()

    def to_rows(self) -> List[Vector]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            (self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def is_zero(self) -> bool:
        return is_zero_vector(self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def trace(self) -> Rational:
        if not self.is_square():
            raise DimensionMismatch(
                (self.rows, self.rows), (self.rows, self.cols), "shape"
            )

        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def scaled(self, c: RationalLike) -> "Matrix":
        c = to_rational(c)
        return Matrix(self.rows, self.cols, (c * x for x in self.entries))

    def apply(self, v: Sequence[Rational]) -> Vector:
        """Returns the matrix-vector product M·v."""

        if len(v) != self.cols:
            raise DimensionMismatch(self.cols, len(v), "vector length")

        return tuple(
            sum((a * b for a, b in zip(self.row(i), v) if a != 0), ZERO)
            for i in range(self.rows)
        )

    def _check_same_shape(self, other: "Matrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch(
                (self.rows, self.cols), (other.rows, other.cols), "shape"
            )

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        pairs = zip(self.entries, other.entries)
        return Matrix(self.rows, self.cols, (a + b for a, b in pairs))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        pairs = zip(self.entries, other.entries)
        return Matrix(self.rows, self.cols, (a - b for a, b in pairs))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, (-x for x in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(self.cols, other.rows, "inner dimension")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zero(self.rows, other.cols)

        return Matrix.from_domain(self.to_domain().matmul(other.to_domain()))

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch(
                (self.rows, self.rows), (self.rows, self.cols), "shape"
            )
        if self.rows == 0:
            return self

        rank = rref(self).rank
        if rank < self.rows:
            raise SingularMatrix(rank, self.rows)

        return Matrix.from_domain(self.to_domain().inv())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented

        return (self.rows, self.cols, self.entries) == (
            other.rows,
            other.cols,
            other.entries,
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        rows = "; ".join(
            " ".join(format_rational(x) for x in row) for row in self.to_rows()
        )
        return f"<Matrix {self.rows}x{self.cols} [{rows}]>"


class Rref(NamedTuple):
    rank: int
    reduced: Matrix
    pivot_cols: Tuple[int, ...]


def rref(m: Matrix) -> Rref:
    """Returns the reduced row-echelon form of m over the rationals."""

    if m.rows == 0 or m.cols == 0:
        return Rref(0, Matrix.zero(m.rows, m.cols), ())

    reduced, pivots = m.to_domain().rref()
    return Rref(len(pivots), Matrix.from_domain(reduced), tuple(pivots))


class Subspace:
    ambient_dim: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    def __init__(
        self, ambient_dim: int, basis: Sequence[Vector], pivots: Sequence[int]
    ) -> None:
        # Callers outside this module should use span() to get the canonical form
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(v) for v in basis)
        self.pivots = tuple(pivots)

    @classmethod
    def span(
        cls, ambient_dim: int, vectors: Iterable[Sequence[RationalLike]]
    ) -> "Subspace":
        rows = [to_vector(v) for v in vectors]
        for row in rows:
            if len(row) != ambient_dim:
                raise DimensionMismatch(ambient_dim, len(row), "vector length")

        rows = [row for row in rows if not is_zero_vector(row)]
        if not rows:
            return cls.zero(ambient_dim)

        red = rref(Matrix.from_rows(rows, ambient_dim))
        basis = [red.reduced.row(i) for i in range(red.rank)]
        return cls(ambient_dim, basis, red.pivot_cols)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, (), ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.coordinate(ambient_dim, range(ambient_dim))

    @classmethod
    def coordinate(cls, ambient_dim: int, indices: Iterable[int]) -> "Subspace":
        """Returns the span of the 0-based standard basis vectors e_i, i ∈ indices."""

        idx = sorted(set(indices))
        return cls(ambient_dim, [unit_vector(ambient_dim, i) for i in idx], idx)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[Rational]) -> Vector:
        """Returns v minus its component along the basis; zero at every pivot column."""

        if len(v) != self.ambient_dim:
            raise DimensionMismatch(self.ambient_dim, len(v), "vector length")

        result = tuple(v)
        for b, p in zip(self.basis, self.pivots):
            result = add_scaled(result, b, -result[p])

        return result

    def contains(self, v: Sequence[Rational]) -> bool:
        return is_zero_vector(self.reduce(v))

    def coordinates(self, v: Sequence[Rational]) -> Vector:
        """Returns the coordinates of v in the canonical basis, or raises NotInSpan."""

        if not self.contains(v):
            raise NotInSpan()

        return tuple(v[p] for p in self.pivots)

    def is_subspace_of(self, other: "Subspace") -> bool:
        return self.ambient_dim == other.ambient_dim and all(
            other.contains(b) for b in self.basis
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented

        return (self.ambient_dim, self.basis) == (other.ambient_dim, other.basis)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"<Subspace dim {self.dim} in {self.ambient_dim}>"


def kernel(m: Matrix) -> Subspace:
    """Returns the null space of m as a canonical Subspace."""

    red = rref(m)
    pivot_set = set(red.pivot_cols)
    vectors = []
    for free in range(m.cols):
        if free in pivot_set:
            continue

        v = [ZERO] * m.cols
        v[free] = ONE
        for row, p in enumerate(red.pivot_cols):
            v[p] = -red.reduced[row, free]

        vectors.append(v)

    return Subspace.span(m.cols, vectors)


def solve_in_span_many(
    basis_vectors: Sequence[Sequence[RationalLike]],
    targets: Sequence[Sequence[RationalLike]],
) -> List[Optional[Vector]]:
    """Expresses each target in the given independent basis with one elimination.

    Entries are None for targets outside the span.
    """

    basis = [to_vector(v) for v in basis_vectors]
    goals = [to_vector(t) for t in targets]
    k = len(basis)
    if k == 0:
        return [() if is_zero_vector(t) else None for t in goals]

    length = len(basis[0])
    for v in basis + goals:
        if len(v) != length:
            raise DimensionMismatch(length, len(v), "vector length")

    red = rref(Matrix.from_columns(basis + goals, length))
    if red.pivot_cols[:k] != tuple(range(k)):
        raise DependentBasis(k, sum(1 for p in red.pivot_cols if p < k))

    results: List[Optional[Vector]] = []
    for t in range(len(goals)):
        col = k + t
        if any(red.reduced[i, col] != 0 for i in range(k, red.reduced.rows)):
            results.append(None)
        else:
            results.append(tuple(red.reduced[i, col] for i in range(k)))

    return results


def solve_in_span(
    basis_vectors: Sequence[Sequence[RationalLike]], target: Sequence[RationalLike]
) -> Vector:
    """Returns the coefficients c with Σ c_i·basis_i = target, or raises NotInSpan."""

    (coeffs,) = solve_in_span_many(basis_vectors, [target])
    if coeffs is None:
        raise NotInSpan()

    return coeffs


def echelon_extend(
    current: Subspace, candidate: Sequence[RationalLike]
) -> Tuple[Subspace, bool]:
    """Returns span(current ∪ {candidate}) and whether the candidate enlarged it."""

    vector = to_vector(candidate)
    if current.contains(vector):
        return current, False

    return Subspace.span(current.ambient_dim, current.basis + (vector,)), True
