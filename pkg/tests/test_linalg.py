from fractions import Fraction

import pytest
from sympy.polys.domains import QQ

from filippov.algebra.errors import (
    DependentBasis,
    DimensionMismatch,
    FormatError,
    NotInSpan,
    SingularMatrix,
)
from filippov.algebra.linalg import (
    Matrix,
    Subspace,
    combine,
    echelon_extend,
    format_rational,
    kernel,
    parse_rational,
    rref,
    solve_in_span,
    solve_in_span_many,
    to_rational,
)


@pytest.mark.parametrize(
    "text, expected",
    [("3", QQ(3)), ("-3/6", QQ(-1, 2)), (" 4 / 8 ", QQ(1, 2)), ("+7", QQ(7))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1/0", "abc", "1.5", "", "2/-3"])
def test_parse_rational_rejects(text):
    with pytest.raises(FormatError):
        parse_rational(text)


def test_to_rational_kinds():
    assert to_rational(Fraction(3, 4)) == QQ(3, 4)
    assert to_rational(5) == QQ(5)
    assert to_rational("10/4") == QQ(5, 2)

    with pytest.raises(FormatError):
        to_rational(True)
    with pytest.raises(FormatError):
        to_rational(0.5)


def test_format_rational_lowest_terms():
    assert format_rational(QQ(6, -4)) == "-3/2"
    assert format_rational(QQ(8, 4)) == "2"
    assert format_rational(QQ(0)) == "0"


def test_rref_rank_and_pivots():
    red = rref(Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]]))

    assert red.rank == 2
    assert red.pivot_cols == (0, 2)


def test_inverse():
    m = Matrix.from_rows([[2, 1], [1, 1]])

    assert m.inverse() == Matrix.from_rows([[1, -1], [-1, 2]])
    assert m @ m.inverse() == Matrix.identity(2)


def test_inverse_singular():
    with pytest.raises(SingularMatrix) as e:
        Matrix.from_rows([[1, 2], [2, 4]]).inverse()

    assert e.value.rank == 1


def test_random_inverse(random_invertible):
    for size in range(1, 6):
        m = random_invertible(size)
        assert m.inverse() @ m == Matrix.identity(size)


def test_matrix_shape_checks():
    with pytest.raises(DimensionMismatch):
        Matrix.from_rows([[1, 2], [3]])
    with pytest.raises(DimensionMismatch):
        Matrix.identity(2) @ Matrix.identity(3)


def test_trace_and_commutator():
    a = Matrix.from_rows([[0, 1], [0, 0]])
    b = Matrix.from_rows([[0, 0], [1, 0]])

    assert a.commutator(b) == Matrix.from_rows([[1, 0], [0, -1]])
    assert a.commutator(b).trace() == 0


def test_kernel():
    k = kernel(Matrix.from_rows([[1, 1, 1]]))

    assert k.dim == 2
    for v in k.basis:
        assert sum(v) == 0


def test_kernel_of_invertible_is_zero(random_invertible):
    assert kernel(random_invertible(4)).dim == 0


def test_subspace_membership_and_coordinates():
    s = Subspace.span(3, [[1, 0, 1], [0, 1, 1], [1, 1, 2]])

    assert s.dim == 2
    assert s.contains(to_vec(2, 3, 5))
    assert not s.contains(to_vec(0, 0, 1))
    assert s.coordinates(to_vec(2, 3, 5)) == to_vec(2, 3)

    with pytest.raises(NotInSpan):
        s.coordinates(to_vec(0, 0, 1))


def test_subspace_inclusion():
    line = Subspace.span(3, [[1, 1, 0]])
    plane = Subspace.coordinate(3, [0, 1])

    assert line.is_subspace_of(plane)
    assert not plane.is_subspace_of(line)
    assert Subspace.zero(3).is_subspace_of(line)
    assert plane.is_subspace_of(Subspace.full(3))


def test_subspace_canonical_basis():
    a = Subspace.span(2, [[2, 2], [1, -1]])

    assert a == Subspace.full(2)


def test_solve_in_span():
    basis = [[1, 0, 1], [0, 1, 1]]

    assert solve_in_span(basis, [2, 3, 5]) == to_vec(2, 3)

    with pytest.raises(NotInSpan):
        solve_in_span(basis, [0, 0, 1])


def test_solve_in_span_recombines_exactly(rng):
    basis = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(3)]
    basis = Subspace.span(4, basis).basis
    coeffs = tuple(
        to_rational(Fraction(rng.randint(-9, 9), rng.randint(1, 5))) for _ in basis
    )
    target = combine(coeffs, basis)

    assert solve_in_span(basis, target) == coeffs


def test_solve_in_span_many_marks_outsiders():
    results = solve_in_span_many([[1, 0], [1, 1]], [[0, 1], [3, 3]])

    assert results == [to_vec(-1, 1), to_vec(0, 3)]
    assert solve_in_span_many([[1, 0, 0]], [[0, 1, 0]]) == [None]


def test_solve_in_span_dependent_basis():
    with pytest.raises(DependentBasis):
        solve_in_span_many([[1, 1], [2, 2]], [[1, 1]])


def test_echelon_extend():
    s = Subspace.zero(3)
    s, grew = echelon_extend(s, [1, 0, 0])
    assert grew

    s, grew = echelon_extend(s, [2, 0, 0])
    assert not grew
    assert s.dim == 1


def to_vec(*values):
    return tuple(QQ(v) for v in values)
