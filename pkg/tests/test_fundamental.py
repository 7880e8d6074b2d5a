import itertools
from fractions import Fraction

import pytest

from filippov.algebra import nlie
from filippov.algebra.errors import ArityMismatch, DimensionMismatch, UnverifiedAlgebra
from filippov.algebra.fundamental import (
    FundamentalObject,
    ad_matrix,
    check_derivation_identity,
    dot,
    ker_ad,
    wedge_basis,
)
from filippov.algebra.linalg import format_rational


def test_wedge_basis_order():
    assert wedge_basis(4, 2) == [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]
    assert len(wedge_basis(6, 4)) == 15


def test_terms_are_canonical():
    swapped = FundamentalObject.from_terms(2, 4, [((2, 1), 1)])

    assert swapped == FundamentalObject.word(4, 1, 2).scaled(-1)
    assert FundamentalObject.from_terms(2, 4, [((3, 3), 5)]).is_zero()


def test_arithmetic():
    x = FundamentalObject.word(4, 1, 2)
    y = FundamentalObject.word(4, 3, 4)

    assert (x + y) - y == x
    assert (x - x).is_zero()
    assert -(-x) == x
    assert x.scaled(0).is_zero()


def test_coordinates():
    x = FundamentalObject.from_terms(2, 4, [((1, 4), 1), ((3, 2), Fraction(1, 2))])

    assert FundamentalObject.from_coordinates(2, 4, x.coordinates()) == x
    coords = [format_rational(c) for c in x.coordinates()]
    assert coords == ["0", "0", "1", "-1/2", "0", "0"]


def test_str():
    x = FundamentalObject.from_terms(2, 4, [((1, 4), 1), ((2, 3), Fraction(-1, 2))])

    assert str(x) == "+1·(1∧4) -1/2·(2∧3)"
    assert str(FundamentalObject.zero(2, 4)) == "0"


def test_shape_checks(a4):
    with pytest.raises(ArityMismatch):
        FundamentalObject.from_terms(2, 4, [((1, 2, 3), 1)])
    with pytest.raises(DimensionMismatch):
        FundamentalObject.word(4, 1, 2) + FundamentalObject.word(5, 1, 2)
    with pytest.raises(ArityMismatch):
        ad_matrix(a4, FundamentalObject.word(4, 1, 2, 3))


def test_ad_matrix_of_a4(a4):
    m = ad_matrix(a4, FundamentalObject.word(4, 1, 2))

    # [X1, X2, X3] = X4 and [X1, X2, X4] = -X3
    assert m[3, 2] == 1
    assert m[2, 3] == -1
    assert sum(1 for x in m.entries if x != 0) == 2


@pytest.mark.parametrize("n", [3, 4])
def test_derivation_identity_exhaustive(n):
    alg = nlie.simple_a(n)
    words = wedge_basis(alg.dim, n - 1)
    objects = [FundamentalObject.word(alg.dim, *w) for w in words]

    for x, y in itertools.product(objects, repeat=2):
        assert check_derivation_identity(alg, x, y)


@pytest.mark.parametrize("n", [3, 4])
def test_derivation_identity_random(n, rng):
    alg = nlie.simple_a(n)
    words = wedge_basis(alg.dim, n - 1)

    for _ in range(10):
        x, y = (
            FundamentalObject.from_terms(
                n - 1,
                alg.dim,
                [(w, Fraction(rng.randint(-3, 3), rng.randint(1, 4))) for w in words],
            )
            for _ in range(2)
        )
        assert check_derivation_identity(alg, x, y)


@pytest.mark.parametrize("n", [3, 4])
def test_dot_is_antisymmetric_for_simple_algebras(n):
    alg = nlie.simple_a(n)
    objects = [FundamentalObject.word(alg.dim, *w) for w in wedge_basis(alg.dim, n - 1)]

    for x, y in itertools.product(objects, repeat=2):
        assert dot(alg, x, y) == -dot(alg, y, x)


def test_dot_in_a4(a4):
    x = FundamentalObject.word(4, 1, 2)
    y = FundamentalObject.word(4, 1, 3)

    # [X1,X2,X1]∧X3 + X1∧[X1,X2,X3] = X1∧X4
    assert dot(a4, x, y) == FundamentalObject.word(4, 1, 4)


def test_derivation_identity_needs_verified_algebra(corrupted_a4):
    x = FundamentalObject.word(4, 1, 2)

    with pytest.raises(UnverifiedAlgebra):
        check_derivation_identity(corrupted_a4, x, x)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_simple_algebras_have_trivial_ker_ad(n):
    assert ker_ad(nlie.simple_a(n)).dim == 0


def test_ker_ad_of_abelian_is_everything():
    assert ker_ad(nlie.abelian(3, 4)).dim == 6


def basis_objects(alg: nlie.NLieAlgebra):
    return [
        FundamentalObject.word(alg.dim, *w)
        for w in wedge_basis(alg.dim, alg.arity - 1)
    ]


def test_dot_acts_as_a_derivation_of_itself(verified_fa):
    objects = basis_objects(verified_fa)

    def d(x, y):
        return dot(verified_fa, x, y)

    for x, y, z in itertools.product(objects, repeat=3):
        assert d(x, d(y, z)) - d(y, d(x, z)) == d(d(x, y), z)


def test_ad_of_dot_is_antisymmetric(verified_fa):
    objects = basis_objects(verified_fa)

    for x, y in itertools.combinations_with_replacement(objects, 2):
        left = ad_matrix(verified_fa, dot(verified_fa, x, y))
        right = ad_matrix(verified_fa, dot(verified_fa, y, x))
        assert left == -right


def test_derivation_identity_on_corpus(verified_fa):
    objects = basis_objects(verified_fa)

    for x, y in itertools.product(objects, repeat=2):
        assert check_derivation_identity(verified_fa, x, y)
