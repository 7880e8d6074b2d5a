import logging
from math import comb

import pytest

from filippov.algebra import contraction, lie, nlie
from filippov.algebra.analysis import match_structure_constants
from filippov.algebra.errors import ArityMismatch, UnverifiedAlgebra
from filippov.algebra.fundamental import FundamentalObject, wedge_basis
from filippov.algebra.linalg import Matrix, unit_vector


def e2() -> lie.LieAlgebra:
    contracted = contraction.contract_fa(nlie.simple_a(2), nlie.Splitting(3, [3]))
    return lie.LieAlgebra.from_nlie(contracted)


def lie_c(n: int) -> lie.InducedLie:
    alg = nlie.simple_a(n)
    return lie.induce(contraction.contract_fa(alg, nlie.Splitting(n + 1, range(1, n))))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_induced_dimension_of_simple_algebras(n):
    il = lie.induce(nlie.simple_a(n))

    assert il.lie.dim == n * (n + 1) // 2
    assert il.kernel.dim == 0
    assert il.lie.verified


def test_lie_a4_basis(lie_a4):
    assert lie_a4.basis_words == tuple(wedge_basis(4, 2))
    assert lie_a4.basis_object(1) == FundamentalObject.word(4, 1, 2)
    assert lie_a4.ad_map[(3, 4)] == unit_vector(6, 5)


def test_lie_a4_is_so4(lie_a4):
    assert lie.fingerprint(lie_a4.lie) == lie.Fingerprint(6, (6, 6), (6, 6), 0, 6)


def test_induce_needs_verified_algebra(corrupted_a4):
    with pytest.raises(UnverifiedAlgebra):
        lie.induce(corrupted_a4)


def test_induce_of_abelian_is_zero():
    il = lie.induce(nlie.abelian(3, 4))

    assert il.lie.dim == 0
    assert il.kernel.dim == 6
    assert lie.fingerprint(il.lie) == lie.Fingerprint(0, (0,), (0,), 0, 0)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_contracted_induced_dimension(n):
    il = lie_c(n)

    assert il.lie.dim == 2 * n - 1
    assert il.kernel.dim == comb(n + 1, n - 1) - (2 * n - 1)


def test_lie_a4_c_fingerprint():
    assert lie.fingerprint(lie_c(3).lie) == lie.Fingerprint(
        5, (5, 4, 0), (5, 4, 4), 0, 1
    )


def test_e2_series():
    algebra = e2()

    assert algebra.dim == 3
    assert lie.derived_series(algebra) == (3, 2, 0)
    assert lie.lower_central_series(algebra) == (3, 2, 2)
    assert lie.center(algebra).dim == 0
    assert lie.killing_rank(algebra) == 1


def test_e2_is_its_own_inner_derivation_algebra():
    algebra = e2()
    il = lie.induce(algebra.to_nlie())

    assert il.lie.dim == 3
    assert match_structure_constants(il.lie, algebra, Matrix.identity(3)).holds


def test_so3_killing_form(so3):
    assert lie.killing_form(so3) == Matrix.identity(3).scaled(-2)
    assert lie.fingerprint(so3) == lie.Fingerprint(3, (3, 3), (3, 3), 0, 3)


def test_heisenberg_invariants(heisenberg):
    z = lie.center(heisenberg)

    assert z.dim == 1
    assert z.contains(unit_vector(3, 2))
    assert lie.fingerprint(heisenberg) == lie.Fingerprint(3, (3, 1, 0), (3, 1, 0), 1, 0)


def test_abelian_fingerprint():
    assert lie.fingerprint(lie.abelian_lie(3)) == lie.Fingerprint(
        3, (3, 0), (3, 0), 3, 0
    )


def test_direct_sum(so3, lie_a4):
    total = lie.direct_sum(so3, so3)

    assert total.dim == 6
    assert total.structure_constant(4, 5, 6) == 1
    assert total.structure_constant(1, 4, 6) == 0
    assert lie.fingerprint(total) == lie.fingerprint(lie_a4.lie)


def test_jacobi_failure_is_reported(caplog):
    broken = lie.new_lie(3, [((1, 2), 3, 1), ((1, 3), 1, 1)])

    assert not lie.verify_ji(broken).holds
    with caplog.at_level(logging.WARNING, logger="induce"):
        result = lie.checked(broken, "Broken algebra")

    assert not result.verified
    assert "Broken algebra does not satisfy the JI" in caplog.text


def test_basis_change_keeps_fingerprint(so3, heisenberg, random_invertible):
    for algebra in (so3, heisenberg):
        changed = lie.change_basis_lie(algebra, random_invertible(3))

        assert lie.verify_ji(changed).holds
        assert lie.fingerprint(changed) == lie.fingerprint(algebra)


def test_adjoint(so3):
    ad = lie.adjoint(so3, 1)

    # [e1, e2] = e3
    assert ad[2, 1] == 1
    assert ad.trace() == 0


def test_lie_subalgebras(so3):
    assert lie.is_lie_subalgebra(so3, [1])
    assert not lie.is_lie_subalgebra(so3, [1, 2])
    assert lie.lie_subalgebra_violation(so3, [1, 2]) == ((1, 2), 3, 1)


def test_from_nlie_needs_arity_two(a4):
    with pytest.raises(ArityMismatch):
        lie.LieAlgebra.from_nlie(a4)


@pytest.mark.parametrize("n", [3, 4])
def test_labelled_constants_are_block_antisymmetric(n):
    alg = nlie.simple_a(n)
    words = wedge_basis(alg.dim, n - 1)

    assert len(lie.labelled_constants(alg)) == len(words) ** 2
    assert lie.check_block_antisymmetry(alg)
