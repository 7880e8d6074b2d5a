import random
from fractions import Fraction
from typing import Callable

import pytest

from filippov.algebra import contraction, lie, nlie, recheck
from filippov.algebra.linalg import Matrix, rref


@pytest.fixture(autouse=True)
def debug_recheck():
    recheck.configure(True)
    yield
    recheck.configure(None)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xF11199)


@pytest.fixture
def a4() -> nlie.NLieAlgebra:
    return nlie.simple_a(3)


@pytest.fixture
def corrupted_a4(a4: nlie.NLieAlgebra) -> nlie.NLieAlgebra:
    """A4 with the extra constant f_{123}^1 = 1, which breaks the FI."""

    entries = list(a4.f.items()) + [((1, 2, 3), 1, 1)]
    return nlie.new_unchecked(3, 4, entries)


@pytest.fixture
def so3() -> lie.LieAlgebra:
    return lie.LieAlgebra.from_nlie(nlie.simple_a(2))


@pytest.fixture
def lie_a4(a4: nlie.NLieAlgebra) -> lie.InducedLie:
    return lie.induce(a4)


@pytest.fixture
def heisenberg() -> lie.LieAlgebra:
    result, _ = lie.verify_lie(lie.new_lie(3, [((1, 2), 3, 1)]))
    return result


@pytest.fixture
def random_invertible(rng: random.Random) -> Callable[[int], Matrix]:
    def make(size: int) -> Matrix:
        while True:
            rows = [
                [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(size)]
                for _ in range(size)
            ]
            m = Matrix.from_rows(rows, size)
            if rref(m).rank == size:
                return m

    return make


def contracted_simple(n: int) -> nlie.NLieAlgebra:
    s = nlie.Splitting(n + 1, range(1, n))
    return contraction.contract_fa(nlie.simple_a(n), s)


def pseudo_euclidean_a4() -> nlie.NLieAlgebra:
    """A4 with f_{124}^3 flipped to +1."""

    entries = [
        (lower, upper, 1 if (lower, upper) == ((1, 2, 4), 3) else value)
        for lower, upper, value in nlie.simple_a(3).f.items()
    ]
    return nlie.require_fi(nlie.new_unchecked(3, 4, entries))


FA_CORPUS = {
    "a4": lambda: nlie.simple_a(3),
    "a5": lambda: nlie.simple_a(4),
    "a4c": lambda: contracted_simple(3),
    "a5c": lambda: contracted_simple(4),
    "pseudo_a4": pseudo_euclidean_a4,
}


@pytest.fixture(params=sorted(FA_CORPUS))
def verified_fa(request) -> nlie.NLieAlgebra:
    """Every algebra of the verified corpus in turn."""

    return FA_CORPUS[request.param]()
