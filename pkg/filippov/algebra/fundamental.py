import itertools
import logging
from collections import defaultdict
from typing import DefaultDict, Dict, Iterable, List, Mapping, Sequence, Tuple

from .. import util
from .errors import ArityMismatch, DimensionMismatch
from .linalg import (
    ZERO,
    Matrix,
    Rational,
    RationalLike,
    Subspace,
    Vector,
    format_rational,
    kernel,
    to_rational,
)
from .nlie import NLieAlgebra
from .tensor import Word, canonical_word

log = logging.getLogger("kernel")


def wedge_basis(dim: int, length: int) -> List[Word]:
    """Returns the increasing words of the given length in lexicographic order."""

    return list(itertools.combinations(range(1, dim + 1), length))


class FundamentalObject:
    """Formal rational combination of wedge words X_{i1}∧…∧X_{i(n−1)}."""

    arity_minus_one: int
    dim: int
    terms: Mapping[Word, Rational]

    def __init__(
        self, arity_minus_one: int, dim: int, terms: Mapping[Word, Rational]
    ) -> None:
        self.arity_minus_one = arity_minus_one
        self.dim = dim
        self.terms = dict(sorted((w, c) for w, c in terms.items() if c != 0))

    @classmethod
    def from_terms(
        cls, length: int, dim: int, items: Iterable[Tuple[Sequence[int], RationalLike]]
    ) -> "FundamentalObject":
        """Canonicalizes (word, coefficient) pairs; words with repeats vanish."""

        terms: DefaultDict[Word, Rational] = defaultdict(lambda: ZERO)
        for raw_word, raw_coeff in items:
            word = tuple(int(i) for i in raw_word)
            if len(word) != length:
                raise ArityMismatch(length, len(word))
            for index in word:
                if not 1 <= index <= dim:
                    raise DimensionMismatch(f"1..{dim}", index, "word index")

            sign, canon = canonical_word(word)
            if sign != 0:
                terms[canon] += sign * to_rational(raw_coeff)

        return cls(length, dim, terms)

    @classmethod
    def word(cls, dim: int, *indices: int) -> "FundamentalObject":
        return cls.from_terms(len(indices), dim, [(indices, 1)])

    @classmethod
    def zero(cls, length: int, dim: int) -> "FundamentalObject":
        return cls(length, dim, {})

    @classmethod
    def from_coordinates(
        cls, length: int, dim: int, coords: Sequence[RationalLike]
    ) -> "FundamentalObject":
        words = wedge_basis(dim, length)
        if len(coords) != len(words):
            raise DimensionMismatch(len(words), len(coords), "wedge coordinate count")

        return cls(length, dim, {w: to_rational(c) for w, c in zip(words, coords)})

    def coordinates(self) -> Vector:
        words = wedge_basis(self.dim, self.arity_minus_one)
        return tuple(self.terms.get(w, ZERO) for w in words)

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "FundamentalObject") -> None:
        if (self.arity_minus_one, self.dim) != (other.arity_minus_one, other.dim):
            raise DimensionMismatch(
                (self.arity_minus_one, self.dim),
                (other.arity_minus_one, other.dim),
                "fundamental object shape",
            )

    def __add__(self, other: "FundamentalObject") -> "FundamentalObject":
        self._check_compatible(other)
        terms: Dict[Word, Rational] = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, ZERO) + c

        return FundamentalObject(self.arity_minus_one, self.dim, terms)

    def __neg__(self) -> "FundamentalObject":
        return self.scaled(-1)

    def __sub__(self, other: "FundamentalObject") -> "FundamentalObject":
        return self + (-other)

    def scaled(self, c: RationalLike) -> "FundamentalObject":
        c = to_rational(c)
        return FundamentalObject(
            self.arity_minus_one, self.dim, {w: c * v for w, v in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FundamentalObject):
            return NotImplemented

        return (self.arity_minus_one, self.dim, self.terms) == (
            other.arity_minus_one,
            other.dim,
            other.terms,
        )

    def __hash__(self) -> int:
        return hash((self.arity_minus_one, self.dim, tuple(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"

        parts = []
        for word, coeff in self.terms.items():
            sign = "-" if coeff < 0 else "+"
            wedge = "∧".join(map(str, word))
            parts.append(f"{sign}{format_rational(abs(coeff))}·({wedge})")

        return " ".join(parts)

    def __repr__(self) -> str:
        return f"<FundamentalObject {self}>"


def _check_object(alg: NLieAlgebra, x: FundamentalObject) -> None:
    if x.arity_minus_one != alg.arity - 1:
        raise ArityMismatch(alg.arity - 1, x.arity_minus_one)
    if x.dim != alg.dim:
        raise DimensionMismatch(alg.dim, x.dim)


def ad_matrix(alg: NLieAlgebra, x: FundamentalObject) -> Matrix:
    """Returns ad_X as a dim×dim matrix; column k holds [X1,…,X(n−1),e_k]."""

    _check_object(alg, x)

    d = alg.dim
    entries = [[ZERO] * d for _ in range(d)]
    for word, coeff in x.terms.items():
        for k in range(1, d + 1):
            for l, value in alg.f.column(word + (k,)).items():
                entries[l - 1][k - 1] += coeff * value

    return Matrix.from_rows(entries, d)


def dot(
    alg: NLieAlgebra, x: FundamentalObject, y: FundamentalObject
) -> FundamentalObject:
    """Returns X·Y = Σ_i (Y1,…,ad_X Yi,…,Y(n−1))."""

    _check_object(alg, x)
    _check_object(alg, y)

    terms: DefaultDict[Word, Rational] = defaultdict(lambda: ZERO)
    for x_word, x_coeff in x.terms.items():
        for y_word, y_coeff in y.terms.items():
            scale = x_coeff * y_coeff
            for i, yi in enumerate(y_word):
                for m, value in alg.f.column(x_word + (yi,)).items():
                    sign, canon = canonical_word(y_word[:i] + (m,) + y_word[i + 1 :])
                    if sign != 0:
                        terms[canon] += sign * scale * value

    return FundamentalObject(alg.arity - 1, alg.dim, terms)


def check_derivation_identity(
    alg: NLieAlgebra, x: FundamentalObject, y: FundamentalObject
) -> bool:
    """Returns whether [ad_X, ad_Y] = ad_{X·Y} holds exactly."""

    alg.require_verified()

    commutator = ad_matrix(alg, x).commutator(ad_matrix(alg, y))
    return commutator == ad_matrix(alg, dot(alg, x, y))


def ad_vectors(alg: NLieAlgebra) -> List[Tuple[Word, Vector]]:
    """Returns (word, row-major flattened ad matrix) for every wedge basis word."""

    length = alg.arity - 1
    return [
        (word, ad_matrix(alg, FundamentalObject.word(alg.dim, *word)).entries)
        for word in wedge_basis(alg.dim, length)
    ]


def ker_ad(alg: NLieAlgebra) -> Subspace:
    """Returns the kernel of ad: ∧^{n−1}𝔊 → End 𝔊 in wedge word coordinates."""

    start = util.time.usec()
    pairs = ad_vectors(alg)
    matrix = Matrix.from_columns([v for _, v in pairs], alg.dim * alg.dim)
    result = kernel(matrix)

    log.debug(
        f"ker ad has dimension {result.dim} of {len(pairs)} "
        f"({util.time.since(start)})"
    )
    return result
