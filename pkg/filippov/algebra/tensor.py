import functools
from typing import Callable, Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from sympy.combinatorics import Permutation

from .errors import DuplicateEntry, IndexOutOfRange, InvalidArity, MalformedEntry
from .linalg import ZERO, Rational, RationalLike, to_rational

Word = Tuple[int, ...]
Key = Tuple[Word, int]
Entry = Tuple[Sequence[int], int, RationalLike]
KeepFunc = Callable[[Word, int], bool]


@functools.lru_cache(maxsize=65536)
def canonical_word(indices: Word) -> Tuple[int, Word]:
    """Sorts a tuple of indices and returns (permutation sign, sorted tuple).

    The sign is 0 when an index repeats.
    """

    ordered = tuple(sorted(indices))
    if len(set(ordered)) != len(ordered):
        return 0, ordered
    if ordered == indices or len(indices) < 2:
        return 1, ordered

    order = sorted(range(len(indices)), key=indices.__getitem__)
    return Permutation(order).signature(), ordered


class AntisymTensor:
    """Structure constants f_{l1…ln}^k, fully antisymmetric in the lower indices.

    Indices are 1-based. Only strictly increasing lower tuples are stored and no
    stored value is zero.
    """

    arity: int
    dim: int
    entries: Mapping[Key, Rational]
    _by_lower: Dict[Word, Dict[int, Rational]]

    def __init__(self, arity: int, dim: int, entries: Mapping[Key, Rational]) -> None:
        if arity < 2:
            raise InvalidArity(arity)
        if dim < 0:
            raise MalformedEntry((), f"dimension must be nonnegative, got {dim}")

        self.arity = arity
        self.dim = dim
        self.entries = dict(sorted((k, v) for k, v in entries.items() if v != 0))

        self._by_lower = {}
        for (lower, upper), value in self.entries.items():
            self._by_lower.setdefault(lower, {})[upper] = value

    @classmethod
    def from_entries(
        cls, arity: int, dim: int, entries: Iterable[Entry]
    ) -> "AntisymTensor":
        """Canonicalizes (lower, upper, value) triples, applying permutation signs."""

        canonical: Dict[Key, Rational] = {}
        for lower, upper, raw in entries:
            lower = tuple(int(i) for i in lower)
            upper = int(upper)
            value = to_rational(raw)

            if len(lower) != arity:
                raise MalformedEntry(lower, f"expected {arity} lower indices")
            for index in lower + (upper,):
                if not 1 <= index <= dim:
                    raise IndexOutOfRange(index, dim)

            sign, word = canonical_word(lower)
            if sign == 0:
                raise MalformedEntry(lower, "repeated lower index")

            key = (word, upper)
            value = sign * value
            if key in canonical and canonical[key] != value:
                raise DuplicateEntry(key, canonical[key], value)

            canonical[key] = value

        return cls(arity, dim, canonical)

    @classmethod
    def empty(cls, arity: int, dim: int) -> "AntisymTensor":
        return cls(arity, dim, {})

    def get(self, lower: Sequence[int], upper: int) -> Rational:
        """Looks up f_{lower}^{upper} for any ordering of the lower indices."""

        sign, word = canonical_word(tuple(lower))
        if sign == 0:
            return ZERO

        value = self._by_lower.get(word, {}).get(upper)
        if value is None:
            return ZERO

        return value if sign > 0 else -value

    def column(self, lower: Sequence[int]) -> Dict[int, Rational]:
        """Returns {k: f_{lower}^k} for the nonzero values, signs applied."""

        sign, word = canonical_word(tuple(lower))
        if sign == 0:
            return {}

        values = self._by_lower.get(word, {})
        if sign > 0:
            return dict(values)

        return {k: -v for k, v in values.items()}

    def lowers(self) -> Iterator[Tuple[Word, Dict[int, Rational]]]:
        """Iterates (sorted lower word, {upper: value}) in lexicographic order."""

        for word in sorted(self._by_lower):
            yield word, dict(self._by_lower[word])

    def items(self) -> Iterator[Tuple[Word, int, Rational]]:
        for (lower, upper), value in self.entries.items():
            yield lower, upper, value

    def filter(self, keep: KeepFunc) -> "AntisymTensor":
        return AntisymTensor(
            self.arity,
            self.dim,
            {key: value for key, value in self.entries.items() if keep(key[0], key[1])},
        )

    def is_empty(self) -> bool:
        return not self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AntisymTensor):
            return NotImplemented

        return (self.arity, self.dim, self.entries) == (
            other.arity,
            other.dim,
            other.entries,
        )

    def __hash__(self) -> int:
        return hash((self.arity, self.dim, tuple(self.entries.items())))

    def __repr__(self) -> str:
        return (
            f"<AntisymTensor arity {self.arity}, dim {self.dim}, {len(self)} entries>"
        )
