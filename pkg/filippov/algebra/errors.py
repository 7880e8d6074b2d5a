from typing import Any, Sequence, Tuple


class AlgebraError(Exception):
    pass


class InputError(AlgebraError):
    pass


class PreconditionError(AlgebraError):
    pass


class IndexOutOfRange(InputError):
    index: int
    dim: int

    def __init__(self, index: int, dim: int) -> None:
        super().__init__(f"Index {index} is outside the basis range 1..{dim}")

        self.index = index
        self.dim = dim


class MalformedEntry(InputError):
    lower: Tuple[int, ...]

    def __init__(self, lower: Sequence[int], reason: str) -> None:
        super().__init__(f"Malformed entry with lower indices {list(lower)}: {reason}")

        self.lower = tuple(lower)


class DuplicateEntry(InputError):
    key: Tuple[Tuple[int, ...], int]
    old_value: Any
    new_value: Any

    def __init__(
        self, key: Tuple[Tuple[int, ...], int], old_value: Any, new_value: Any
    ) -> None:
        lower, upper = key
        super().__init__(
            f"Conflicting values for f_{lower}^{upper}: {old_value} and {new_value}"
        )

        self.key = key
        self.old_value = old_value
        self.new_value = new_value


class ArityMismatch(InputError):
    expected: int
    got: int

    def __init__(self, expected: int, got: int) -> None:
        super().__init__(f"Expected {expected} arguments, got {got}")

        self.expected = expected
        self.got = got


class InvalidArity(InputError):
    arity: int

    def __init__(self, arity: int, minimum: int = 2) -> None:
        super().__init__(f"Arity must be at least {minimum}, got {arity}")

        self.arity = arity


class DimensionMismatch(InputError):
    expected: Any
    got: Any

    def __init__(self, expected: Any, got: Any, what: str = "dimension") -> None:
        super().__init__(f"Mismatched {what}: expected {expected}, got {got}")

        self.expected = expected
        self.got = got


class SingularMatrix(InputError):
    rank: int
    size: int

    def __init__(self, rank: int, size: int) -> None:
        super().__init__(f"Matrix of size {size} is singular (rank {rank})")

        self.rank = rank
        self.size = size


class DependentBasis(InputError):
    def __init__(self, count: int, rank: int) -> None:
        super().__init__(f"{count} basis vectors only span a space of dimension {rank}")


class FormatError(InputError):
    pass


class InvalidSplitting(InputError):
    pass


class InvalidGrading(InputError):
    pass


class UnverifiedAlgebra(PreconditionError):
    def __init__(self, what: str = "Filippov identity") -> None:
        super().__init__(f"The {what} has not been verified for this algebra")


class IdentityViolated(PreconditionError):
    what: str
    witness: Any

    def __init__(self, what: str, witness: Any) -> None:
        super().__init__(f"The {what} does not hold: {witness}")

        self.what = what
        self.witness = witness


class NotASubalgebra(PreconditionError):
    indices: Tuple[int, ...]
    witness: Any

    def __init__(self, indices: Sequence[int], witness: Any = None) -> None:
        detail = f" (bracket {witness} leaves it)" if witness is not None else ""
        super().__init__(f"Indices {list(indices)} do not span a subalgebra{detail}")

        self.indices = tuple(indices)
        self.witness = witness


class NotAnIdeal(PreconditionError):
    witness: Any

    def __init__(self, witness: Any = None) -> None:
        detail = f": {witness}" if witness is not None else ""
        super().__init__(f"Subspace is not an ideal{detail}")

        self.witness = witness


class GradingViolation(PreconditionError):
    violations: Sequence[Tuple[int, int, int]]

    def __init__(self, violations: Sequence[Tuple[int, int, int]]) -> None:
        i, j, k = violations[0]
        super().__init__(
            f"Grading violates the contraction condition at [e{i},e{j}] -> e{k}"
            f" ({len(violations)} violation(s) total)"
        )

        self.violations = violations


class NotInSpan(AlgebraError):
    def __init__(self) -> None:
        super().__init__("Target vector lies outside the span of the basis")


class InternalSpanError(AlgebraError):
    pair: Tuple[Tuple[int, ...], Tuple[int, ...]]

    def __init__(self, pair: Tuple[Tuple[int, ...], Tuple[int, ...]]) -> None:
        super().__init__(
            f"Commutator of ad{pair[0]} and ad{pair[1]} is not an inner derivation;"
            " the input tensor is corrupted"
        )

        self.pair = pair
