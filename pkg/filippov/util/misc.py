import argparse
from typing import Any, Callable, List, Sequence, Tuple


def find_prefixed_funcs(obj: Any, prefix: str) -> Sequence[Tuple[str, Callable]]:
    """Finds functions with symbol names matching the prefix on the given object."""

    results = []

    for sym in dir(obj):
        if sym.startswith(prefix):
            name = sym[len(prefix) :]
            func = getattr(obj, sym)
            if not callable(func):
                continue

            results.append((name, func))

    return results


def parse_int_list(text: str) -> List[int]:
    """Parses "1,2,4" (spaces allowed, empty allowed) for argparse."""

    items = [item.strip() for item in text.split(",")]
    if items == [""]:
        return []

    try:
        return [int(item) for item in items]
    except ValueError:
        msg = f"'{text}' is not a comma-separated list of integers"
        raise argparse.ArgumentTypeError(msg) from None


def parse_positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"'{text}' is not an integer") from None

    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be positive")

    return value
