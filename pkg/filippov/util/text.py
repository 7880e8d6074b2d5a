import json
from typing import Any, Iterable, Mapping, Optional

ITEM_SEPARATOR = "\n    • "


def join_list(items: Iterable[str]) -> str:
    """Joins the given items into an indented bullet list."""

    return ITEM_SEPARATOR.join(items)


def join_map(items: Mapping[str, Any], heading: Optional[str] = None) -> str:
    """Joins the given key-value pairs into a bullet list with aligned values."""

    width = max((len(str(key)) for key in items), default=0) + 1
    lines = (f"{(str(key) + ':').ljust(width)} {value}" for key, value in items.items())
    if heading:
        return join_list((f"{heading}:", *lines))

    return ITEM_SEPARATOR.lstrip("\n") + join_list(lines)


def compact_json(value: Any) -> str:
    """Serializes a witness value on one line."""

    return json.dumps(value, separators=(", ", ": "), ensure_ascii=False)
