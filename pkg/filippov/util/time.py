import time
from typing import Union


def usec() -> int:
    """Returns a monotonic timestamp in microseconds."""

    return time.perf_counter_ns() // 1000


def format_duration_us(t_us: Union[int, float]) -> str:
    t_us = int(t_us)
    if t_us < 1000:
        return f"{t_us} μs"
    if t_us < 1_000_000:
        return f"{t_us // 1000} ms"

    seconds = t_us / 1_000_000
    if seconds < 60:
        return f"{seconds:.2f} sec"

    minutes, rest = divmod(int(seconds), 60)
    return f"{minutes}m {rest}s"


def since(start_us: int) -> str:
    """Formats the time elapsed since a usec() timestamp."""

    return format_duration_us(usec() - start_us)
