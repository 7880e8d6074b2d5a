import os
import traceback


def format_exception(exp: BaseException) -> str:
    """Formats an unexpected error with its traceback for the error log."""

    # Frames under the working directory are shown with relative paths
    prefix = os.getcwd() + os.sep
    lines = traceback.format_exception(type(exp), exp, exp.__traceback__)
    return "".join(line.replace(prefix, "") for line in lines).rstrip("\n")


def format_brief(exp: BaseException) -> str:
    """Formats an expected error (bad input, failed precondition) on one line."""

    if isinstance(exp, OSError) and exp.filename is not None:
        return f"Cannot access '{exp.filename}': {exp.strerror or exp}"

    msg = str(exp)
    return f"{type(exp).__name__}: {msg}" if msg else type(exp).__name__
