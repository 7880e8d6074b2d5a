"""JSON documents for algebras, splittings, gradings, basis maps and reports.

Output is canonical: sorted lower tuples, reduced "p/q" strings, entries in
lexicographic order, fixed key order and a trailing newline.
"""

import json
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .analysis import StructureReport
from .contraction import Grading
from .errors import FormatError
from .lie import InducedLie, LieAlgebra
from .linalg import Matrix, format_rational, to_rational
from .nlie import FIReport, NLieAlgebra, Splitting
from .tensor import AntisymTensor, Word

Document = Dict[str, Any]


def _require(doc: Mapping[str, Any], key: str, kind: type) -> Any:
    if key not in doc:
        raise FormatError(f"Missing '{key}' field")

    value = doc[key]
    if kind is int and isinstance(value, bool):
        raise FormatError(f"Field '{key}' must be an integer")
    if not isinstance(value, kind):
        raise FormatError(f"Field '{key}' must be of type {kind.__name__}")

    return value


def _value(raw: Any) -> Any:
    if isinstance(raw, bool) or not isinstance(raw, (int, str)):
        raise FormatError(f"Invalid structure constant {raw!r}")

    return to_rational(raw)


def _int_list(raw: Any, what: str) -> List[int]:
    if not isinstance(raw, list) or any(
        isinstance(i, bool) or not isinstance(i, int) for i in raw
    ):
        raise FormatError(f"Field '{what}' must be a list of integers")

    return list(raw)


def tensor_to_doc(f: AntisymTensor) -> Document:
    return {
        "arity": f.arity,
        "dim": f.dim,
        "entries": [
            {"lower": list(lower), "upper": upper, "value": format_rational(value)}
            for lower, upper, value in f.items()
        ],
    }


def tensor_from_doc(doc: Any) -> AntisymTensor:
    if not isinstance(doc, dict):
        raise FormatError("Algebra document must be a JSON object")

    arity = _require(doc, "arity", int)
    dim = _require(doc, "dim", int)
    raw_entries = _require(doc, "entries", list)

    entries = []
    for raw in raw_entries:
        if not isinstance(raw, dict):
            raise FormatError("Each entry must be a JSON object")

        lower = _int_list(_require(raw, "lower", list), "lower")
        upper = _require(raw, "upper", int)
        if "value" not in raw:
            raise FormatError("Missing 'value' field")

        entries.append((lower, upper, _value(raw["value"])))

    return AntisymTensor.from_entries(arity, dim, entries)


def algebra_to_doc(alg: NLieAlgebra) -> Document:
    return tensor_to_doc(alg.f)


def algebra_from_doc(doc: Any) -> NLieAlgebra:
    """Loads an algebra; the FI status always starts out unverified."""

    return NLieAlgebra(tensor_from_doc(doc))


def lie_to_doc(lie: Union[LieAlgebra, InducedLie]) -> Document:
    if isinstance(lie, InducedLie):
        doc = tensor_to_doc(lie.lie.c)
        doc["source_arity"] = lie.source_arity
        doc["source_dim"] = lie.source_dim
        doc["basis_words"] = [list(w) for w in lie.basis_words]
        doc["kernel"] = matrix_rows(lie.kernel.basis)
        return doc

    return tensor_to_doc(lie.c)


def lie_from_doc(doc: Any) -> LieAlgebra:
    f = tensor_from_doc(doc)
    if f.arity != 2:
        raise FormatError(f"Lie algebra documents must have arity 2, got {f.arity}")

    return LieAlgebra(f)


def basis_words_from_doc(doc: Any) -> Optional[List[List[int]]]:
    """Returns the wedge words recorded by induce, or None for plain algebras."""

    if not isinstance(doc, dict) or "basis_words" not in doc:
        return None

    words = doc["basis_words"]
    if not isinstance(words, list):
        raise FormatError("Field 'basis_words' must be a list")

    return [_int_list(w, "basis_words") for w in words]


def splitting_to_doc(s: Splitting) -> Document:
    return {"i0": list(s.i0), "i1": list(s.i1)}


def splitting_from_doc(doc: Any, dim: int) -> Splitting:
    if not isinstance(doc, dict):
        raise FormatError("Splitting document must be a JSON object")

    i0 = _int_list(_require(doc, "i0", list), "i0")
    i1 = _int_list(doc["i1"], "i1") if "i1" in doc else None
    return Splitting(dim, i0, i1)


def grading_to_doc(g: Grading) -> Document:
    return {"weights": list(g.weights)}


def grading_from_doc(doc: Any) -> Grading:
    if not isinstance(doc, dict):
        raise FormatError("Grading document must be a JSON object")

    return Grading(_int_list(_require(doc, "weights", list), "weights"))


def matrix_rows(rows: Sequence[Sequence[Any]]) -> List[List[str]]:
    return [[format_rational(x) for x in row] for row in rows]


def matrix_to_doc(m: Matrix) -> Document:
    return {"rows": matrix_rows(m.to_rows())}


def matrix_from_doc(doc: Any) -> Matrix:
    if not isinstance(doc, dict):
        raise FormatError("Matrix document must be a JSON object")

    rows = _require(doc, "rows", list)
    if not all(isinstance(row, list) for row in rows):
        raise FormatError("Field 'rows' must be a list of lists")

    return Matrix.from_rows([[_value(x) for x in row] for row in rows])


def report_to_doc(report: StructureReport) -> Document:
    return report.to_dict()


def dumps(doc: Any, indent: Optional[int] = 2) -> str:
    return json.dumps(doc, indent=indent, ensure_ascii=False) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        where = f"line {e.lineno}, column {e.colno}"
        raise FormatError(f"Invalid JSON at {where}: {e.msg}") from e


def load(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as f:
        return loads(f.read())


def save(path: str, doc: Any, indent: Optional[int] = 2) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(dumps(doc, indent))


def load_algebra(path: str) -> NLieAlgebra:
    return algebra_from_doc(load(path))


def load_lie(path: str) -> LieAlgebra:
    return lie_from_doc(load(path))


def load_matrix(path: str) -> Matrix:
    return matrix_from_doc(load(path))


def induced_source_from_doc(doc: Any) -> Optional[Tuple[int, List[Word]]]:
    """Returns (source_dim, basis_words) of an induced algebra document."""

    words = basis_words_from_doc(doc)
    if words is None:
        return None

    return _require(doc, "source_dim", int), [tuple(w) for w in words]


def fi_report_to_doc(report: FIReport) -> Document:
    return {
        "holds": report.holds,
        "equations": report.equations,
        "violations": [
            {
                "k": list(v.k_tuple),
                "l": list(v.l_tuple),
                "index": v.free_index,
                "residual": format_rational(v.residual),
            }
            for v in report.violations
        ],
    }
