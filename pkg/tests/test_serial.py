import json

import pytest

from filippov.algebra import contraction, lie, nlie, serial
from filippov.algebra.analysis import semidirect_report_fa
from filippov.algebra.errors import DuplicateEntry, FormatError
from filippov.algebra.linalg import Matrix, format_rational


def test_algebra_document(so3):
    doc = serial.lie_to_doc(so3)

    assert doc == {
        "arity": 2,
        "dim": 3,
        "entries": [
            {"lower": [1, 2], "upper": 3, "value": "1"},
            {"lower": [1, 3], "upper": 2, "value": "-1"},
            {"lower": [2, 3], "upper": 1, "value": "1"},
        ],
    }


def test_dumps_is_canonical(a4):
    text = serial.dumps(serial.algebra_to_doc(a4))

    assert text.endswith("}\n")
    assert list(json.loads(text)) == ["arity", "dim", "entries"]
    assert serial.dumps(serial.algebra_to_doc(nlie.simple_a(3))) == text


def test_saved_algebra_loads_back(tmp_path, a4):
    path = str(tmp_path / "a4.json")
    serial.save(path, serial.algebra_to_doc(a4))
    loaded = serial.load_algebra(path)

    assert loaded == a4
    assert not loaded.verified


def test_values_accept_strings_and_integers():
    alg = serial.algebra_from_doc(
        {
            "arity": 2,
            "dim": 2,
            "entries": [{"lower": [2, 1], "upper": 2, "value": "-3/6"}],
        }
    )

    assert format_rational(alg.structure_constant((1, 2), 2)) == "1/2"
    assert serial.algebra_to_doc(alg)["entries"][0]["value"] == "1/2"


@pytest.mark.parametrize(
    "entry",
    [
        {"lower": [1, 2], "upper": 3},
        {"lower": [1, 2], "upper": 3, "value": 0.5},
        {"lower": [1, 2], "upper": 3, "value": "x"},
        {"lower": [1, True], "upper": 3, "value": 1},
        {"lower": "12", "upper": 3, "value": 1},
    ],
)
def test_malformed_entries(entry):
    with pytest.raises(FormatError):
        serial.algebra_from_doc({"arity": 2, "dim": 3, "entries": [entry]})


@pytest.mark.parametrize(
    "doc", [[], {"dim": 3, "entries": []}, {"arity": 2, "dim": "3", "entries": []}]
)
def test_malformed_documents(doc):
    with pytest.raises(FormatError):
        serial.algebra_from_doc(doc)


def test_conflicting_entries_in_document():
    doc = {
        "arity": 2,
        "dim": 3,
        "entries": [
            {"lower": [1, 2], "upper": 3, "value": 1},
            {"lower": [2, 1], "upper": 3, "value": 1},
        ],
    }

    with pytest.raises(DuplicateEntry):
        serial.algebra_from_doc(doc)


def test_invalid_json():
    with pytest.raises(FormatError, match="line 1"):
        serial.loads("{")


def test_lie_documents_need_arity_two(a4):
    with pytest.raises(FormatError):
        serial.lie_from_doc(serial.algebra_to_doc(a4))


def test_induced_document_carries_provenance(lie_a4):
    doc = serial.lie_to_doc(lie_a4)

    assert doc["source_arity"] == 3
    assert doc["source_dim"] == 4
    assert doc["basis_words"][0] == [1, 2]
    assert doc["kernel"] == []

    source = serial.induced_source_from_doc(json.loads(serial.dumps(doc)))
    assert source == (4, list(lie_a4.basis_words))
    assert serial.lie_from_doc(doc) == lie_a4.lie


def test_plain_documents_have_no_source(so3):
    assert serial.induced_source_from_doc(serial.lie_to_doc(so3)) is None


def test_splitting_and_grading_documents():
    s = serial.splitting_from_doc({"i0": [2, 1]}, 4)

    assert serial.splitting_to_doc(s) == {"i0": [1, 2], "i1": [3, 4]}

    g = serial.grading_from_doc({"weights": [0, 1, 2]})
    assert g == contraction.Grading([0, 1, 2])
    assert serial.grading_to_doc(g) == {"weights": [0, 1, 2]}


def test_matrix_documents():
    m = serial.matrix_from_doc({"rows": [[1, "1/2"], [0, -1]]})

    assert m == Matrix.from_rows([[1, "1/2"], [0, -1]])
    assert serial.matrix_to_doc(m) == {"rows": [["1", "1/2"], ["0", "-1"]]}

    with pytest.raises(FormatError):
        serial.matrix_from_doc({"rows": [1, 2]})


def test_fi_report_document(corrupted_a4):
    doc = serial.fi_report_to_doc(nlie.verify_fi(corrupted_a4))

    assert doc["holds"] is False
    assert doc["violations"]
    assert set(doc["violations"][0]) == {"k", "l", "index", "residual"}


def test_report_document(a4):
    doc = serial.report_to_doc(semidirect_report_fa(a4, nlie.Splitting(4, [1, 2])))

    assert doc["verdict"] == "not semidirect"
    assert [c["name"] for c in doc["claims"]] == [
        "i0 subalgebra",
        "i1 ideal",
        "i1 abelian",
    ]
    json.dumps(doc)


def test_saved_lie_algebra_loads_back(tmp_path, heisenberg):
    path = str(tmp_path / "h.json")
    serial.save(path, serial.lie_to_doc(heisenberg))

    assert serial.load_lie(path) == heisenberg
    assert lie.fingerprint(serial.load_lie(path)) == lie.fingerprint(heisenberg)
