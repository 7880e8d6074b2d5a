import json

import pytest

from filippov import __version__, main
from filippov.algebra import serial


@pytest.fixture
def cli(tmp_path, capsys):
    """Runs the command line in tmp_path and returns (exit code, stdout)."""

    config = str(tmp_path / "none.toml")

    def run(*args: str):
        code = main.main(["-c", config, *args])
        return code, capsys.readouterr().out

    return run


@pytest.fixture
def a4_path(tmp_path, cli):
    path = str(tmp_path / "a4.json")
    assert cli("simple", "3", "--out", path)[0] == 0
    return path


@pytest.fixture
def lie_a4_path(tmp_path, cli, a4_path):
    path = str(tmp_path / "liea4.json")
    assert cli("induce", a4_path, "--out", path)[0] == 0
    return path


def test_version(cli):
    code, out = cli("--version")

    assert code == 0
    assert __version__ in out


def test_simple_to_stdout(cli, a4):
    code, out = cli("simple", "3")

    assert code == 0
    assert serial.algebra_from_doc(json.loads(out)) == a4


def test_simple_needs_arity_two(cli):
    assert cli("simple", "1")[0] == 2


def test_verify_fi(cli, a4_path):
    code, out = cli("verify-fi", a4_path)

    assert code == 0
    assert out.startswith("FI holds for the 3-Lie algebra of dimension 4")

    code, out = cli("fi", a4_path, "--antisymmetrized", "--json")
    assert code == 0
    assert json.loads(out)["holds"] is True


def test_verify_fi_failure(tmp_path, cli, corrupted_a4):
    path = str(tmp_path / "bad.json")
    serial.save(path, serial.algebra_to_doc(corrupted_a4))

    code, out = cli("verify-fi", path)
    assert code == 1
    assert out.startswith("FI fails for the 3-Lie algebra of dimension 4")

    # Commands that need the FI refuse the input
    assert cli("contract", path, "--i0", "1,2")[0] == 2
    assert cli("induce", path)[0] == 2


def test_contract(tmp_path, cli, a4_path):
    path = str(tmp_path / "a4c.json")
    assert cli("contract", a4_path, "--i0", "1,2", "--out", path)[0] == 0

    doc = serial.load(path)
    assert doc["entries"] == [
        {"lower": [1, 2, 3], "upper": 4, "value": "1"},
        {"lower": [1, 2, 4], "upper": 3, "value": "-1"},
    ]


def test_contract_needs_subalgebra(cli, a4_path):
    assert cli("contract", a4_path, "--i0", "1,2,3")[0] == 2


def test_induce(cli, lie_a4_path):
    doc = serial.load(lie_a4_path)

    assert doc["dim"] == 6
    assert doc["source_dim"] == 4
    assert len(doc["basis_words"]) == 6


def test_report_exit_codes(tmp_path, cli, a4_path):
    code, out = cli("report", a4_path, "--i0", "1,2")
    assert code == 1
    assert "not semidirect" in out

    contracted = str(tmp_path / "a4c.json")
    cli("contract", a4_path, "--i0", "1,2", "--out", contracted)

    code, out = cli("report", contracted, "--i0", "1,2", "--graded", "--json")
    assert code == 0
    assert [r["holds"] for r in json.loads(out)] == [True, True]


def test_grade(cli, a4_path, lie_a4_path):
    for path in (a4_path, lie_a4_path):
        code, out = cli("grade", path, "--i0", "1,2")

        assert code == 0
        assert json.loads(out) == {"weights": [0, 1, 1, 1, 1, 2]}


def test_ww_and_certify_extension(tmp_path, cli, a4_path, lie_a4_path):
    ww = str(tmp_path / "ww.json")
    contracted = str(tmp_path / "a4c.json")
    target = str(tmp_path / "liea4c.json")

    assert cli("ww", lie_a4_path, "--i0", "1,2", "--out", ww)[0] == 0
    cli("contract", a4_path, "--i0", "1,2", "--out", contracted)
    cli("induce", contracted, "--out", target)

    code, out = cli("certify-extension", ww, target, "--indices", "6")
    assert code == 0
    assert "central extension" in out

    # The non-central weight-1 part is rejected
    assert cli("certify", ww, target, "--indices", "2")[0] == 1


def test_ww_argument_checks(tmp_path, cli, a4_path, lie_a4_path):
    assert cli("ww", lie_a4_path)[0] == 2
    assert cli("ww", lie_a4_path, "--weights", "0,1", "--i0", "1,2")[0] == 2

    plain = str(tmp_path / "so3.json")
    entry = {"lower": [1, 2], "upper": 3, "value": 1}
    serial.save(plain, {"arity": 2, "dim": 3, "entries": [entry]})
    assert cli("ww", plain, "--i0", "1")[0] == 2


def test_ww_with_weights(tmp_path, cli, so3):
    path = str(tmp_path / "so3.json")
    serial.save(path, serial.lie_to_doc(so3))

    assert cli("ww", path, "--weights", "0,0,1")[0] == 2

    code, out = cli("ww", path, "--weights", "0,1,1")
    assert code == 0
    assert len(json.loads(out)["entries"]) == 2


def test_iw_quotient_and_compare(tmp_path, cli, lie_a4_path):
    iw = str(tmp_path / "iw.json")
    quotient = str(tmp_path / "quotient.json")

    assert cli("iw", lie_a4_path, "--indices", "1", "--out", iw)[0] == 0
    assert cli("compare", lie_a4_path, lie_a4_path)[0] == 0

    code, out = cli("compare", lie_a4_path, iw, "--json")
    assert code == 1
    assert json.loads(out)["verdict"] == "fingerprint-distinct"

    assert cli("quotient", iw, "--indices", "6", "--out", quotient)[0] == 0
    assert serial.load(quotient)["dim"] == 5
    assert cli("quotient", iw, "--indices", "7")[0] == 2
    assert cli("quotient", iw)[0] == 2


def test_help(cli):
    code, out = cli("help")
    assert code == 0
    assert out.startswith(f"filippov {__version__}")
    assert "verify-fi" in out

    code, out = cli("help", "verify-fi")
    assert code == 0
    assert out.startswith("verify-fi:")
    assert "Filippov" in out

    assert cli("help", "nothing")[0] == 2


def test_bad_input(tmp_path, cli):
    path = tmp_path / "broken.json"
    path.write_text("{")

    assert cli("verify-fi", str(path))[0] == 2
    assert cli("verify-fi", str(tmp_path / "missing.json"))[0] == 2
    assert cli("contract", str(path), "--i0", "x")[0] == 2
    assert cli()[0] == 2


def test_config_report_format(tmp_path, capsys, a4_path):
    config = tmp_path / "config.toml"
    config.write_text('version = 2\n\n[output]\nreport_format = "json"\n')

    code = main.main(["-c", str(config), "report", a4_path, "--i0", "1,2"])
    assert code == 1
    assert json.loads(capsys.readouterr().out)["holds"] is False


def test_invalid_config(tmp_path):
    config = tmp_path / "config.toml"
    config.write_text('version = 2\n\n[log]\nlevel = "loud"\n')

    assert main.main(["-c", str(config), "simple", "3"]) == 2


def test_shared_options_after_the_verb(cli, a4_path):
    assert cli("verify-fi", a4_path, "-v")[0] == 0
    assert cli("induce", a4_path, "-q")[0] == 0
    assert cli("simple", "3", "-v", "-q")[0] == 2


def test_config_path_after_the_verb(tmp_path, capsys, a4_path):
    config = tmp_path / "config.toml"
    config.write_text('version = 2\n\n[output]\nreport_format = "json"\n')

    code = main.main(["report", a4_path, "--i0", "1,2", "-c", str(config)])
    assert code == 1
    assert json.loads(capsys.readouterr().out)["holds"] is False
