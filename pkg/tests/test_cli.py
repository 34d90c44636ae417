"""End-to-end CLI runs through main(): outputs, files and exit codes."""

import json

import numpy as np
import pytest

from cli import EXIT_INCOHERENT, EXIT_INVALID, EXIT_IO, EXIT_OK, main
from representation import double_pass_matrix, reference_states
from utils import matrix_to_json, write_json


def _stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


def _write(tmp_path, name, payload):
    path = tmp_path / name
    write_json(payload, str(path))
    return str(path)


@pytest.mark.parametrize("d", range(2, 9))
def test_geometry(d, capsys):
    assert main(["geometry", "-d", str(d)]) == EXIT_OK
    out = _stdout_json(capsys)
    assert out["L"] == 1 / (d * d + d)
    assert out["U"] == 2 * out["L"]
    assert out["mmd_bound"] == d


def test_geometry_classical(capsys):
    assert main(["geometry", "-d", "3", "--classical"]) == EXIT_OK
    out = _stdout_json(capsys)
    assert (out["N"], out["L"], out["U"]) == (3, 0.0, 1.0)


def test_sic_find_then_verify(tmp_path, capsys):
    path = str(tmp_path / "fid2.json")
    assert main(["sic", "find", "-d", "2", "--seed", "1", "--restarts", "8", "-o", path]) == EXIT_OK
    assert "Wrote" in capsys.readouterr().err
    assert main(["sic", "verify", "--sic", path]) == EXIT_OK
    assert _stdout_json(capsys)["ok"] is True


def test_repr_round_trip(tmp_path, capsys):
    rho = np.array([[0.7, 0.2 - 0.1j], [0.2 + 0.1j, 0.3]])
    rho_file = _write(tmp_path, "rho.json", matrix_to_json(rho))
    p_file = str(tmp_path / "p.json")
    assert main(["repr", "to-prob", "--rho", rho_file, "-d", "2", "-o", p_file]) == EXIT_OK
    capsys.readouterr()
    assert main(["repr", "from-prob", "-p", p_file, "-d", "2"]) == EXIT_OK
    out = _stdout_json(capsys)
    back = np.array(out["re"]) + 1j * np.array(out["im"])
    assert np.allclose(back, rho, atol=1e-10)


def test_born_and_ltp_deviation(tmp_path, capsys):
    p_file = _write(tmp_path, "p.json", reference_states(2)[0].to_dict())
    R_file = _write(tmp_path, "R.json", double_pass_matrix(2).to_dict())
    assert main(["ltp-deviation", "-p", p_file, "-R", R_file, "-d", "2"]) == EXIT_OK
    assert _stdout_json(capsys)["ltp_deviation"] == pytest.approx(1 / 6, abs=1e-12)
    assert main(["born", "-p", p_file, "-R", R_file, "-d", "2"]) == EXIT_OK
    assert _stdout_json(capsys)["p"] == pytest.approx([1 / 2, 1 / 6, 1 / 6, 1 / 6], abs=1e-12)


def test_mmd_default_basis(capsys):
    assert main(["mmd", "-d", "2"]) == EXIT_OK
    out = _stdout_json(capsys)
    assert out["size"] == 2 and out["certified"] is True
    assert out["bound"] == 2


def test_valid_state_of_vertex_fails(tmp_path, capsys):
    p_file = _write(tmp_path, "p.json", {"p": [1.0, 0.0, 0.0, 0.0]})
    assert main(["valid-state", "-p", p_file, "-d", "2"]) == EXIT_INVALID
    assert _stdout_json(capsys)["ok"] is False


# ----------------------------------------------------------------------
# Coherence
# ----------------------------------------------------------------------
def test_coherence_born_coherent(tmp_path, capsys):
    e0 = reference_states(2)[0]
    p_file = _write(tmp_path, "p.json", e0.to_dict())
    R_file = _write(tmp_path, "R.json", double_pass_matrix(2).to_dict())
    assert main(["coherence", "born", "-p", p_file, "-R", R_file, "-q", p_file, "-d", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "coherent"


def test_coherence_born_incoherent(tmp_path, capsys):
    p_file = _write(tmp_path, "p.json", reference_states(2)[0].to_dict())
    R_file = _write(tmp_path, "R.json", double_pass_matrix(2).to_dict())
    q_file = _write(tmp_path, "q.json", {"p": [1 / 3, 2 / 9, 2 / 9, 2 / 9]})
    assert main(["coherence", "born", "-p", p_file, "-R", R_file, "-q", q_file, "-d", "2"]) == EXIT_INCOHERENT
    out = _stdout_json(capsys)
    assert out["max_discrepancy"] == pytest.approx(1 / 6, abs=1e-12)
    assert out["witness"]["guaranteed_loss"] > 0


def test_coherence_additivity(capsys):
    assert main(["coherence", "additivity", "--pE", "0.2", "--pF", "0.3", "--pEorF", "0.6"]) == EXIT_INCOHERENT
    out = _stdout_json(capsys)
    assert out["witness"]["guaranteed_loss"] == pytest.approx(0.1)
    assert [t["dir"] for t in out["witness"]["transactions"]] == ["buy", "sell", "sell"]
    assert main(["coherence", "additivity", "--pE", "0.2", "--pF", "0.3", "--pEorF", "0.5"]) == EXIT_OK


def test_coherence_conditional(capsys):
    assert main(["coherence", "conditional", "--pE", "0.5", "--pFgivenE", "0.4",
                 "--pEandF", "0.3"]) == EXIT_INCOHERENT
    assert _stdout_json(capsys)["witness"]["guaranteed_loss"] == pytest.approx(0.1)


def test_coherence_prices(tmp_path, capsys):
    good = _write(tmp_path, "good.json", {"prices": {"E": 0.3, "¬E": 0.7}})
    assert main(["coherence", "prices", "--prices", good]) == EXIT_OK
    bad = _write(tmp_path, "bad.json", {"prices": {"E": 0.6, "¬E": 0.6}})
    assert main(["coherence", "prices", "--prices", bad]) == EXIT_INCOHERENT


def test_coherence_prices_writes_coherent_report(tmp_path, capsys):
    good = _write(tmp_path, "good.json", {"prices": {"E": 0.3, "¬E": 0.7}})
    out_file = tmp_path / "report.json"
    assert main(["coherence", "prices", "--prices", good, "-o", str(out_file)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "coherent"
    written = json.loads(out_file.read_text())
    assert written["report"]["ok"] is True
    assert written["witnesses"] == []


@pytest.mark.parametrize("literal", ["NaN", "Infinity", "-Infinity"])
def test_coherence_prices_rejects_non_finite(tmp_path, capsys, literal):
    path = tmp_path / "prices.json"
    path.write_text('{"prices": {"E": ' + literal + ', "¬E": 0.5}}', encoding="utf-8")
    assert main(["coherence", "prices", "--prices", str(path)]) == EXIT_IO
    assert "not finite" in capsys.readouterr().err


# ----------------------------------------------------------------------
# Simulation
# ----------------------------------------------------------------------
def test_sim_one_then_compare(tmp_path, capsys):
    q_file = _write(tmp_path, "q.json", {"p": [0.1, 0.2, 0.3, 0.4]})
    counts = str(tmp_path / "one.json")
    assert main(["sim", "one", "-q", q_file, "--shots", "20000", "--seed", "7", "-o", counts]) == EXIT_OK
    capsys.readouterr()
    assert main(["sim", "compare", "--counts", counts, "-q", q_file]) == EXIT_OK
    out = _stdout_json(capsys)
    assert out["within_band"] is True
    assert out["band"] == pytest.approx(4 / np.sqrt(20000))


def test_sim_two_margin(tmp_path, capsys):
    p_file = _write(tmp_path, "p.json", reference_states(2)[0].to_dict())
    R_file = _write(tmp_path, "R.json", double_pass_matrix(2).to_dict())
    assert main(["sim", "two", "-p", p_file, "-R", R_file, "--shots", "50000", "--seed", "3",
                 "--margin", "-d", "2"]) == EXIT_OK
    out = _stdout_json(capsys)
    assert out["matches_ltp"] is True and out["separated_from_born"] is True


# ----------------------------------------------------------------------
# Errors
# ----------------------------------------------------------------------
def test_missing_field_names_the_field(tmp_path, capsys):
    p_file = _write(tmp_path, "p.json", {"q": [0.5, 0.5]})
    R_file = _write(tmp_path, "R.json", double_pass_matrix(2).to_dict())
    assert main(["ltp", "-p", p_file, "-R", R_file]) == EXIT_IO
    err = capsys.readouterr().err
    assert "'p'" in err and p_file in err


def test_non_integer_size_field_is_a_file_error(tmp_path, capsys):
    rho = matrix_to_json(np.eye(2) / 2)
    rho["rows"] = "two"
    rho_file = _write(tmp_path, "rho.json", rho)
    assert main(["repr", "to-prob", "--rho", rho_file, "-d", "2"]) == EXIT_IO
    assert "'rows'" in capsys.readouterr().err

    R = double_pass_matrix(2).to_dict()
    R["N"] = 4.5
    R_file = _write(tmp_path, "R.json", R)
    p_file = _write(tmp_path, "p.json", reference_states(2)[0].to_dict())
    assert main(["ltp", "-p", p_file, "-R", R_file]) == EXIT_IO
    assert "'N'" in capsys.readouterr().err


def test_missing_file(tmp_path):
    assert main(["valid-state", "-p", str(tmp_path / "nope.json"), "-d", "2"]) == EXIT_IO


def test_usage_errors_exit_with_3(tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["geometry", "-d", "2", "--bogus"])
    assert exc.value.code == EXIT_IO
    q_file = _write(tmp_path, "q.json", {"p": [0.5, 0.5]})
    with pytest.raises(SystemExit) as exc:
        main(["sim", "one", "-q", q_file, "--shots", "10"])
    assert exc.value.code == EXIT_IO


def test_invalid_input_exits_with_1(capsys):
    assert main(["coherence", "additivity", "--pE", "1.5", "--pF", "0.3", "--pEorF", "0.6"]) == EXIT_INVALID
    assert main(["mmd", "-d", "5"]) == EXIT_INVALID
