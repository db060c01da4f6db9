import csv
import io
import json
import shutil
from importlib import resources

import pytest

from mems_inductor.cli import main, parse_inductance

BEAM_YAML = """\
beam:
  length_um: 290
  width_um: 2
  thickness_um: 5
  gap_um: 2
  electrode_area_um2: 1000
  youngs_modulus_gpa: 169
  density: 2330
"""


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def rows_of(text):
    return list(csv.DictReader(io.StringIO(text)))


@pytest.fixture
def data_copy(tmp_path):
    src = resources.files("mems_inductor.data")
    for name in ("table1_steps.csv", "table2_coils.csv", "table3_energy.csv"):
        shutil.copy(src.joinpath(name), tmp_path / name)
    return tmp_path


def test_steps(capsys):
    code, out, _ = run(capsys, "steps", "--n", "5")
    assert code == 0
    rows = rows_of(out)
    assert len(rows) == 15
    assert float(rows[0]["factor"]) == 0.2 and float(rows[-1]["factor"]) == 5.0


def test_switch(capsys):
    code, out, _ = run(capsys, "switch", "--word", "SOOOO", "--unit-l", "1nH")
    assert code == 0
    row = rows_of(out)[0]
    assert float(row["inductance_nh"]) == 1.0
    assert float(row["network_inductance_nh"]) == pytest.approx(1.0, rel=1e-12)


def test_switch_canonicalization_note(capsys):
    code, out, err = run(capsys, "switch", "--word", "SPOOO")
    assert code == 0 and "canonicalized" in err
    assert rows_of(out)[0]["series"] == "2"


def test_switch_errors(capsys):
    assert run(capsys, "switch", "--word", "OOOOO")[0] == 1
    assert run(capsys, "switch", "--word", "SXO")[0] == 1


def test_coil(capsys):
    code, out, _ = run(capsys, "coil", "--turns", "15", "--area-um2", "4", "--length-um", "1000",
                       "--mu-r", "30")
    assert code == 0
    assert float(rows_of(out)[0]["inductance_nh"]) == pytest.approx(0.0339, rel=1e-3)


def test_coil_resistance_and_q(capsys):
    code, out, _ = run(capsys, "coil", "--turns", "10", "--area-um2", "100", "--length-um", "100",
                       "--material", "Ni", "--wire-area-um2", "4", "--perimeter-um", "100",
                       "--frequency-hz", "1e9", "--format", "json")
    assert code == 0
    row = json.loads(out)[0]
    assert row["resistance_ohm"] == pytest.approx(4.2)
    assert row["quality_factor"] > 0


def test_coil_material_override(capsys, tmp_path):
    cfg = tmp_path / "c.yaml"
    cfg.write_text("materials:\n  Ni: {mu_r: 100}\n")
    code, out, _ = run(capsys, "coil", "--turns", "1", "--area-um2", "1", "--length-um", "1",
                       "--material", "ni", "--config", str(cfg))
    assert code == 0 and float(rows_of(out)[0]["mu_r"]) == 100


def test_coil_bad_geometry(capsys):
    code, _, err = run(capsys, "coil", "--turns", "1", "--area-um2", "1", "--length-um", "0")
    assert code == 1 and "length" in err


def test_beam(capsys, tmp_path):
    cfg = tmp_path / "b.yaml"
    cfg.write_text(BEAM_YAML)
    code, out, _ = run(capsys, "beam", "--config", str(cfg), "--voltage", "3")
    assert code == 0
    row = rows_of(out)[0]
    assert float(row["f_inplane2_khz"]) / float(row["f_inplane1_khz"]) == pytest.approx(6.26689, rel=1e-5)
    assert row["stable"] == "true" and float(row["displacement_um"]) < 0


def test_beam_flags_override_config(capsys, tmp_path):
    cfg = tmp_path / "b.yaml"
    cfg.write_text(BEAM_YAML)
    _, a, _ = run(capsys, "beam", "--config", str(cfg))
    _, b, _ = run(capsys, "beam", "--config", str(cfg), "--length-um", "580")
    ratio = float(rows_of(a)[0]["f_inplane1_khz"]) / float(rows_of(b)[0]["f_inplane1_khz"])
    assert ratio == pytest.approx(4.0, rel=1e-12)


def test_beam_response(capsys, tmp_path):
    cfg = tmp_path / "b.yaml"
    cfg.write_text(BEAM_YAML)
    code, out, _ = run(capsys, "beam", "--config", str(cfg), "--bias", "2",
                       "--freq-khz", "10", "60", "51")
    assert code == 0 and len(rows_of(out)) == 51


def test_beam_missing_keys(capsys):
    code, _, err = run(capsys, "beam", "--length-um", "100")
    assert code == 1 and "missing" in err


def test_sweep_from_config(capsys, tmp_path):
    cfg = tmp_path / "s.yaml"
    cfg.write_text(BEAM_YAML + "sweep:\n  subject: beam\n  grid: {voltage: [1, 2, 3]}\n")
    out_file = tmp_path / "o.json"
    code, out, _ = run(capsys, "sweep", "--config", str(cfg), "--format", "json", "--out", str(out_file))
    assert code == 0 and out == ""
    assert len(json.loads(out_file.read_text())) == 3


def test_sweep_cli_grid(capsys):
    code, out, _ = run(capsys, "sweep", "--subject", "steps", "--grid", "n=1,2,3,4,5,6")
    assert code == 0
    assert [int(r["step_count"]) for r in rows_of(out)] == [1, 3, 6, 10, 15, 21]


def test_sweep_invalid(capsys):
    assert run(capsys, "sweep", "--subject", "steps", "--grid", "m=1")[0] == 1


def test_verify_pristine(capsys, tmp_path):
    report = tmp_path / "out.json"
    code, out, err = run(capsys, "verify", "--report", str(report))
    assert code == 0
    rows = json.loads(report.read_text())
    assert len(rows) == 30
    assert sum(r["verdict"] == "flagged-discrepancy" for r in rows) == 3
    assert "flagged" in err


def test_verify_corrupted(capsys, data_copy):
    path = data_copy / "table3_energy.csv"
    path.write_text(path.read_text().replace("20,Ni,5.328", "20,Ni,5.428"))
    code, _, err = run(capsys, "verify", "--data-dir", str(data_copy))
    assert code == 1 and "MISMATCH" in err


def test_verify_missing_data(capsys, tmp_path):
    assert run(capsys, "verify", "--data-dir", str(tmp_path))[0] == 1


@pytest.mark.parametrize("cmd", ["coil", "steps", "switch", "beam", "sweep", "verify"])
def test_help(capsys, cmd, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, out, _ = run(capsys, cmd, "--help")
    assert code == 0 and "usage:" in out
    assert list(tmp_path.iterdir()) == []


def test_top_level_help(capsys):
    assert run(capsys, "--help")[0] == 0


def test_switch_help_documents_grammar(capsys):
    _, out, _ = run(capsys, "switch", "--help")
    assert "series-select" in out and "parallel-select" in out


@pytest.mark.parametrize("argv", [[], ["bogus"], ["steps", "--bogus"], ["steps", "--n", "x"],
                                  ["steps", "--format", "xml"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 1


def test_internal_error_exit_code(capsys, monkeypatch):
    import mems_inductor.cli as cli

    def boom(args, config):
        raise RuntimeError("bug")

    monkeypatch.setitem(cli._COMMANDS, "steps", boom)
    assert run(capsys, "steps")[0] == 2


@pytest.mark.parametrize("text,value", [("1nH", 1e-9), ("2.5e-9H", 2.5e-9), ("0.5 uH", 5e-7),
                                        ("3", 3e-9), ("10pH", 1e-11)])
def test_parse_inductance(text, value):
    assert parse_inductance(text) == pytest.approx(value)


def test_numbers_are_round_trippable(capsys):
    _, out, _ = run(capsys, "steps", "--n", "3")
    assert float(rows_of(out)[0]["factor"]) == 1 / 3
