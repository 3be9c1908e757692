import json

import pytest

from cpmackey.app import EXIT_INTERNAL, EXIT_OK, EXIT_USER, main
from cpmackey.mackey import burnside
from cpmackey.models import MackeyDocument


@pytest.fixture(autouse=True)
def _plain_logs(monkeypatch):
    monkeypatch.delenv("LOG_FORMAT", raising=False)
    monkeypatch.delenv("CONFIG_PATH", raising=False)


def test_make_burnside(capsys):
    assert main(["make", "burnside", "--prime", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "| 1 2 |" in out
    assert out.startswith("C_2-Mackey functor burnside")


def test_make_rejects_non_prime(capsys):
    assert main(["make", "burnside", "--prime", "4"]) == EXIT_USER
    assert capsys.readouterr().out == ""


def test_bad_flags_exit_with_user_error():
    assert main(["make", "sphere", "--prime", "2"]) == EXIT_USER
    assert main([]) == EXIT_USER


def test_make_fixed_point_from_flags(capsys):
    assert main(["make", "fixed-point", "--prime", "2", "--conj", "-1", "--invariants"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed:  / underlying: 0"
    assert main(["make", "orbit", "--prime", "2", "--conj", "-1", "--invariants"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed: 2 / underlying: 0"
    assert main(["make", "orbit", "--prime", "2"]) == EXIT_USER


def test_make_orbit_from_module_document(tmp_path, capsys):
    sign = tmp_path / "sign.json"
    sign.write_text(
        json.dumps(
            {
                "relations": {"rows": 1, "cols": 0, "entries": [[]]},
                "conj": {"rows": 1, "cols": 1, "entries": [[-1]]},
            }
        )
    )
    args = ["make", "orbit", "--prime", "2", "--module", str(sign), "--invariants"]
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed: 2 / underlying: 0"
    assert main(args + ["--conj", "-1"]) == EXIT_USER
    assert main(["make", "orbit", "--prime", "2", "--module", str(tmp_path / "none.json")]) == EXIT_USER


def test_unparsable_flag_values_are_user_errors():
    assert main(["make", "fixed-point", "--prime", "2", "--conj", "1,x"]) == EXIT_USER
    assert main(["make", "zero-on-underlying", "--prime", "2", "--group", "2;"]) == EXIT_USER


def test_internal_failures_are_not_reported_as_user_errors(o2, write_functor, monkeypatch):
    def broken(m, n):
        raise ValueError("broken")

    monkeypatch.setattr("cpmackey.app.box_product", broken)
    m = write_functor(o2, "o2")
    assert main(["box", "--m", m, "--n", m]) == EXIT_INTERNAL


def test_make_writes_json_and_show_reads_it(tmp_path, capsys):
    path = tmp_path / "a.json"
    assert main(["make", "burnside", "--prime", "3", "--json", str(path)]) == EXIT_OK
    doc = MackeyDocument.model_validate_json(path.read_text())
    assert doc.to_functor() == burnside(3)
    capsys.readouterr()
    assert main(["show", "--m", str(path), "--invariants"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed: 0,0 / underlying: 0"


def test_random_functor_is_seeded(tmp_path, capsys):
    args = ["make", "random", "--prime", "3", "--seed", "9", "--invariants"]
    assert main(args) == EXIT_OK
    first = capsys.readouterr().out
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out == first


def test_compute_ext_zero(o2, write_functor, capsys):
    m = write_functor(burnside(2), "a")
    n = write_functor(o2, "o2")
    assert main(["compute", "ext", "--i", "0", "--m", m, "--n", n, "--prune", "--invariants"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed: 0 / underlying: 0"


def test_box_and_ihom(o2, write_functor, capsys):
    m = write_functor(burnside(2), "a")
    n = write_functor(o2, "o2")
    assert main(["box", "--m", m, "--n", n, "--prune", "--invariants"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed: 0 / underlying: 0"
    assert main(["ihom", "--m", m, "--n", n, "--invariants"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "fixed: 0 / underlying: 0"


def test_resolution_command(o2, write_functor, tmp_path, capsys):
    m = write_functor(o2, "o2")
    out_path = tmp_path / "res.json"
    assert main(["res", "--m", m, "--n", "2", "--no-prune", "--json", str(out_path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "d0: P0 ranks (fixed 3, underlying 3)" in out
    assert "d2: P2 ranks (fixed 1, underlying 2)" in out
    assert len(json.loads(out_path.read_text())) == 3


def test_missing_and_malformed_files(tmp_path, capsys):
    missing = str(tmp_path / "missing.json")
    assert main(["show", "--m", missing]) == EXIT_USER
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["show", "--m", str(bad)]) == EXIT_USER
    bad.write_text(json.dumps({"prime": 2}))
    assert main(["show", "--m", str(bad)]) == EXIT_USER


def test_periodicity_range_is_checked(capsys):
    args = ["periodicity", "--prime", "2", "--from", "1", "--to", "3"]
    assert main(args) == EXIT_USER


def test_config_file_is_honoured(tmp_path, o2, write_functor, capsys):
    config = tmp_path / "config.json"
    config.write_text(json.dumps({"run_config": {"prune_resolutions": False}}))
    m = write_functor(o2, "o2")
    assert main(["--config", str(config), "res", "--m", m, "--n", "1"]) == EXIT_OK
    assert "d1: P1 ranks (fixed 3, underlying 3)" in capsys.readouterr().out


@pytest.mark.slow
def test_periodicity_report_file(o2, write_functor, tmp_path, capsys):
    m = write_functor(o2, "o2")
    out = tmp_path / "report.json"
    args = ["periodicity", "--prime", "2", "--from", "1", "--to", "5", "--m", m, "--n", m]
    assert main(args + ["--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    assert report["sampleCount"] == 1
    assert report["perSample"][0]["matchesAtShift4"] == {"1": True}
    assert (tmp_path / "periodicity_samples" / "report.jsonl").exists()
    assert "1/1" in capsys.readouterr().out
