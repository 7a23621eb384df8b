import csv
import json
import subprocess
import sys

import pytest

from dirichlet_approx import cli
from dirichlet_approx.config import bundled


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def header(path):
    with open(path) as fh:
        return fh.readline().strip().split(",")


def write_config(tmp_path, data, name="cfg.json"):
    p = tmp_path / name
    p.write_text(json.dumps(data))
    return str(p)


class TestNorm:
    def test_demo(self, tmp_path, capsys):
        out = tmp_path / "norm.csv"
        assert cli.main(["norm", "--config", str(bundled("demo_norm.json")), "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert header(out) == cli.NORM_HEADER
        rows = {(r["function_id"], r["measure_id"]): r for r in read_csv(out)}
        assert float(rows["geometric_half", "delta_1"]["dirichlet_mu"]) == pytest.approx(4 / 3, rel=1e-12)
        assert float(rows["z_squared", "delta_0"]["dirichlet_mu"]) == 1
        assert float(rows["constant_3", "delta_1"]["dmu_norm_sq"]) == 9

    def test_truncations(self, tmp_path):
        out = tmp_path / "n.csv"
        cfg = write_config(tmp_path, {
            "function": {"id": "g", "family": "geometric", "params": [0.5], "N": 10},
            "measure": {"type": "atomic", "atoms": [{"re": 1, "im": 0, "mass": 1}]},
        })
        assert cli.main(["norm", "--config", cfg, "--out", str(out), "--truncations", "10,20,40"]) == 0
        vals = [float(r["dirichlet_mu"]) for r in read_csv(out)]
        assert [int(r["N"]) for r in read_csv(out)] == [10, 20, 40]
        assert abs(vals[-1] - 4 / 3) < abs(vals[0] - 4 / 3)

    def test_verbose_progress(self, tmp_path, capsys):
        out = tmp_path / "norm.csv"
        cli.main(["norm", "--config", str(bundled("demo_norm.json")), "--out", str(out), "--verbose"])
        assert "norm" in capsys.readouterr().out


class TestConverge:
    def test_demo(self, tmp_path):
        out = tmp_path / "c.csv"
        assert cli.main(["converge", "--config", str(bundled("demo_converge.json")), "--out", str(out)]) == 0
        assert header(out) == cli.CONVERGE_HEADER
        rows = read_csv(out)
        fejer_T = [float(r["err_sq"]) for r in rows if r["array_name"] == "fejer" and r["measure_id"] == "uniform_T"]
        assert fejer_T[-1] < 1e-4

    def test_truncation_exact_zero(self, tmp_path):
        out = tmp_path / "c.csv"
        cfg = write_config(tmp_path, {
            "function": {"id": "p", "coeffs": [[1, 0], [2, 1], [0, 3]]},
            "measure": {"type": "circle", "nodes": 16},
            "arrays": ["taylor_truncation"],
        })
        assert cli.main(["converge", "--config", cfg, "--out", str(out), "--n-list", "1,2,5"]) == 0
        errs = [float(r["err_sq"]) for r in read_csv(out)]
        assert errs[0] > 0 and errs[1] == 0 and errs[2] == 0

    def test_counterexample(self, tmp_path):
        out = tmp_path / "ce.csv"
        assert cli.main(["converge", "--counterexample", "6", "--out", str(out)]) == 0
        assert header(out) == cli.COUNTEREXAMPLE_HEADER
        rows = read_csv(out)
        assert all(float(r["taylor_err_sq"]) >= 1 - 1e-12 for r in rows[:-1])
        fe = [float(r["fejer_err_sq"]) for r in rows]
        assert fe == sorted(fe, reverse=True)

    def test_bad_n_list(self, tmp_path):
        with pytest.raises(SystemExit) as info:
            cli.main(["converge", "--config", str(bundled("demo_converge.json")),
                      "--out", str(tmp_path / "x.csv"), "--n-list", "4,2"])
        assert info.value.code == 2


class TestVerifyIdentity:
    def test_demo(self, tmp_path):
        out = tmp_path / "id.csv"
        assert cli.main(["verify-identity", "--out", str(out)]) == 0
        assert header(out) == cli.IDENTITY_HEADER
        rows = read_csv(out)
        assert len(rows) == 16
        assert all(float(r["rel_err"]) < 1e-5 for r in rows)

    def test_threshold_zero(self, tmp_path, capsys):
        out = tmp_path / "id.csv"
        assert cli.main(["verify-identity", "--out", str(out), "--threshold", "0"]) == 4
        assert "threshold" in capsys.readouterr().err

    def test_power_mode(self, tmp_path):
        out = tmp_path / "pw.csv"
        assert cli.main(["verify-identity", "--out", str(out), "--power-alphas", "0,0.25,0.5,0.75,1"]) == 0
        assert header(out) == cli.POWER_HEADER
        assert all(0.25 <= float(r["ratio"]) <= 4 for r in read_csv(out))

    def test_numeric_error(self, tmp_path, monkeypatch):
        from dirichlet_approx.superharm import NonFiniteWeightError

        def boom(*a, **k):
            raise NonFiniteWeightError(0.5j, float("inf"))
        monkeypatch.setattr(cli, "identity_check", boom)
        assert cli.main(["verify-identity", "--out", str(tmp_path / "x.csv")]) == 3


class TestValidateArray:
    def test_builtin(self, tmp_path):
        out = tmp_path / "v.csv"
        assert cli.main(["validate-array", "--out", str(out)]) == 4
        assert header(out) == cli.VALIDATE_HEADER
        rows = read_csv(out)
        failing = [(r["array_name"], r["condition"]) for r in rows if r["passed"] == "false"]
        assert failing == [("taylor_truncation", "E3")]

    def test_good_only(self, tmp_path):
        cfg = write_config(tmp_path, {"arrays": ["fejer", "vallee_poussin"]})
        assert cli.main(["validate-array", "--config", cfg, "--out", str(tmp_path / "v.csv")]) == 0


class TestErrors:
    def test_missing_output(self):
        assert cli.main(["norm", "--config", str(bundled("demo_norm.json"))]) == 2

    def test_unreadable_config(self, tmp_path):
        assert cli.main(["norm", "--config", str(tmp_path / "nope.json"), "--out", "x.csv"]) == 2

    def test_malformed_config(self, tmp_path):
        cfg = write_config(tmp_path, {"functions": [{"id": "x"}], "measures": []})
        assert cli.main(["norm", "--config", cfg, "--out", str(tmp_path / "x.csv")]) == 2

    def test_non_finite_coeffs(self, tmp_path):
        p = tmp_path / "cfg.json"
        p.write_text('{"function": {"coeffs": [[1, NaN]]}, "measure": {"type": "circle"}}')
        assert cli.main(["norm", "--config", str(p), "--out", str(tmp_path / "x.csv")]) == 2


def test_byte_identical_repeats(tmp_path):
    outs = []
    for i in range(2):
        out = tmp_path / f"run{i}.csv"
        assert cli.main(["verify-identity", "--out", str(out)]) == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_entry_point(tmp_path):
    out = tmp_path / "n.csv"
    proc = subprocess.run(
        [sys.executable, "-m", "dirichlet_approx.cli", "norm",
         "--config", str(bundled("demo_norm.json")), "--out", str(out)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == ""
    assert header(out) == cli.NORM_HEADER
