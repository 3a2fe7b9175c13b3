import json
import subprocess
import sys

import pytest

from fflseries.cli import JobConfig, emit_report, main, run
from fflseries.cli.config import parse_character, parse_curve
from fflseries.errors import ConfigError


def job(**kw):
    return JobConfig(**kw)


def series_coeffs(report):
    return [c["coeffs"][0] for c in report["series"]["coefficients"]]


class TestRun:
    def test_zeta(self):
        status, report = run(job(task="zeta", q="3", trunc=5))
        assert status == 0
        assert series_coeffs(report) == ["1/1", "3/1", "9/1", "27/1", "81/1", "243/1"]
        assert [c["coeffs"][0] for c in report["series"]["numerator"]] == ["1/1"]
        assert [c["coeffs"][0] for c in report["series"]["denominator"]] == ["1/1", "-3/1"]
        assert report["values"] == {"pole_order": 1}

    def test_equivariance_identity(self):
        cfg = job(task="equivariance", q="5", trunc=5, sigma=[1], characters=[parse_character("1,1,1:8:1")])
        status, report = run(cfg)
        assert status == 0
        assert [v["sigma"] for v in report["equivariance"]] == [1]
        assert report["equivariance"][0]["passed"]

    def test_equivariance_all_sigmas(self):
        cfg = job(task="equivariance", q="5", trunc=5, derivatives=1, characters=[parse_character("1,1,1:8:1")])
        status, report = run(cfg)
        assert status == 0
        assert [v["sigma"] for v in report["equivariance"]] == [1, 3, 5, 7]

    def test_twist_ramified_at_bad_place(self):
        # y^2 = x^3 + t is additive at t, and chi has modulus t
        cfg = ["--task", "twist", "--q", "5", "--trunc", "4", "--curve", "0;0,1", "--character", "0,1:4:1"]
        assert main(cfg) == 1

    def test_derivatives_zero_gives_only_a0(self):
        cfg = job(task="twist", q="5", trunc=6, curve={"A": [1], "B": [2]}, characters=[parse_character("1,1,1:8:1")])
        status, report = run(cfg)
        assert status == 0
        assert len(report["values"]["A"]) == 1

    def test_curve(self):
        status, report = run(job(task="curve", q="7", trunc=6, curve={"A": [0], "B": [1]}))
        assert status == 0
        assert [c["coeffs"][0] for c in report["series"]["denominator"]] == ["1/1", "28/1", "343/1"]

    def test_trace_and_divisor_checks(self):
        for task in ("trace-check", "divisor-check"):
            status, report = run(job(task=task, q="3", trunc=5, characters=[parse_character("1,0,1:8:1")]))
            assert status == 0
        assert report["checks"]["rearrangement"]["passed"]

    def test_reconstruction_failure_exit(self):
        cfg = job(task="zeta", q="3", trunc=8, include_infinity=True, degree_bound_num=0, degree_bound_den=1)
        status, report = run(cfg)
        assert status == 3
        assert report["checks"]["reconstruction"]["passed"] is False

    def test_dirichlet_direct_sum(self):
        chars = [parse_character("0,1,1:4:1,1"), parse_character("0,1,1:4:3,3")]
        status, report = run(job(task="dirichlet", q="5", trunc=6, characters=chars))
        assert status == 0
        assert all(len(c["coeffs"]) <= 1 or set(c["coeffs"][1:]) == {"0/1"} for c in report["series"]["coefficients"])


class TestValidation:
    @pytest.mark.parametrize(
        "cfg,field",
        [
            (dict(task="nope"), "task"),
            (dict(trunc=0), "trunc"),
            (dict(derivatives=-1), "derivatives"),
            (dict(task="curve"), "curve"),
            (dict(task="twist", curve={"A": [1], "B": [1]}), "characters"),
            (dict(degree_bound_num=-2), "degree_bound_num"),
        ],
    )
    def test_offending_field(self, cfg, field):
        with pytest.raises(ConfigError) as info:
            job(**cfg).validate()
        assert info.value.field == field

    def test_non_prime_power(self, capsys):
        assert main(["--task", "zeta", "--q", "6"]) == 1
        assert "q" in capsys.readouterr().err

    def test_unknown_config_field(self, tmp_path):
        p = tmp_path / "job.json"
        p.write_text(json.dumps({"task": "zeta", "colour": 3}))
        with pytest.raises(ConfigError) as info:
            JobConfig.load(str(p))
        assert info.value.field == "colour"

    def test_missing_config_file(self, tmp_path, capsys):
        assert main(["--config", str(tmp_path / "absent.json")]) == 1
        assert "absent.json" in capsys.readouterr().err

    def test_parse_helpers(self):
        assert parse_curve("1,2;3") == {"A": [1, 2], "B": [3]}
        assert parse_character("0,1:4:1:2") == {"modulus": [0, 1], "order": 4, "exponents": [1], "infinity": 2}
        with pytest.raises(ConfigError):
            parse_curve("1,2")
        with pytest.raises(ConfigError):
            parse_character("0,1")

    def test_bad_sigma(self):
        cfg = job(task="equivariance", q="5", trunc=4, sigma=[2], characters=[parse_character("0,1:4:1")])
        with pytest.raises(ConfigError):
            run(cfg)


class TestReports:
    def test_deterministic(self):
        cfg = dict(task="equivariance", q="5", trunc=5, derivatives=2, characters=[parse_character("1,1,1:8:3")])
        a = emit_report(run(job(**cfg))[1])
        b = emit_report(run(job(**cfg))[1])
        assert a == b

    def test_config_roundtrip(self, tmp_path):
        cfg = job(task="twist", q="5", trunc=6, derivatives=1, curve={"A": [1], "B": [2]}, characters=[parse_character("1,1,1:8:1")])
        p = tmp_path / "report.json"
        p.write_text(emit_report(run(cfg)[1]))
        assert JobConfig.load(str(p)) == cfg

    def test_flags_override_file(self, tmp_path):
        p = tmp_path / "job.json"
        p.write_text(json.dumps({"task": "zeta", "q": "2", "trunc": 3}))
        out = tmp_path / "r.json"
        assert main(["--config", str(p), "--trunc", "4", "--q", "3", "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["config"]["trunc"] == 4 and report["field"]["p"] == 3
        assert len(report["series"]["coefficients"]) == 5

    def test_exact_rational_strings(self):
        _, report = run(job(task="twist", q="5", trunc=6, curve={"A": [1], "B": [2]}, characters=[parse_character("1,1,1:8:1")]))
        for c in report["values"]["A"]:
            assert all("/" in s for s in c["coeffs"])

    def test_provenance(self):
        _, report = run(job(task="zeta", q="3", trunc=6, include_infinity=True))
        assert report["series"]["places_included"] == {"q": 3, "max_degree": 6, "include_infinity": True}
        assert report["bounds"]["margin"] >= 2

    def test_console_script(self, tmp_path):
        out = tmp_path / "r.json"
        proc = subprocess.run(
            [sys.executable, "-m", "fflseries", "--task", "zeta", "--q", "2", "--trunc", "4", "--out", str(out)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "task zeta over F_2: ok" in proc.stdout
        assert json.loads(out.read_text())["exit_code"] == 0
