"""Command line parsing, suite orchestration, report emission, exit codes."""

import json
from dataclasses import replace
from fractions import Fraction

import pytest

from rbx import (
    ConfigError,
    RatMatrix,
    Report,
    SuiteConfig,
    main,
    matrix_algebra,
    parse_config,
    run_suite,
)

FAST = ["--trials", "5"]


class TestParseConfig:
    def test_defaults(self):
        cfg = parse_config(["verify"])
        assert cfg == SuiteConfig()
        assert (cfg.suite, cfg.order, cfg.trials, cfg.format) == ("all", 6, 200, "text")

    def test_flags(self):
        cfg = parse_config(
            ["verify", "--suite", "magnus", "--order", "4", "--seed", "7",
             "--weight", "2/3", "--bs-arity", "4", "--format", "json"]
        )
        assert cfg.suite == "magnus"
        assert cfg.order == 4
        assert cfg.seed == 7
        assert cfg.weight == Fraction(2, 3)
        assert cfg.bs_arity == 4
        assert cfg.format == "json"

    def test_config_file_and_flag_precedence(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("# sized-down run\nsuite = spitzer\norder=5\nbs-arity = 4\n\n")
        cfg = parse_config(["verify", "--config", str(path)])
        assert (cfg.suite, cfg.order, cfg.bs_arity) == ("spitzer", 5, 4)
        cfg = parse_config(["verify", "--config", str(path), "--order", "3"])
        assert cfg.order == 3

    def test_config_file_errors(self, tmp_path):
        bad = tmp_path / "bad.conf"
        bad.write_text("order\n")
        with pytest.raises(ConfigError):
            parse_config(["verify", "--config", str(bad)])
        bad.write_text("colour=red\n")
        with pytest.raises(ConfigError):
            parse_config(["verify", "--config", str(bad)])
        bad.write_text("order=six\n")
        with pytest.raises(ConfigError):
            parse_config(["verify", "--config", str(bad)])
        with pytest.raises(ConfigError):
            parse_config(["verify", "--config", str(tmp_path / "absent.conf")])

    def test_bad_weight(self):
        with pytest.raises(ConfigError):
            parse_config(["verify", "--weight", "one-half"])

    def test_argparse_rejects_unknown_choices(self):
        with pytest.raises(SystemExit):
            parse_config(["verify", "--suite", "everything"])
        with pytest.raises(SystemExit):
            parse_config([])


class TestSuiteConfigValidation:
    @pytest.mark.parametrize(
        "field,value",
        [
            ("suite", "noesis"),
            ("model", "octonions"),
            ("order", 0),
            ("order", 9),
            ("window", 2),
            ("window", 17),
            ("dim", 1),
            ("dim", 5),
            ("alphabet", 0),
            ("alphabet", 10),
            ("bs_arity", 0),
            ("bs_arity", 7),
            ("trials", -1),
            ("format", "yaml"),
        ],
    )
    def test_rejects_out_of_range(self, field, value):
        with pytest.raises(ConfigError):
            SuiteConfig(**{field: value})


class TestRunSuite:
    def test_report_shape(self):
        cfg = SuiteConfig(suite="shuffle", trials=5)
        report = run_suite(cfg)
        assert report.suite == "shuffle"
        assert report.failed == 0
        assert report.passed == len(report.checks) > 0
        names = [c.name for c in report.checks]
        assert names == sorted(names)
        assert set(report.params) == {
            "suite", "model", "order", "window", "dim", "weight",
            "alphabet", "bs_arity", "trials", "seed",
        }
        assert report.params["weight"] is None

    def test_weight_appears_in_params_as_text(self):
        cfg = SuiteConfig(suite="rb-laws", model="matrix", weight=Fraction(2), trials=3)
        report = run_suite(cfg)
        assert report.params["weight"] == "2"
        assert report.failed == 0
        assert any("beta=" in c.name for c in report.checks)

    def test_suite_model_mismatch(self):
        with pytest.raises(ConfigError):
            run_suite(SuiteConfig(suite="spitzer", model="standard-nc", trials=3))
        with pytest.raises(ConfigError):
            run_suite(SuiteConfig(suite="bogoliubov", model="matrix", trials=3))

    def test_weight_rescale_refuses_weight_zero_models(self):
        with pytest.raises(ConfigError):
            run_suite(SuiteConfig(suite="rb-laws", weight=Fraction(2), trials=3))

    def test_deterministic_modulo_elapsed(self):
        cfg = SuiteConfig(suite="quasi-shuffle", trials=5)
        a, b = run_suite(cfg), run_suite(cfg)
        a.elapsed_ms = b.elapsed_ms = 0
        assert a.to_json() == b.to_json()


def _corrupt_projection(m: RatMatrix) -> RatMatrix:
    return RatMatrix(
        [
            [v if i <= j or (i, j) == (2, 0) else 0 for j, v in enumerate(row)]
            for i, row in enumerate(m.rows)
        ]
    )


def _corrupt_models() -> dict:
    bad = replace(matrix_algebra(3), rb=_corrupt_projection)
    return {"matrix": bad}


class TestMain:
    def test_exit_zero_and_text_output(self, capsys):
        rc = main(["verify", "--suite", "shuffle"] + FAST)
        out = capsys.readouterr().out
        assert rc == 0
        assert out.startswith("suite: shuffle")
        assert "PASS" in out and "FAIL" not in out
        assert "failed: 0" in out

    def test_exit_one_on_failing_model(self, capsys):
        rc = main(
            ["verify", "--suite", "rb-laws", "--model", "matrix"] + FAST,
            models=_corrupt_models(),
        )
        out = capsys.readouterr().out
        assert rc == 1
        assert "FAIL" in out
        assert "lhs=" in out

    def test_exit_two_on_config_error(self, capsys):
        rc = main(["verify", "--order", "99"])
        err = capsys.readouterr().err
        assert rc == 2
        assert err.startswith("error:")

    def test_exit_two_on_unwritable_output(self, tmp_path, capsys):
        target = tmp_path / "missing" / "report.json"
        rc = main(["verify", "--suite", "shuffle", "--output", str(target)] + FAST)
        assert rc == 2
        assert "error:" in capsys.readouterr().err

    def test_json_schema(self, capsys):
        rc = main(["verify", "--suite", "quasi-shuffle", "--format", "json"] + FAST)
        assert rc == 0
        payload = json.loads(capsys.readouterr().out)
        assert set(payload) == {
            "suite", "params", "checks", "passed", "failed", "elapsed_ms",
        }
        assert payload["suite"] == "quasi-shuffle"
        assert payload["failed"] == 0
        assert payload["passed"] == len(payload["checks"])
        for check in payload["checks"]:
            assert set(check) == {"name", "status", "anchor", "counterexample"}
            assert check["status"] in ("pass", "fail")
            assert check["anchor"].startswith("Eq. (")
        names = [c["name"] for c in payload["checks"]]
        assert names == sorted(names)

    def test_output_file(self, tmp_path, capsys):
        target = tmp_path / "report.json"
        rc = main(
            ["verify", "--suite", "shuffle", "--format", "json", "--output", str(target)]
            + FAST
        )
        assert rc == 0
        assert capsys.readouterr().out == ""
        payload = json.loads(target.read_text())
        assert payload["failed"] == 0


def test_empty_report_renders():
    report = Report(suite="none", params={})
    assert report.passed == report.failed == 0
    assert report.to_text().startswith("suite: none")
    assert json.loads(report.to_json())["checks"] == []
