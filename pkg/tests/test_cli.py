import json

import pytest
from click.testing import CliRunner

from dsplan.cli import main, parse_config, ConfigError


BASE_CONFIG = {
    "version": 1,
    "scheme": "type1",
    "prior": {"a": 2.5, "b": 0.8},
    "costs": {"c_sample": 0.5, "c_time": 0.5, "c_reject": 30.0, "salvage": 0.0},
    "acceptance_cost": [[2, 0], [2, 1], [2, 2]],
    "plan": {"n": 3, "tau": 0.725, "zeta": 2.975},
}


def write_config(tmp_path, **overrides):
    doc = json.loads(json.dumps(BASE_CONFIG))
    for key, value in overrides.items():
        if value is None:
            doc.pop(key, None)
        else:
            doc[key] = value
    path = tmp_path / "config.json"
    path.write_text(json.dumps(doc))
    return str(path)


class TestParseConfig:
    def test_round_trip(self):
        cfg = parse_config(json.dumps(BASE_CONFIG))
        assert cfg.scheme == "type1"
        assert cfg.plan.n == 3

    def test_zeta_inf_sentinel(self):
        doc = dict(BASE_CONFIG, plan={"n": 0, "tau": 0.0, "zeta": "inf"})
        cfg = parse_config(json.dumps(doc))
        assert cfg.plan.zeta == float("inf")

    def test_version_required(self):
        with pytest.raises(ConfigError):
            parse_config(json.dumps(dict(BASE_CONFIG, version=2)))

    def test_bad_scheme(self):
        with pytest.raises(ConfigError):
            parse_config(json.dumps(dict(BASE_CONFIG, scheme="type2")))

    def test_module_preconditions_enforced(self):
        doc = dict(BASE_CONFIG, costs={"c_sample": 0.1, "c_time": 0.5,
                                       "c_reject": 30.0, "salvage": 0.5})
        with pytest.raises(ConfigError):
            parse_config(json.dumps(doc))


class TestRiskCommand:
    def test_paper_row(self, tmp_path):
        path = write_config(tmp_path)
        result = CliRunner().invoke(main, ["risk", "--config", path])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("scheme,n,r,tau,zeta")
        assert '25.2777' in lines[1]

    def test_no_sampling_reject(self, tmp_path):
        path = write_config(tmp_path, plan={"n": 0, "tau": 0.0, "zeta": 0.0})
        result = CliRunner().invoke(main, ["risk", "--config", path])
        assert result.exit_code == 0
        assert ",30.0000," in result.output or result.output.strip().endswith("30.0000,,,")

    def test_mc_flag_appends_estimate(self, tmp_path):
        path = write_config(tmp_path)
        result = CliRunner().invoke(main, ["risk", "--config", path, "--mc", "--quick"])
        assert result.exit_code == 0
        row = result.output.strip().splitlines()[1]
        assert row.split(",")[-1] == "50000"

    def test_validation_failure_exit_2(self, tmp_path):
        path = write_config(tmp_path, plan=None)
        result = CliRunner().invoke(main, ["risk", "--config", path])
        assert result.exit_code == 2

    def test_stability_cap_exit_3(self, tmp_path):
        path = write_config(tmp_path, plan={"n": 31, "tau": 1.0, "zeta": 1.0})
        result = CliRunner().invoke(main, ["risk", "--config", path])
        assert result.exit_code == 3

    def test_missing_config_exit_2(self):
        result = CliRunner().invoke(main, ["risk"])
        assert result.exit_code == 2


class TestOptimizeCommand:
    def test_coarse_grid(self, tmp_path):
        path = write_config(
            tmp_path,
            plan=None,
            grid={"zeta_step": 0.25, "tau_step": 0.25, "zeta_cap": 6.0},
            costs={"c_sample": 1.0, "c_time": 1.0, "c_reject": 8.0, "salvage": 0.0},
        )
        result = CliRunner().invoke(main, ["optimize", "--config", path])
        assert result.exit_code == 0, result.output
        lines = result.output.strip().splitlines()
        assert lines[1].startswith("optimum,type1,")

    def test_scan_log_written(self, tmp_path):
        path = write_config(
            tmp_path,
            plan=None,
            grid={"zeta_step": 0.25, "tau_step": 0.25, "zeta_cap": 6.0},
            costs={"c_sample": 1.0, "c_time": 1.0, "c_reject": 8.0, "salvage": 0.0},
        )
        log = tmp_path / "scan.csv"
        result = CliRunner().invoke(
            main, ["optimize", "--config", path, "--scan-log", str(log)]
        )
        assert result.exit_code == 0
        assert log.read_text().startswith("scheme,n,r,tau,zeta,risk")


class TestReproduceCommand:
    def test_unknown_table(self):
        result = CliRunner().invoke(main, ["reproduce", "T99"])
        assert result.exit_code == 2

    def test_t8_anchor_row(self, tmp_path):
        import csv

        out = tmp_path / "t8.csv"
        result = CliRunner().invoke(main, ["reproduce", "T8", "--out", str(out)])
        assert result.exit_code == 0, result.output
        with open(out) as fh:
            rows = list(csv.DictReader(fh))
        first = rows[0]
        assert first["table"] == "T8"
        assert first["label"] == "a=1.5, b=0.8"
        assert first["source"] == "dsp"
        assert first["risk_4dp"] == "27.0038"


class TestValidateCommand:
    def test_quick_suite_passes(self):
        result = CliRunner().invoke(main, ["validate", "--quick"])
        assert result.exit_code == 0, result.output
        assert "[FAIL]" not in result.output
        assert result.output.count("[PASS]") >= 8

    def test_negative_control_fails(self):
        result = CliRunner().invoke(main, ["validate", "--quick", "--corrupt"])
        assert result.exit_code == 1
        assert "[FAIL]" in result.output
