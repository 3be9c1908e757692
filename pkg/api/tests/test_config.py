import json
import logging

import pytest
from pydantic import ValidationError

from cpmackey.config.config_setup import AppConfig, read_json_config
from cpmackey.exceptions import InputError
from cpmackey.utils import JobAwareLogFormatter, join_ints, parse_int_list, parse_matrix


def test_default_config_file_loads():
    config = read_json_config(init_logging=False)
    assert config.run_config.prune_resolutions
    assert config.run_config.cover_strategy == "minimal"
    assert config.run_config.random.coef_bound == 9


def test_config_from_env(tmp_path, monkeypatch):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"run_config": {"cover_strategy": "levelwise"}}))
    monkeypatch.setenv("CONFIG_PATH", str(path))
    config = read_json_config(init_logging=False)
    assert config.run_config.cover_strategy == "levelwise"
    assert config.logs.log_level == "INFO"


def test_invalid_config_values():
    with pytest.raises(ValidationError):
        AppConfig.model_validate({"run_config": {"cover_strategy": "greedy"}})
    with pytest.raises(ValidationError):
        AppConfig.model_validate({"run_config": {"periodicity_workers": 0}})


def test_job_label_reaches_log_lines():
    config = AppConfig()
    config.logs.init_formatter()
    config.logs.job = "res"
    record = logging.LogRecord("cpmackey", logging.INFO, __file__, 1, "hello", None, None)
    line = config.logs.job_log_formatter.format(record)
    assert line.endswith("- [res] - hello")
    assert JobAwareLogFormatter().format(record).endswith("- - hello")


def test_parsing_helpers():
    assert parse_int_list("1, -2,3") == [1, -2, 3]
    assert parse_int_list("") == []
    assert parse_matrix("2,0;0,3") == [[2, 0], [0, 3]]
    with pytest.raises(InputError):
        parse_matrix("1,2;3", cols=2)
    with pytest.raises(InputError, match="comma-separated integers"):
        parse_int_list("1,x")
    assert join_ints([6, 0]) == "6,0"


def test_json_log_records():
    from cpmackey import glog

    job_fmt = JobAwareLogFormatter("periodicity")
    formatter = glog.Formatter(job_fmt)
    record = logging.LogRecord("cpmackey", logging.WARNING, __file__, 1, "x=%d", (3,), None)
    data = json.loads(formatter.format(record))
    assert data["severity"] == "WARNING"
    assert data["job"] == "periodicity"
    assert data["message"].endswith("[periodicity] - x=3")
    assert record.getMessage() == "x=3"
