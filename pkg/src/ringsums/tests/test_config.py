"""
設定と例外・ログの基盤のテスト
"""

import json

import pytest
from pydantic import ValidationError

from ringsums.core.config import Settings, get_settings, use_settings
from ringsums.core.exceptions import (
    ClosedFormDispatchError,
    EnumerationCapError,
    InfeasibleComputationError,
    InvarianceHypothesisError,
    RingMismatchError,
    RingSpecError,
    RingSumsError,
    UnsupportedRingError,
    VerificationFailure,
)
from ringsums.core.logging_utils import PerformanceLogger, get_logger, setup_logging


def test_default_settings():
    """既定値"""
    settings = Settings(_env_file=None)
    assert settings.enumeration_cap == 2**20
    assert settings.jobs == 1
    assert settings.log_level == "WARNING"
    assert settings.log_json is False


def test_settings_from_environment(monkeypatch):
    """RINGSUMS_ 接頭辞の環境変数を読む"""
    monkeypatch.setenv("RINGSUMS_ENUMERATION_CAP", "1000")
    monkeypatch.setenv("RINGSUMS_LOG_LEVEL", "debug")
    settings = Settings(_env_file=None)
    assert settings.enumeration_cap == 1000
    assert settings.log_level == "DEBUG"


def test_invalid_log_level():
    with pytest.raises(ValidationError):
        Settings(_env_file=None, log_level="LOUD")


def test_with_overrides_ignores_none():
    settings = Settings(_env_file=None)
    assert settings.with_overrides(enumeration_cap=None) is settings
    changed = settings.with_overrides(enumeration_cap=16, jobs=None)
    assert changed.enumeration_cap == 16
    assert changed.jobs == settings.jobs
    assert settings.enumeration_cap == 2**20


def test_with_overrides_validates():
    with pytest.raises(ValidationError):
        Settings(_env_file=None).with_overrides(jobs=0)


def test_use_settings_replaces_global():
    new = Settings(_env_file=None, enumeration_cap=7)
    use_settings(new)
    assert get_settings().enumeration_cap == 7


@pytest.mark.parametrize(
    "error, code",
    [
        (RingSumsError("x"), 1),
        (RingSpecError("x", 3), 2),
        (RingMismatchError("GF(2)", "GF(4)"), 2),
        (UnsupportedRingError("frobenius", "Mat(2,GF(2))"), 2),
        (EnumerationCapError(100, 10), 3),
        (InfeasibleComputationError("x"), 3),
        (ClosedFormDispatchError("Mat(2,Nil(GF(2),2))"), 4),
        (InvarianceHypothesisError("x"), 2),
        (VerificationFailure("x"), 1),
    ],
)
def test_exit_codes(error, code):
    """例外ごとの終了コード"""
    assert isinstance(error, RingSumsError)
    assert error.exit_code == code


def test_spec_error_position_in_message():
    error = RingSpecError("余分な入力", 5)
    assert error.position == 5
    assert "位置 5" in error.message


def test_logger_appends_context(capsys):
    """k=v の付加情報"""
    setup_logging("INFO")
    get_logger("tests").info("計算", ring="GF(2)", k=3)
    err = capsys.readouterr().err
    assert "ringsums.tests" in err
    assert "計算 | ring=GF(2) | k=3" in err


def test_json_logging(capsys):
    setup_logging("INFO", json_format=True)
    get_logger("tests").warning("上限", cap=10)
    line = capsys.readouterr().err.strip().splitlines()[-1]
    record = json.loads(line)
    assert record["levelname"] == "WARNING"
    assert record["context"] == {"cap": 10}


def test_setup_logging_is_idempotent():
    first = setup_logging("INFO")
    second = setup_logging("DEBUG")
    assert first is second
    assert len(second.handlers) == 1


def test_performance_logger_measures_duration():
    with PerformanceLogger(get_logger("tests"), "noop") as perf:
        pass
    assert perf.duration >= 0.0


def test_performance_logger_does_not_swallow():
    with pytest.raises(ValueError):
        with PerformanceLogger(get_logger("tests"), "boom"):
            raise ValueError("boom")
