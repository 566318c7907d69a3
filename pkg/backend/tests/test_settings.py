import pytest

from config.settings import load_service_config, validate_config

ENV_KEYS = (
    "AMOROSO_API_HOST",
    "AMOROSO_API_PORT",
    "AMOROSO_LOG_LEVEL",
    "AMOROSO_MAX_SAMPLES",
    "AMOROSO_MAX_CURVE_POINTS",
)


@pytest.fixture
def clean_env(monkeypatch):
    for key in ENV_KEYS:
        monkeypatch.setenv(key, "")
    return monkeypatch


def test_environment_overrides_defaults(clean_env):
    clean_env.setenv("AMOROSO_API_PORT", "9100")
    clean_env.setenv("AMOROSO_MAX_SAMPLES", "500")
    config = load_service_config()
    assert config["api_port"] == "9100"
    assert config["max_samples"] == "500"
    assert validate_config(config) is None


def test_defaults_are_valid():
    config = {
        "api_host": "0.0.0.0",
        "api_port": "8000",
        "log_level": "INFO",
        "max_samples": "1000000",
        "max_curve_points": "100000",
    }
    assert validate_config(config) is None


@pytest.mark.parametrize(
    "key, value",
    [("api_port", "eighty"), ("max_samples", "0"), ("max_curve_points", "-5"), ("log_level", "LOUD")],
)
def test_validate_config_reports_bad_values(key, value):
    config = {
        "api_host": "0.0.0.0",
        "api_port": "8000",
        "log_level": "INFO",
        "max_samples": "1000000",
        "max_curve_points": "100000",
        key: value,
    }
    error = validate_config(config)
    assert error is not None
    assert key in error
