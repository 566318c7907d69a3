import os
from pathlib import Path
from typing import Dict, Optional

from dotenv import load_dotenv

DEFAULT_SEED = 0
KS_SIGNIFICANCE = 0.01

_DEFAULTS = {
    'api_host': '0.0.0.0',
    'api_port': '8000',
    'log_level': 'INFO',
    'max_samples': '1000000',
    'max_curve_points': '100000',
}

_ENV_KEYS = {
    'api_host': 'AMOROSO_API_HOST',
    'api_port': 'AMOROSO_API_PORT',
    'log_level': 'AMOROSO_LOG_LEVEL',
    'max_samples': 'AMOROSO_MAX_SAMPLES',
    'max_curve_points': 'AMOROSO_MAX_CURVE_POINTS',
}

_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


def load_service_config() -> Dict[str, str]:
    """Load service configuration from environment or config file"""

    # .env next to the backend, if any, feeds the environment
    load_dotenv(Path(__file__).parent.parent / '.env')

    config = {key: os.getenv(env_key) for key, env_key in _ENV_KEYS.items()}

    missing_keys = [key for key, value in config.items() if not value]
    if missing_keys:
        # Try to load from config file
        config_path = Path(__file__).parent / 'service.conf'
        if config_path.exists():
            with open(config_path) as f:
                for line in f:
                    if '=' in line and not line.lstrip().startswith('#'):
                        key, value = line.strip().split('=', 1)
                        if not config.get(key.strip()):
                            config[key.strip()] = value.strip()

    for key, value in _DEFAULTS.items():
        if not config.get(key):
            config[key] = value
    return config


def validate_config(config: Dict[str, str]) -> Optional[str]:
    """Validate service configuration"""
    problems = []
    for key in ('api_port', 'max_samples', 'max_curve_points'):
        value = config.get(key, '')
        if not value.isdigit() or int(value) <= 0:
            problems.append(f"{key} must be a positive integer, got {value!r}")
    if config.get('log_level', '').upper() not in _LOG_LEVELS:
        problems.append(f"log_level must be one of {', '.join(_LOG_LEVELS)}, got {config.get('log_level')!r}")

    if problems:
        return f"Invalid service configuration: {'; '.join(problems)}"
    return None
