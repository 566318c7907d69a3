"""
Configuration package initialization.

This package contains configuration management for:
- Service settings (host, port, log level, request caps) and public constants
"""

from config.settings import DEFAULT_SEED, KS_SIGNIFICANCE, load_service_config, validate_config

__all__ = ['DEFAULT_SEED', 'KS_SIGNIFICANCE', 'load_service_config', 'validate_config']
