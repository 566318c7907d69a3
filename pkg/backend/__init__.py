"""
Backend package initialization.

This package contains the distribution library and its service surfaces.
It includes the following subpackages:
- api: REST API endpoints and models
- config: Configuration management
- src.core: Distribution families and catalog
- src.verify: Verification suites
- src.utils: Formatting helpers
"""
