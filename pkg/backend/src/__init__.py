"""
Source package initialization.

This package contains the implementation of:
- core: The Amoroso and log-gamma families and the named-distribution catalog
- verify: Numerical oracles, identity and limit checks, and the suite runner
- utils: Output formatting helpers

Modules import each other as top-level packages (``core``, ``verify``,
``utils``); entry points put this directory on ``sys.path``.
"""
