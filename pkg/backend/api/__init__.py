"""
API package initialization.

This package exposes the distribution library over HTTP:
- routes: evaluate, describe, sample, curve, catalog and check endpoints
- models: Request and response schemas
"""

from api.routes import router

__all__ = ['router']
