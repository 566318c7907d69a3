"""
Utilities package initialization.

This package provides utility functions and helpers including:
- formatting: 17-digit number rendering, summary and curve output for the CLI and API
"""

from .formatting import format_number, frame_csv, frame_records, frame_text, json_number, summary_json, summary_text

__all__ = ['format_number', 'frame_csv', 'frame_records', 'frame_text', 'json_number', 'summary_json', 'summary_text']
