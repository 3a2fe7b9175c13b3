"""Command-line front end."""

from .config import JobConfig
from .main import emit_report, main, run

__all__ = ["JobConfig", "emit_report", "main", "run"]
