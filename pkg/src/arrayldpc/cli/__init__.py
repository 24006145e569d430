"""Command-line interface for arrayldpc."""

from arrayldpc.cli.main import app, run

__all__ = ["app", "run"]
