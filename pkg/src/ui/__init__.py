"""User interface: command-line app and output formatters."""

from .cli import app

__all__ = ["app"]
