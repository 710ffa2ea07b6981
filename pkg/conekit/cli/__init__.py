# conekit/cli/__init__.py
from conekit.cli.main import cli

__all__ = ["cli"]
