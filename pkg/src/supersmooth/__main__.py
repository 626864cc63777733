"""Allows `python -m supersmooth ...`."""

from .cli import entry

entry()
