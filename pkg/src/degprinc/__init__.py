"""Degree-principle toolkit for finite reflection groups."""
from __future__ import annotations

__version__ = "0.1.0"
