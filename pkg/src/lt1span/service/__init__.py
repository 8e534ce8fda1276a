"""HTTP service wrapping the colouring library."""
from __future__ import annotations

from .app import app

__all__ = ["app"]
