"""Scan backend selection: compiled extension when available, else pure Python.

COLLATZLAB_BACKEND=python forces the fallback; COLLATZLAB_BACKEND=c insists
on the compiled module and raises if it is missing.
"""

from __future__ import annotations

import os


def load_backend(name: str | None = None):
    """Return (module, label) for the requested or default backend."""
    choice = (name or os.environ.get("COLLATZLAB_BACKEND", "auto")).strip().lower()
    if choice not in ("auto", "c", "python"):
        raise ValueError(f"unknown backend {choice!r} (use 'auto', 'c' or 'python')")
    if choice in ("auto", "c"):
        try:
            from . import _orbits

            return _orbits, "c"
        except ImportError:
            if choice == "c":
                raise
    from . import _orbits_py

    return _orbits_py, "python"


DEFAULT_BACKEND, DEFAULT_BACKEND_NAME = load_backend()
