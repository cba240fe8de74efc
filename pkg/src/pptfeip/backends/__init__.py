"""Bilinear group backends: toy (pure Python, insecure, inspectable) and
curve (BLS12-381 via the compiled extension)."""

from __future__ import annotations

from ..errors import UsageError
from .base import BACKEND_CURVE, BACKEND_TOY, Backend, OpCounts
from .curve import BlsBackend, extension_available
from .toy import ToyBackend

_NAMES = {"toy": BACKEND_TOY, "curve": BACKEND_CURVE}


def get_backend(which: int | str, **kwargs) -> Backend:
    """Instantiate a backend by name ("toy"/"curve") or wire id byte."""
    if isinstance(which, str):
        if which not in _NAMES:
            raise UsageError(f"unknown backend {which!r}; choose from {sorted(_NAMES)}")
        which = _NAMES[which]
    if which == BACKEND_TOY:
        return ToyBackend(**kwargs)
    if which == BACKEND_CURVE:
        return BlsBackend(**kwargs)
    raise UsageError(f"unknown backend id 0x{which:02X}")


__all__ = [
    "BACKEND_CURVE",
    "BACKEND_TOY",
    "Backend",
    "BlsBackend",
    "OpCounts",
    "ToyBackend",
    "extension_available",
    "get_backend",
]
