"""Enumeration bounds.

Every exhaustive search in the package is bounded by one of these caps.
``MODFORGE_CAP_RING`` in the environment overrides the ring-order cap.
"""

import os
from contextlib import contextmanager
from dataclasses import dataclass, replace

from .errors import CapExceeded


@dataclass(frozen=True)
class Caps:
    ring: int = 4096        # largest ring order accepted by build_ring
    ideals: int = 256       # largest ring order for exhaustive ideal enumeration
    enum: int = 1 << 16     # largest candidate count scanned by a brute-force search
    group: int = 2048       # largest group for which a composition table is built


def _from_env():
    caps = Caps()
    raw = os.environ.get("MODFORGE_CAP_RING")
    if raw:
        caps = replace(caps, ring=int(raw))
    return caps


_current = _from_env()


def caps():
    return _current


@contextmanager
def using_caps(**overrides):
    """Temporarily replace some caps, e.g. ``with using_caps(enum=1000): ...``."""
    global _current
    saved = _current
    _current = replace(saved, **{k: v for k, v in overrides.items() if v is not None})
    try:
        yield _current
    finally:
        _current = saved


def check_cap(value, name, what=""):
    limit = getattr(_current, name)
    if value > limit:
        raise CapExceeded(f"{what or name} size {value} exceeds cap {name}={limit}")
