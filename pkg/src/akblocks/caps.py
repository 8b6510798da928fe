"""Desk-scale caps on exhaustive enumerations.

Everything in this package is exact and enumerative, so runtimes blow up
factorially past small parameters.  The caps below keep the CLI and the
verification sweeps inside interactive budgets.  Each can be overridden
through an environment variable:

    AKBLOCKS_MAX_N       largest multipartition size (default 8)
    AKBLOCKS_MAX_R       largest number of components (default 3)
    AKBLOCKS_MAX_E       largest quantum characteristic (default 5)
    AKBLOCKS_MAX_DELTA   largest factorial order enumeration (default 6)

Library callers can also pass an explicit ``Caps`` instance to the few
entry points that enumerate (block listings, verification sweeps).
"""

import os
from dataclasses import dataclass

from .errors import CapExceeded

__all__ = ["Caps", "default_caps"]


@dataclass(frozen=True)
class Caps:
    max_n: int = 8
    max_r: int = 3
    max_e: int = 5
    max_delta: int = 6

    def check_n(self, n: int) -> None:
        if n > self.max_n:
            raise CapExceeded(f"size n={n} exceeds cap {self.max_n} (set AKBLOCKS_MAX_N to raise)")

    def check_r(self, r: int) -> None:
        if r > self.max_r:
            raise CapExceeded(f"level r={r} exceeds cap {self.max_r} (set AKBLOCKS_MAX_R to raise)")

    def check_e(self, e: int) -> None:
        if e > self.max_e:
            raise CapExceeded(f"characteristic e={e} exceeds cap {self.max_e} (set AKBLOCKS_MAX_E to raise)")

    def check_delta(self, delta: int) -> None:
        if delta > self.max_delta:
            raise CapExceeded(
                f"order enumeration for delta={delta} exceeds cap {self.max_delta}"
                " (set AKBLOCKS_MAX_DELTA to raise)"
            )


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError as exc:
        raise CapExceeded(f"{name} must be an integer, got {raw!r}") from exc


def default_caps() -> Caps:
    """Caps from the environment, falling back to the desk-scale defaults."""
    return Caps(
        max_n=_env_int("AKBLOCKS_MAX_N", Caps.max_n),
        max_r=_env_int("AKBLOCKS_MAX_R", Caps.max_r),
        max_e=_env_int("AKBLOCKS_MAX_E", Caps.max_e),
        max_delta=_env_int("AKBLOCKS_MAX_DELTA", Caps.max_delta),
    )
