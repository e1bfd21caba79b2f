"""Parameter set for the corner-perturbed pentadiagonal family.

The matrix family has constant diagonals: ``p`` on the main diagonal,
``q`` on the first sub/super diagonals, ``s`` on the second ones, and the
corner entries (1,1) and (n,n) replaced by ``r``.  Indexing in docs is
1-based to match the usual linear-algebra convention; all code is 0-based.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["PentaParams"]


@dataclass(frozen=True)
class PentaParams:
    """The four scalars defining the matrix family."""

    p: float
    q: float
    r: float
    s: float

    def __post_init__(self):
        for name in ("p", "q", "r", "s"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise TypeError(f"{name} must be a real number, got {v!r}")
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))

    @property
    def scale(self) -> float:
        """Magnitude reference used by relative tolerances."""
        return max(1.0, abs(self.p), abs(self.q), abs(self.r), abs(self.s))

    def corner_matches_band(self, tol: float = 1e-12) -> bool:
        """Whether r = p - s holds, within tol relative to max(1,|p|,|s|)."""
        return abs(self.r - (self.p - self.s)) <= tol * max(
            1.0, abs(self.p), abs(self.s))
