"""Sign-and-log arithmetic for numbers far outside double range.

A determinant of a large banded matrix easily reaches magnitudes like
10**(10**8).  Everything downstream therefore carries values as a sign in
{-1, 0, +1} plus the natural log of the absolute value.  Sums of huge
signed terms (the closed-form determinant is such a sum, with complex
terms) are evaluated by factoring out the dominant log magnitude and
summing the normalized residues in ordinary complex arithmetic.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "LogScalar",
    "DetResult",
    "ConsistencyError",
    "signed_log_sum",
    "log_polar_term",
]

_LN10 = math.log(10.0)

# Tolerances for extracting a real signed value out of a complex term sum.
# The imaginary residual bound follows the pattern rel*|real| + abs*scale,
# where scale is the magnitude of the largest summand; a violation means a
# dispatch bug upstream, not a numerical accident.
IMAG_REL = 1e-8
IMAG_ABS = 1e-12
# Cancellation below this fraction of the total term mass is reported as an
# exact zero (singular matrix).
ZERO_REL = 1e-11


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (e.g. a sum that must be real is not)."""


@dataclass(frozen=True)
class LogScalar:
    """A real number stored as sign and natural log of absolute value.

    ``sign == 0`` encodes exactly zero, with ``log_abs == -inf`` by
    convention.  Round-tripping through floats is limited by the rounding
    of the log itself: the relative error is about ``|log_abs| * eps / 2``,
    i.e. within 1e-14 for magnitudes up to ~1e38 and within 8e-14 over the
    whole double range.
    """

    sign: int
    log_abs: float

    def __post_init__(self):
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.sign == 0 and self.log_abs != -math.inf:
            raise ValueError("zero value must carry log_abs = -inf")
        if self.sign != 0 and not math.isfinite(self.log_abs):
            raise ValueError("nonzero value needs a finite log_abs")

    @classmethod
    def zero(cls) -> "LogScalar":
        return cls(0, -math.inf)

    @classmethod
    def from_float(cls, x: float) -> "LogScalar":
        if not math.isfinite(x):
            raise ValueError(f"cannot represent {x!r}")
        if x == 0.0:
            return cls.zero()
        return cls(1 if x > 0 else -1, math.log(abs(x)))

    def to_float(self) -> float:
        """Back to an ordinary float; overflows to +-inf, underflows to 0."""
        if self.sign == 0:
            return 0.0
        if self.log_abs > 709.0:
            return math.inf * self.sign
        return self.sign * math.exp(self.log_abs)

    @property
    def log10_abs(self) -> float:
        return self.log_abs / _LN10

    def mantissa_exp10(self) -> tuple[float, int]:
        """Decimal scientific decomposition: value = mantissa * 10**exp10.

        The mantissa carries the sign and lies in [1, 10) for positive
        values (in (-10, -1] for negative ones).  Zero maps to (0.0, 0).
        """
        if self.sign == 0:
            return 0.0, 0
        l10 = self.log10_abs
        exp10 = math.floor(l10)
        mant = 10.0 ** (l10 - exp10)
        if mant >= 10.0:  # floor/pow roundoff at decade boundaries
            mant /= 10.0
            exp10 += 1
        return self.sign * mant, exp10

    def __mul__(self, other: "LogScalar") -> "LogScalar":
        if self.sign == 0 or other.sign == 0:
            return LogScalar.zero()
        return LogScalar(self.sign * other.sign, self.log_abs + other.log_abs)

    def __neg__(self) -> "LogScalar":
        return LogScalar(-self.sign, self.log_abs)

    def agrees(self, other: "LogScalar", rel: float = 1e-8) -> bool:
        """Sign match plus log-magnitude match, relative to the log scale."""
        if self.sign != other.sign:
            return False
        if self.sign == 0:
            return True
        tol = rel * max(1.0, abs(self.log_abs), abs(other.log_abs))
        return abs(self.log_abs - other.log_abs) <= tol


@dataclass(frozen=True)
class DetResult:
    """A determinant value together with how it was obtained."""

    value: LogScalar
    method: str
    case_id: str | None = None


def log_polar_term(coeff: complex, root: complex, n: int) -> tuple[float, float]:
    """Log-polar form (log magnitude, phase) of ``coeff * root**n``.

    Phases of real roots are handled through parity so that huge ``n``
    never loses the sign; complex phases are reduced mod 2*pi, which keeps
    the absolute phase error around ``n * eps`` (negligible against the
    tolerances used here even at n = 5e8).
    """
    if coeff == 0:
        return -math.inf, 0.0
    if root == 0:
        if n == 0:
            return math.log(abs(coeff)), cmath.phase(coeff)
        return -math.inf, 0.0
    log_mag = math.log(abs(coeff)) + n * math.log(abs(root))
    if root.imag == 0.0:
        root_phase = 0.0 if (root.real > 0 or n % 2 == 0) else math.pi
    else:
        root_phase = math.fmod(n * cmath.phase(root), 2.0 * math.pi)
    return log_mag, cmath.phase(coeff) + root_phase


def signed_log_sum(terms: list[tuple[float, float]],
                   zero_rel: float = ZERO_REL) -> LogScalar:
    """Sum terms given in log-polar form and extract the real result.

    Conjugate-paired terms cancel their imaginary parts in the normalized
    complex sum; a residual imaginary part beyond the tolerance raises
    :class:`ConsistencyError`.  Cancellation of the real part below
    ``zero_rel`` times the total term mass is reported as exact zero.
    """
    live = [(lm, ph) for lm, ph in terms if lm != -math.inf]
    if not live:
        return LogScalar.zero()
    top = max(lm for lm, _ in live)
    total = 0.0 + 0.0j
    mass = 0.0
    for lm, ph in live:
        mag = math.exp(lm - top)
        total += mag * complex(math.cos(ph), math.sin(ph))
        mass += mag
    if abs(total.imag) > IMAG_REL * abs(total.real) + IMAG_ABS * mass:
        raise ConsistencyError(
            f"non-real term sum: residual {total.imag:.3e} against real part "
            f"{total.real:.3e} (branch dispatch bug?)")
    if abs(total.real) <= zero_rel * mass:
        return LogScalar.zero()
    sign = 1 if total.real > 0 else -1
    return LogScalar(sign, top + math.log(abs(total.real)))
