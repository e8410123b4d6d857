"""Special functions used by the analytic transmission solutions.

Thin validated wrappers around scipy.special (Cephes) for the handful of
real-argument functions the closed-form envelopes need: J0, J1, I0, I1,
erf, plus exponentially scaled modified Bessel forms so thickness formulas
like exp(-T)*I0(T) stay finite at T of a few thousand.

Accuracy contract: relative error <= 1e-12 against an independent
high-precision series/asymptotic oracle on the documented ranges, with an
absolute floor near the oscillatory zeros of J0/J1 where a relative bound
is not meaningful for double-precision arguments.  The test suite carries
frozen oracle values and finite-difference cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

__all__ = [
    "AccuracySpec",
    "ACCURACY",
    "bessel_j",
    "bessel_i",
    "scaled_bessel_i0",
    "scaled_bessel_i1",
    "erf",
]


@dataclass(frozen=True)
class AccuracySpec:
    """Target accuracy for the functions in this module.

    max_relative_error applies where the function value is not crossing
    zero; abs_floor is the absolute error floor near zeros of the
    oscillatory Bessel functions (argument conditioning limit).
    """

    max_relative_error: float = 1e-12
    abs_floor: float = 2e-13
    bessel_j_range: tuple[float, float] = (0.0, 1e4)
    bessel_i_range: tuple[float, float] = (0.0, 700.0)
    scaled_i0_range: tuple[float, float] = (0.0, 1e6)
    scaled_i0_max_relative_error: float = 1e-10


ACCURACY = AccuracySpec()


def _check_real(x, name="x"):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise ValueError(f"{name} must be finite, got {x!r}")
    return x


def _check_nonnegative(x, name="x"):
    x = _check_real(x, name)
    if np.any(x < 0):
        raise ValueError(f"{name} must be nonnegative, got {x!r}")
    return x


def bessel_j(order, x):
    """Bessel function of the first kind, order 0 or 1, for x >= 0.

    Every use in the transmission formulas has the form J(2*sqrt(...)),
    so negative arguments are a caller bug and rejected.
    """
    if order not in (0, 1):
        raise ValueError(f"order must be 0 or 1, got {order!r}")
    xv = _check_nonnegative(x)
    out = _sp.j0(xv) if order == 0 else _sp.j1(xv)
    return out if np.ndim(x) else float(out)


def bessel_i(order, x):
    """Modified Bessel function I0 or I1 for 0 <= x <= 700.

    Beyond ~700 the unscaled value overflows double precision; use
    scaled_bessel_i0 / scaled_bessel_i1 for products like exp(-T)*I0(T).
    """
    if order not in (0, 1):
        raise ValueError(f"order must be 0 or 1, got {order!r}")
    xv = _check_nonnegative(x)
    if np.any(xv > 700.0):
        raise ValueError(
            "bessel_i overflows for x > 700; use the scaled variants"
        )
    out = _sp.i0(xv) if order == 0 else _sp.i1(xv)
    return out if np.ndim(x) else float(out)


def scaled_bessel_i0(x):
    """exp(-x) * I0(x) without intermediate overflow, x >= 0."""
    xv = _check_nonnegative(x)
    out = _sp.i0e(xv)
    return out if np.ndim(x) else float(out)


def scaled_bessel_i1(x):
    """exp(-x) * I1(x) without intermediate overflow, x >= 0."""
    xv = _check_nonnegative(x)
    out = _sp.i1e(xv)
    return out if np.ndim(x) else float(out)


def erf(x):
    """Error function, exactly odd: erf(-x) == -erf(x)."""
    xv = _check_real(x)
    out = _sp.erf(xv)
    return out if np.ndim(x) else float(out)
