"""Special-function kernels: Gamma, Pochhammer, pFq, Airy Bi/Bi' and J_nu for nu = +-1/3, +-2/3.

Rational parameters may be passed as :class:`fractions.Fraction`; they are
then carried to ~32 digits inside the double-double series instead of
being rounded to the nearest double first.  This matters for the Holtsmark
closed forms, whose hypergeometric series cancel by many orders of
magnitude.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from . import _kernels
from ._dd import DD_EPS, dd_from
from .errors import (
    DomainError,
    NoConvergenceError,
    PoleError,
    PrecisionLossError,
    RangeOverflowError,
)

Real = Union[int, float, Fraction]

EPS = 2.0**-53

AIRY_MIN, AIRY_MAX = -40.0, 5.0
# below this the Maclaurin pair loses too many digits even in double-double
_AIRY_SERIES_FLOOR = -12.0
_AIRY_STEP = 0.25

BESSEL_MAX = 50.0

_THIRDS = {
    Fraction(-2, 3): (0.3732821739073952, 1.8904017330138024e-17),
    Fraction(-1, 3): (0.7384881116216483, 2.1908256740378185e-17),
    Fraction(1, 3): (1.1198465217221858, -1.0982140170335942e-16),
    Fraction(2, 3): (1.1077321674324725, -2.264876612069055e-17),
}  # nu -> 1/Gamma(nu + 1) as a double-double


@dataclass(frozen=True)
class SeriesControl:
    """Truncation settings shared by all series evaluators.

    ``rel_tol``: stop once two consecutive terms are below ``rel_tol`` times
    the partial sum.  ``cancel_guard``: largest tolerated ratio between the
    biggest partial sum seen and the final value.
    """

    rel_tol: float = 1e-15
    max_terms: int = 500
    cancel_guard: float = 1e12

    def __post_init__(self):
        if not 0.0 < self.rel_tol < 1.0:
            raise ValueError(f"rel_tol must lie in (0, 1), got {self.rel_tol}")
        if self.max_terms < 1:
            raise ValueError(f"max_terms must be >= 1, got {self.max_terms}")
        if not self.cancel_guard > 1.0:
            raise ValueError(f"cancel_guard must exceed 1, got {self.cancel_guard}")


DEFAULT_CONTROL = SeriesControl()


def _is_nonpositive_integer(x: Real) -> bool:
    return x <= 0 and x == int(x)


@dataclass(frozen=True)
class HypergeometricSpec:
    """Parameters and argument of pFq(numerators; denominators; argument)."""

    numerators: tuple = ()
    denominators: tuple = ()
    argument: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(self.numerators))
        object.__setattr__(self, "denominators", tuple(self.denominators))
        object.__setattr__(self, "argument", complex(self.argument))
        for b in self.denominators:
            if _is_nonpositive_integer(b):
                raise PoleError(f"denominator parameter {b} is zero or a negative integer")
        if len(self.numerators) > len(self.denominators) + 1:
            raise DomainError(
                f"{len(self.numerators)}F{len(self.denominators)} series diverges for every z != 0"
            )
        z = self.argument
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise DomainError("argument must be finite")

    @property
    def order(self) -> tuple[int, int]:
        return len(self.numerators), len(self.denominators)


@dataclass(frozen=True)
class SeriesSum:
    """A summed series with its diagnostics."""

    value: complex
    err: float
    terms: int
    peak_ratio: float = field(default=1.0)


def gamma_real(x: float) -> float:
    """Gamma function of a real argument.

    Poles at 0, -1, -2, ... raise :class:`PoleError`; results beyond the
    double range raise :class:`RangeOverflowError`.
    """
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x}")
    try:
        value = math.gamma(x)
    except OverflowError as exc:
        raise RangeOverflowError(f"Gamma({x}) overflows") from exc
    if math.isinf(value):
        raise RangeOverflowError(f"Gamma({x}) overflows")
    return value


def pochhammer(lam: float, n: int) -> float:
    """Rising factorial (lam)_n = lam (lam+1) ... (lam+n-1)."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a non-negative integer, got {n}")
    out = 1.0
    for k in range(int(n)):
        out *= lam + k
    if math.isinf(out):
        raise RangeOverflowError(f"({lam})_{n} overflows")
    return out


def _dd_array(values: Sequence[Real]) -> tuple[np.ndarray, np.ndarray]:
    pairs = [dd_from(v) for v in values]
    hi = np.array([p[0] for p in pairs], dtype=np.float64)
    lo = np.array([p[1] for p in pairs], dtype=np.float64)
    return hi, lo


def pfq_dd(numerators, denominators, z_parts, ctl: SeriesControl = DEFAULT_CONTROL) -> SeriesSum:
    """pFq with the argument given as double-double parts (re_hi, re_lo, im_hi, im_lo).

    Parameters are not re-validated here; use :func:`pfq` for untrusted input.
    """
    nh, nl = _dd_array(numerators)
    dh, dl = _dd_array(denominators)
    zrh, zrl, zih, zil = (float(v) for v in z_parts)
    (srh, srl, sih, sil, peak, abs_sum, weighted, last, terms, status) = _kernels.pfq_sum(
        nh, nl, dh, dl, zrh, zrl, zih, zil, ctl.rel_tol, ctl.max_terms
    )
    value = complex(srh + srl, sih + sil)
    if not (math.isfinite(value.real) and math.isfinite(value.imag) and math.isfinite(peak)):
        raise RangeOverflowError("hypergeometric series overflowed")
    if status != _kernels.OK:
        raise NoConvergenceError(f"pFq series did not converge in {ctl.max_terms} terms")
    mag = abs(value)
    ratio = peak / mag if mag > 0.0 else math.inf
    if ratio > ctl.cancel_guard:
        raise PrecisionLossError(
            f"pFq cancellation ratio {ratio:.3g} exceeds guard {ctl.cancel_guard:.3g}"
        )
    p, q = len(numerators), len(denominators)
    rounding = DD_EPS * ((p + q + 4) * weighted + 4.0 * abs_sum) + EPS * mag
    return SeriesSum(value=value, err=last + rounding, terms=terms, peak_ratio=ratio)


def pfq_detail(spec: HypergeometricSpec, ctl: SeriesControl = DEFAULT_CONTROL) -> SeriesSum:
    """Like :func:`pfq` but returns the error estimate and work counters too."""
    z = spec.argument
    return pfq_dd(spec.numerators, spec.denominators, (z.real, 0.0, z.imag, 0.0), ctl)


def pfq(spec: HypergeometricSpec, ctl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Generalized hypergeometric series sum_n prod(a_i)_n / prod(b_j)_n z^n / n!.

    Terms follow the ratio recurrence and are accumulated in double-double
    arithmetic.  Raises :class:`NoConvergenceError` at the term cap and
    :class:`PrecisionLossError` when the partial sums grew more than
    ``ctl.cancel_guard`` times larger than the result.
    """
    return pfq_detail(spec, ctl).value


def _airy_dd(xh: float, xl: float = 0.0) -> tuple[float, float, float, float]:
    """(Bi, Bi', err_Bi, err_Bi') for x = xh + xl."""
    x = xh + xl
    if not AIRY_MIN <= x <= AIRY_MAX:
        raise DomainError(f"Airy argument {x} outside [{AIRY_MIN}, {AIRY_MAX}]")
    if x >= _AIRY_SERIES_FLOOR:
        bh, bl, ph, pl, babs, pabs = _kernels.airy_maclaurin(xh, xl)
        bi, bip = bh + bl, ph + pl
        return bi, bip, 64 * DD_EPS * babs + EPS * abs(bi), 64 * DD_EPS * pabs + EPS * abs(bip)
    bh, bl, ph, pl, _, _ = _kernels.airy_maclaurin(_AIRY_SERIES_FLOOR, 0.0)
    bi, bip = _kernels.airy_march(bh + bl, ph + pl, _AIRY_SERIES_FLOOR, x, _AIRY_STEP)
    steps = math.ceil((_AIRY_SERIES_FLOOR - x) / _AIRY_STEP)
    # the oscillatory region neither damps nor amplifies step errors
    amp = math.hypot(bi, bip / math.sqrt(abs(x)))
    return bi, bip, 8 * steps * EPS * amp, 8 * steps * EPS * amp * math.sqrt(abs(x))


def airy_pair(x: float) -> tuple[float, float]:
    """(Bi(x), Bi'(x)) for x in [-40, 5]."""
    bi, bip, _, _ = _airy_dd(float(x))
    return bi, bip


def airy_bi(x: float) -> float:
    """Airy function of the second kind, Bi(x), for x in [-40, 5]."""
    return airy_pair(x)[0]


def airy_bi_prime(x: float) -> float:
    """Derivative Bi'(x) for x in [-40, 5]."""
    return airy_pair(x)[1]


def _order_key(nu: Real) -> Fraction:
    for key in _THIRDS:
        if abs(float(nu) - float(key)) < 1e-12:
            return key
    raise DomainError(f"order {nu} not in {{-2/3, -1/3, 1/3, 2/3}}")


def _bessel_dd(nu: Fraction, xh: float, xl: float = 0.0) -> tuple[float, float]:
    """(J_nu(x), err) for x = xh + xl > 0."""
    nh, nl = dd_from(nu)
    rh, rl = _THIRDS[nu]
    value, abs_sum = _kernels.bessel_ascending(nh, nl, rh, rl, xh, xl)
    return value, 64 * DD_EPS * abs_sum + 4 * EPS * abs(value)


def bessel_j_frac(nu: Real, x: float) -> float:
    """Bessel function J_nu(x) for nu in {-2/3, -1/3, 1/3, 2/3} and x in [0, 50]."""
    key = _order_key(nu)
    x = float(x)
    if not 0.0 <= x <= BESSEL_MAX:
        raise DomainError(f"Bessel argument {x} outside [0, {BESSEL_MAX}]")
    if x == 0.0:
        if key < 0:
            raise PoleError(f"J_{key} is singular at 0")
        return 0.0
    return _bessel_dd(key, x)[0]


