"""Quadrature ground truth for S and H, plus global identity checks.

S(beta) = (1/pi) int_0^inf cos(beta x) exp(-x^(3/2)) dx
H(beta) = (2 beta/pi) int_0^inf x sin(beta x) exp(-x^(3/2)) dx

For small beta the integrals are taken along the real axis in panels no
wider than half an oscillation.  From ``ROTATION_MIN_BETA`` on, the path is
turned onto the ray x = t exp(i pi/4), where exp(i beta x) decays, and the
Abel-summable piece int exp(i beta x) dx (purely imaginary for S, purely
real for the H integrand) is subtracted first.  What is left has the size
of the answer itself instead of 1/beta, so the rounding floor drops from
~1e-16 to ~1e-19 absolute, well under the optimal-truncation error of the
asymptotic series.

Everything here is plain numpy and deliberately slow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BudgetExceededError, DomainError
from .evaluators import s_auto, h_auto

DEFAULT_ABS_TOL = 1e-12
MIN_ABS_TOL = 1e-20
MAX_BETA = 30.0
MAX_EVALUATIONS = 2_000_000
ROTATION_MIN_BETA = 1.0
TAIL_START = 30.0

EPS = 2.0**-53
GL_ORDER = 20
_GL_X, _GL_W = np.polynomial.legendre.leggauss(GL_ORDER)

_THETA = math.pi / 4
_ROT = complex(math.cos(_THETA), math.sin(_THETA))
_ROT2 = _ROT * _ROT
_ROT15 = complex(math.cos(1.5 * _THETA), math.sin(1.5 * _THETA))

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureReport:
    """Result of an oracle integral.

    ``abs_err`` adds the adaptive estimate, the truncated tail bound and a
    rounding allowance.  ``truncation_point`` is the upper limit X of the
    integration variable actually used (a ray length on the rotated path).
    """

    value: float
    abs_err: float
    evaluations: int
    truncation_point: float


# -- adaptive Gauss-Legendre -------------------------------------------------


def _rule(f: Integrand, a: float, b: float) -> tuple[float, float]:
    half = 0.5 * (b - a)
    terms = f(0.5 * (a + b) + half * _GL_X) * (half * _GL_W)
    return math.fsum(terms), float(np.abs(terms).sum())


def integrate(
    segments: list[tuple[Integrand, float, float]],
    abs_tol: float,
    max_evaluations: int = MAX_EVALUATIONS,
) -> tuple[float, float, int]:
    """Integrate real, vectorized integrands over consecutive segments.

    Each panel is compared against the sum over its two halves; the halves
    are kept once they agree within the panel's share of ``abs_tol`` or
    within the rounding noise of the panel, whichever is larger.  Returns
    (value, error estimate, evaluations).
    """
    total_len = sum(b - a for _, a, b in segments)
    if total_len <= 0.0:
        return 0.0, 0.0, 0
    density = abs_tol / total_len
    stack = []
    evals = 0
    for f, a, b in segments:
        whole, mag = _rule(f, a, b)
        evals += GL_ORDER
        stack.append((f, a, b, whole, mag))
    parts, errs = [], []
    while stack:
        f, a, b, whole, mag = stack.pop()
        mid = 0.5 * (a + b)
        left, lmag = _rule(f, a, mid)
        right, rmag = _rule(f, mid, b)
        evals += 2 * GL_ORDER
        if evals > max_evaluations:
            raise BudgetExceededError(f"quadrature used more than {max_evaluations} evaluations")
        diff = abs(whole - (left + right))
        noise = 16.0 * EPS * (lmag + rmag)
        if diff <= max(density * (b - a), noise) or mid in (a, b):
            parts.append(left + right)
            errs.append(diff + noise)
        else:
            stack.append((f, a, mid, left, lmag))
            stack.append((f, mid, b, right, rmag))
    return math.fsum(parts), math.fsum(errs), evals


def _sqrt_substituted(f: Integrand) -> Integrand:
    # x = u^2 smooths the x^(3/2) kink at the origin
    return lambda u: f(u * u) * (2.0 * u)


def _panels(f: Integrand, upper: float, width: float) -> list[tuple[Integrand, float, float]]:
    n = max(1, math.ceil(upper / width))
    edges = np.linspace(0.0, upper, n + 1)
    segs = [(_sqrt_substituted(f), 0.0, math.sqrt(edges[1]))]
    segs += [(f, float(a), float(b)) for a, b in zip(edges[1:-1], edges[2:])]
    return segs


def _check_tol(abs_tol: float) -> float:
    abs_tol = float(abs_tol)
    if not MIN_ABS_TOL <= abs_tol < 1.0:
        raise DomainError(f"abs_tol must lie in [{MIN_ABS_TOL}, 1), got {abs_tol}")
    return abs_tol


def _check_beta(beta: float) -> float:
    beta = float(beta)
    if not math.isfinite(beta) or beta < 0.0:
        raise DomainError(f"beta must be finite and >= 0, got {beta}")
    if beta > MAX_BETA:
        raise DomainError(f"beta must be <= {MAX_BETA}, got {beta}")
    return beta


# -- real-axis path ----------------------------------------------------------


def _real_axis_limit(abs_tol: float) -> float:
    return math.log(10.0 / abs_tol) ** (2.0 / 3.0)


def _tail_exp(x: float) -> float:
    """Bound on int_x^inf exp(-t^(3/2)) dt (the exponent is convex)."""
    return math.exp(-(x**1.5)) / (1.5 * math.sqrt(x))


def _tail_x_exp(x: float) -> float:
    """Bound on int_x^inf t exp(-t^(3/2)) dt for x > 1."""
    return x * math.exp(-(x**1.5)) / (1.5 * math.sqrt(x) - 1.0 / x)


def _real_axis(f: Integrand, beta: float, scale: float, tail: float, abs_tol: float, max_evaluations: int):
    x_max = _real_axis_limit(abs_tol)
    width = 1.0 if beta < 1.0 else math.pi / beta
    value, err, evals = integrate(_panels(f, x_max, width), abs_tol / (2.0 * scale), max_evaluations)
    return QuadratureReport(scale * value, scale * (err + tail(x_max)), evals, x_max)


# -- rotated path ------------------------------------------------------------


def _expm1_neg(t: np.ndarray) -> np.ndarray:
    """exp(-x^(3/2)) - 1 on the ray, without cancellation for small t."""
    w = t**1.5 * _ROT15
    return np.expm1(-w.real) * np.cos(w.imag) - 2.0 * np.sin(0.5 * w.imag) ** 2 - 1j * np.exp(-w.real) * np.sin(w.imag)


def _ray_phase(beta: float, t: np.ndarray) -> np.ndarray:
    return np.exp(1j * beta * _ROT * t)


def _ray_limit(beta: float, abs_tol: float, power: int) -> float:
    k = beta * _ROT.imag
    t = math.log(20.0 / (k * abs_tol)) / k
    if power:
        t += math.log1p(t) / k  # room for the extra factor t
    return t


def _rotated(f: Integrand, beta: float, scale: float, power: int, abs_tol: float, max_evaluations: int):
    k = beta * _ROT.imag
    t_max = _ray_limit(beta, abs_tol, power)
    width = min(1.0, math.pi / (beta * _ROT.real))
    value, err, evals = integrate(_panels(f, t_max, width), abs_tol / (2.0 * scale), max_evaluations)
    # |integrand| <= 2 t^power exp(-k t) past the limit
    tail = 2.0 * math.exp(-k * t_max) * (t_max / k + 1.0 / k**2 if power else 1.0 / k)
    return QuadratureReport(scale * value, scale * (err + tail), evals, t_max)


# -- public integrals --------------------------------------------------------


def s_quadrature(beta: float, abs_tol: float = DEFAULT_ABS_TOL, max_evaluations: int = MAX_EVALUATIONS) -> QuadratureReport:
    """S(beta) by adaptive quadrature of its defining integral.

    S is even, so negative beta is folded.  ``abs_tol`` may go down to 1e-20.
    """
    beta = _check_beta(abs(float(beta)))
    abs_tol = _check_tol(abs_tol)
    if beta < ROTATION_MIN_BETA:

        def f(x):
            return np.cos(beta * x) * np.exp(-(x**1.5))

        return _real_axis(f, beta, 1.0 / math.pi, _tail_exp, abs_tol, max_evaluations)

    def g(t):
        return (_ray_phase(beta, t) * _expm1_neg(t) * _ROT).real

    return _rotated(g, beta, 1.0 / math.pi, 0, abs_tol, max_evaluations)


def h_quadrature(
    beta: float,
    abs_tol: float = DEFAULT_ABS_TOL,
    rescaled: bool = False,
    max_evaluations: int = MAX_EVALUATIONS,
) -> QuadratureReport:
    """H(beta) by adaptive quadrature.

    ``rescaled=True`` integrates the substituted form
    (2/(pi beta)) int x sin(x) exp(-(x/beta)^(3/2)) dx along the real axis
    instead; it exists as an independent check of the default route.
    """
    beta = _check_beta(beta)
    abs_tol = _check_tol(abs_tol)
    if beta == 0.0:
        return QuadratureReport(0.0, 0.0, 0, 0.0)
    if rescaled:
        return _h_rescaled(beta, abs_tol, max_evaluations)
    scale = 2.0 * beta / math.pi
    if beta < ROTATION_MIN_BETA:

        def f(x):
            return x * np.sin(beta * x) * np.exp(-(x**1.5))

        return _real_axis(f, beta, scale, _tail_x_exp, abs_tol, max_evaluations)

    def g(t):
        return (t * _ROT2 * _ray_phase(beta, t) * _expm1_neg(t)).imag

    return _rotated(g, beta, scale, 1, abs_tol, max_evaluations)


def _h_rescaled(beta: float, abs_tol: float, max_evaluations: int) -> QuadratureReport:
    scale = 2.0 / (math.pi * beta)
    x_max = beta * _real_axis_limit(abs_tol * beta)

    def f(x):
        return x * np.sin(x) * np.exp(-((x / beta) ** 1.5))

    value, err, evals = integrate(_panels(f, x_max, math.pi), abs_tol / (2.0 * scale), max_evaluations)
    # substitute x = beta y in the tail bound
    tail = beta * beta * _tail_x_exp(x_max / beta)
    return QuadratureReport(scale * value, scale * (err + tail), evals, x_max)


# -- identity checks ---------------------------------------------------------


def _asymptotic_coefficients(terms: int, deriv: int) -> list[tuple[float, float]]:
    """(c_n, p_n) with S ~ sum c_n beta^-p_n; for H each c_n gains (3n+2)."""
    out = []
    for n in range(1, terms + 1):
        s = math.sin(0.75 * math.pi * n)
        if n % 4 == 0:
            continue
        p = 0.5 * (3 * n + 2)
        c = (-1) ** (n + 1) * s * math.exp(math.lgamma(p) - math.lgamma(n + 1)) / math.pi
        if deriv:
            c *= 3 * n + 2
        out.append((c, p))
    return out


_TAIL_TERMS = 24


def _cosine_tail(tau: float, start: float, abs_tol: float) -> tuple[float, float, int]:
    """int_start^inf S(beta) cos(beta tau) d beta from the large-beta expansion.

    Each power is integrated along start + i s, where exp(i tau beta) decays;
    s = start u/(1-u) maps the ray onto [0, 1).
    """
    coeffs = _asymptotic_coefficients(_TAIL_TERMS, 0)
    if tau == 0.0:
        return math.fsum(c * start ** (1.0 - p) / (p - 1.0) for c, p in coeffs), 0.0, 0
    cs = np.array([c for c, _ in coeffs])
    ps = np.array([p for _, p in coeffs])
    lead = 1j * complex(math.cos(tau * start), math.sin(tau * start))

    def f(u):
        u = np.minimum(u, 1.0 - 1e-16)
        s = start * u / (1.0 - u)
        z = start + 1j * s
        series = (cs[:, None] * z[None, :] ** (-ps[:, None])).sum(axis=0)
        return (lead * series * np.exp(-tau * s)).real * start / (1.0 - u) ** 2

    return integrate([(f, 0.0, 1.0)], abs_tol)


def _vectorize(func: Callable[[float], float]) -> Integrand:
    return lambda xs: np.array([func(float(x)) for x in xs])


def fourier_check(tau: float, abs_tol: float = 1e-10) -> float:
    """|int S(beta) exp(-i beta tau) d beta - exp(-|tau|^(3/2))|.

    The integral is folded to 2 int_0^inf S(beta) cos(beta tau) d beta with
    S from ``s_auto`` up to beta = 30 and the large-beta expansion beyond.
    """
    tau = float(tau)
    if not (math.isfinite(tau) and abs(tau) <= 3.0):
        raise DomainError(f"tau must lie in [-3, 3], got {tau}")
    tau = abs(tau)

    def f(b):
        return s_auto(b).value * math.cos(b * tau)

    width = min(1.0, math.pi / tau) if tau > 0.0 else 1.0
    n = math.ceil(TAIL_START / width)
    edges = np.linspace(0.0, TAIL_START, n + 1)
    segs = [(_vectorize(f), float(a), float(b)) for a, b in zip(edges[:-1], edges[1:])]
    body, _, _ = integrate(segs, abs_tol)
    tail, _, _ = _cosine_tail(tau, TAIL_START, abs_tol)
    return abs(2.0 * (body + tail) - math.exp(-(tau**1.5)))


def h_integral(upper: float = math.inf, abs_tol: float = 1e-10) -> float:
    """int_0^upper H(beta) d beta with ``h_auto`` (plus the expansion past 30)."""
    upper = float(upper)
    if not upper >= 0.0:
        raise DomainError(f"upper limit must be >= 0, got {upper}")
    stop = min(upper, TAIL_START)
    n = max(1, math.ceil(stop))
    edges = np.linspace(0.0, stop, n + 1)
    segs = [(_vectorize(lambda b: h_auto(b).value), float(a), float(b)) for a, b in zip(edges[:-1], edges[1:])]
    body, _, _ = integrate(segs, abs_tol) if stop > 0.0 else (0.0, 0.0, 0)
    if upper <= TAIL_START:
        return body

    def antiderivative(b):  # int_b^inf of the expansion of H
        if math.isinf(b):
            return 0.0
        return math.fsum(c * b ** (1.0 - p) / (p - 1.0) for c, p in _asymptotic_coefficients(_TAIL_TERMS, 1))

    return body + antiderivative(TAIL_START) - antiderivative(upper)


def h_normalization(abs_tol: float = 1e-10) -> float:
    """Total mass of H over [0, inf); 1 up to quadrature error."""
    return h_integral(math.inf, abs_tol)
