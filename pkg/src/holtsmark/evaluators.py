"""Evaluators for the Holtsmark density S(beta) and field distribution H(beta).

S(beta) = (1/pi) int_0^inf cos(beta x) exp(-x^(3/2)) dx is the density of the
symmetric stable law of index 3/2; H(beta) = -2 beta S'(beta) is the
distribution of the reduced field strength on [0, inf).

Routes for S: the power series about 0, the asymptotic series in 1/beta,
the 2F3/3F4 combination (method id "lee"), and the closed forms built
from 2F2 plus Airy (or fractional Bessel) functions.  H has the power series, asymptotic
series and both closed forms.  ``s_auto``/``h_auto`` pick a route by beta.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction as Fr

from . import _kernels
from ._dd import DD_EPS, GAMMA_1_3, GAMMA_2_3, THREE_M43, dd_div, dd_mul, two_prod
from .errors import DomainError, NoConvergenceError, PrecisionLossError, RangeOverflowError
from .specfun import DEFAULT_CONTROL, EPS, SeriesControl, SeriesSum, _airy_dd, _bessel_dd, pfq_dd

# auto-dispatch boundary: closed form at or below, asymptotic series above
SWITCHOVER = 5.75
ASYMPTOTIC_MIN_BETA = 2.0
ASYMPTOTIC_MAX_TERMS = 4000
# the Bessel forms are singular at 0; the dispatcher swaps in the Airy form
BESSEL_MIN_BETA = 1e-8

_F22_S = ((1, Fr(3, 2)), (Fr(4, 3), Fr(5, 3)))
_F22_H = ((2, Fr(5, 2)), (Fr(7, 3), Fr(8, 3)))
_LEE = (
    ((Fr(5, 12), Fr(11, 12)), (Fr(1, 3), Fr(1, 2), Fr(5, 6))),
    ((Fr(3, 4), 1, Fr(5, 4)), (Fr(2, 3), Fr(5, 6), Fr(7, 6), Fr(4, 3))),
    ((Fr(13, 12), Fr(19, 12)), (Fr(7, 6), Fr(3, 2), Fr(5, 3))),
)

_S0_FACTOR = 2.0 / (3.0 * math.pi)
_CBRT3 = 3.0 ** (1.0 / 3.0)
_THREE_M23 = 3.0 ** (-2.0 / 3.0)
_SQRT3 = math.sqrt(3.0)


class MethodId(str, enum.Enum):
    SERIES = "series"
    ASYMPTOTIC = "asymptotic"
    LEE = "lee"
    AIRY_CLOSED = "airy_closed"
    BESSEL_CLOSED = "bessel_closed"
    QUADRATURE = "quadrature"
    AUTO = "auto"

    @classmethod
    def parse(cls, name: str) -> "MethodId":
        return cls(name.strip().lower().replace("-", "_"))


@dataclass(frozen=True)
class EvalResult:
    """A computed value with the route that produced it.

    ``err_estimate`` is an absolute error claim; ``terms_used`` counts the
    series terms (or integrand evaluations, for quadrature) spent.
    """

    value: float
    method: MethodId
    err_estimate: float
    terms_used: int


def _check_beta(beta: float, *, positive: bool = False) -> float:
    beta = float(beta)
    if not math.isfinite(beta):
        raise DomainError(f"beta must be finite, got {beta}")
    if beta < 0.0 or (positive and beta == 0.0):
        bound = "> 0" if positive else ">= 0"
        raise DomainError(f"beta must be {bound}, got {beta}")
    return beta


# -- power series about beta = 0 ---------------------------------------------


def _small_series(beta: float, ctl: SeriesControl, deriv: int, method_name: str) -> EvalResult:
    sh, sl, nxt, peak, abs_sum, weighted, terms, status = _kernels.small_beta_series(
        beta, ctl.rel_tol, ctl.max_terms, deriv, 0
    )
    if not math.isfinite(sh) or not math.isfinite(peak):
        raise RangeOverflowError(f"{method_name}: series overflowed at beta={beta}")
    if status != _kernels.OK:
        raise NoConvergenceError(f"{method_name}: no convergence in {ctl.max_terms} terms at beta={beta}")
    mag = abs(sh)
    ratio = peak / mag if mag > 0.0 else (1.0 if peak == 0.0 else math.inf)
    if ratio > ctl.cancel_guard:
        raise PrecisionLossError(f"{method_name}: cancellation ratio {ratio:.3g} at beta={beta}")
    # chain-step rounding grows with the index; summation is double-double
    rounding = DD_EPS * (16.0 * weighted + 4.0 * abs_sum)
    value = _S0_FACTOR * (sh + sl)
    err = _S0_FACTOR * (nxt + rounding) + 4.0 * EPS * abs(value)
    return EvalResult(value, MethodId.SERIES, err, terms)


def s_series(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """S(beta) from its everywhere-convergent power series.

    Usable up to beta of about 5.5; beyond that the alternating terms grow
    so large that the cancellation guard trips.
    """
    return _small_series(_check_beta(beta), ctl, 0, "s_series")


def h_series(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """H(beta) = (4/3pi) sum_{n>=1} (-1)^(n+1) Gamma((4n+2)/3) beta^(2n) / (2n-1)!."""
    return _small_series(_check_beta(beta), ctl, 1, "h_series")


def small_series_partial(beta: float, order: int, function: str = "S") -> float:
    """Sum of the first ``order`` terms (n = 0 .. order-1) of the power series."""
    if order < 1:
        raise DomainError(f"order must be positive, got {order}")
    deriv = 1 if function.upper() == "H" else 0
    sh, sl, *_ = _kernels.small_beta_series(abs(float(beta)), 1e-300, order, deriv, int(order))
    return _S0_FACTOR * (sh + sl)


# -- asymptotic series --------------------------------------------------------


def _large_series(beta: float, max_terms: int, deriv: int, name: str) -> EvalResult:
    beta = _check_beta(beta)
    if beta < ASYMPTOTIC_MIN_BETA:
        raise DomainError(f"{name} needs beta >= {ASYMPTOTIC_MIN_BETA}, got {beta}")
    if max_terms < 1:
        raise DomainError(f"max_terms must be positive, got {max_terms}")
    total, omitted, _, rounding, terms = _kernels.large_beta_series(beta, int(max_terms), deriv, 0)
    # terms come in same-sign runs of three, so the remainder can exceed the
    # first omitted term (by ~1.2x in practice); claim twice its envelope
    return EvalResult(total, MethodId.ASYMPTOTIC, 2.0 * omitted + rounding, terms)


def s_asymptotic(beta: float, max_terms: int = ASYMPTOTIC_MAX_TERMS) -> EvalResult:
    """S(beta) from the divergent large-beta expansion, truncated at its smallest term.

    ``err_estimate`` is twice the envelope of the first omitted term plus an
    a-priori bound on the rounding error of the summation.
    """
    return _large_series(beta, max_terms, 0, "s_asymptotic")


def h_asymptotic(beta: float, max_terms: int = ASYMPTOTIC_MAX_TERMS) -> EvalResult:
    """H(beta) from the term-wise derivative of the large-beta expansion."""
    return _large_series(beta, max_terms, 1, "h_asymptotic")


def asymptotic_partial(beta: float, order: int, function: str = "S") -> float:
    """Sum of the first ``order`` terms (n = 1 .. order) of the large-beta expansion."""
    if order < 1:
        raise DomainError(f"order must be positive, got {order}")
    beta = _check_beta(beta, positive=True)
    deriv = 1 if function.upper() == "H" else 0
    return _kernels.large_beta_series(beta, int(order), deriv, int(order))[0]


# -- closed forms -------------------------------------------------------------


def _beta_cubed_dd(beta: float) -> tuple[float, float, float, float]:
    """beta^2 and beta^3 as double-doubles."""
    b2h, b2l = two_prod(beta, beta)
    b3h, b3l = dd_mul(b2h, b2l, beta, 0.0)
    return b2h, b2l, b3h, b3l


def _conjugate_pair(params, beta: float, ctl: SeriesControl) -> tuple[SeriesSum, SeriesSum]:
    """2F2 at +i y and -i y with y = 4 beta^3 / 27, each summed independently."""
    _, _, b3h, b3l = _beta_cubed_dd(beta)
    yh, yl = dd_div(4.0 * b3h, 4.0 * b3l, 27.0, 0.0)
    plus = pfq_dd(params[0], params[1], (0.0, 0.0, yh, yl), ctl)
    minus = pfq_dd(params[0], params[1], (0.0, 0.0, -yh, -yl), ctl)
    return plus, minus


def _rounding(phase: float, *pieces: float) -> float:
    """Bound on double rounding when combining ``pieces``; the phase term
    covers the error of cos/sin at a rounded argument."""
    return 8.0 * EPS * (1.0 + phase) * sum(abs(p) for p in pieces)


def _require_real(z: complex, what: str) -> float:
    # conjugate series must cancel their imaginary parts
    if abs(z.imag) > 1e-13 * abs(z.real) + 1e-300:
        raise PrecisionLossError(f"{what}: residual imaginary part {z.imag:.3g} vs real {z.real:.3g}")
    return z.real


def _airy_at(beta: float) -> tuple[float, float, float, float]:
    b2h, b2l = two_prod(beta, beta)
    xh, xl = dd_mul(b2h, b2l, THREE_M43[0], THREE_M43[1])
    return _airy_dd(-xh, -xl)


def _phase(beta: float) -> tuple[float, float, float]:
    """(2 beta^3 / 27) as double-double plus its rounded value."""
    _, _, b3h, b3l = _beta_cubed_dd(beta)
    ch, cl = dd_div(2.0 * b3h, 2.0 * b3l, 27.0, 0.0)
    return ch, cl, ch + cl


def _f22_block(beta: float, ctl: SeriesControl) -> tuple[float, float, int]:
    """-beta^2/(6pi) [2F2(1,3/2;4/3,5/3;-iy) + 2F2(...;+iy)] and its error."""
    plus, minus = _conjugate_pair(_F22_S, beta, ctl)
    pair = _require_real(plus.value + minus.value, "2F2 conjugate sum")
    scale = beta * beta / (6.0 * math.pi)
    return -scale * pair, scale * (plus.err + minus.err), plus.terms + minus.terms


def s_airy_closed(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """S(beta) from the 2F2 + Airy Bi/Bi' closed form."""
    beta = _check_beta(beta)
    a, a_err, terms = _f22_block(beta, ctl)
    bi, bip, ebi, ebip = _airy_at(beta)
    _, _, c = _phase(beta)
    cos_c, sin_c = math.cos(c), math.sin(c)
    k = 4.0 / 3.0 ** (5.0 / 3.0)
    p1 = k * bip * cos_c
    p2 = k * beta * _THREE_M23 * bi * sin_c
    value = a + p1 + p2
    err = a_err + k * (ebip + beta * _THREE_M23 * ebi) + _rounding(c, a, p1, p2)
    return EvalResult(value, MethodId.AIRY_CLOSED, err, terms)


def _bessel_quartet(beta: float) -> tuple[dict, float]:
    ch, cl, _ = _phase(beta)
    out = {}
    err = 0.0
    for nu in (Fr(-2, 3), Fr(-1, 3), Fr(1, 3), Fr(2, 3)):
        out[nu], e = _bessel_dd(nu, ch, cl)
        err += e
    return out, err


def s_bessel_closed(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """S(beta) from the 2F2 + fractional-order Bessel closed form (beta > 0)."""
    beta = _check_beta(beta, positive=True)
    a, a_err, terms = _f22_block(beta, ctl)
    j, j_err = _bessel_quartet(beta)
    _, _, c = _phase(beta)
    cos_c, sin_c = math.cos(c), math.sin(c)
    k = 4.0 * beta * beta / (27.0 * _SQRT3)
    p1 = k * cos_c * (j[Fr(-2, 3)] + j[Fr(2, 3)])
    p2 = k * sin_c * (j[Fr(-1, 3)] - j[Fr(1, 3)])
    value = a + p1 + p2
    err = a_err + k * j_err + _rounding(c, a, p1, p2)
    return EvalResult(value, MethodId.BESSEL_CLOSED, err, terms)


def s_lee(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """S(beta) as a combination of one 3F4 and two 2F3 series at -4 beta^6 / 729."""
    beta = _check_beta(beta)
    b2h, b2l = two_prod(beta, beta)
    b6h, b6l = dd_mul(b2h, b2l, b2h, b2l)
    b6h, b6l = dd_mul(b6h, b6l, b2h, b2l)
    zh, zl = dd_div(-4.0 * b6h, -4.0 * b6l, 729.0, 0.0)
    parts = [pfq_dd(num, den, (zh, zl, 0.0, 0.0), ctl) for num, den in _LEE]
    g53 = 2.0 * GAMMA_2_3[0] / 3.0
    g43 = GAMMA_1_3[0] / 3.0
    coef = (
        g53 / math.pi,
        -beta * beta / (3.0 * math.pi),
        7.0 * beta**4 * g43 / (81.0 * math.pi),
    )
    pieces = [c * p.value.real for c, p in zip(coef, parts)]
    value = math.fsum(pieces)
    err = sum(abs(c) * p.err for c, p in zip(coef, parts)) + _rounding(0.0, *pieces)
    return EvalResult(value, MethodId.LEE, err, sum(p.terms for p in parts))


def _h_hypergeometric_part(beta: float, ctl: SeriesControl) -> tuple[float, float, float, int]:
    """The two 2F2 blocks shared by both H closed forms."""
    fp, fm = _conjugate_pair(_F22_S, beta, ctl)
    gp, gm = _conjugate_pair(_F22_H, beta, ctl)
    s1 = 2.0 * beta * beta / (3.0 * math.pi)
    t1 = s1 * _require_real(fp.value + fm.value, "2F2(1,3/2) conjugate sum")
    s2 = beta**5 / (10.0 * math.pi)
    t2 = s2 * _require_real(-1j * (gm.value - gp.value), "2F2(2,5/2) conjugate difference")
    err = s1 * (fp.err + fm.err) + s2 * (gp.err + gm.err)
    return t1, t2, err, fp.terms + fm.terms + gp.terms + gm.terms


def h_airy_closed(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """H(beta) from the 2F2 + Airy closed form."""
    beta = _check_beta(beta)
    t1, t2, a_err, terms = _h_hypergeometric_part(beta, ctl)
    bi, bip, ebi, ebip = _airy_at(beta)
    _, _, c = _phase(beta)
    cos_c, sin_c = math.cos(c), math.sin(c)
    b3 = beta**3
    k = 8.0 * beta / (81.0 * 3.0 ** (2.0 / 3.0))
    q1 = -k * _CBRT3 * bi * 4.0 * b3 * cos_c
    q2 = -k * _CBRT3 * bi * 9.0 * sin_c
    q3 = k * 12.0 * beta * beta * bip * sin_c
    value = t1 + t2 + q1 + q2 + q3
    trig = 4.0 * b3 + 9.0
    err = a_err + k * (_CBRT3 * ebi * trig + 12.0 * beta * beta * ebip) + _rounding(c, t1, t2, q1, q2, q3)
    return EvalResult(value, MethodId.AIRY_CLOSED, err, terms)


def h_bessel_closed(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> EvalResult:
    """H(beta) from the 2F2 + fractional-order Bessel closed form (beta > 0)."""
    beta = _check_beta(beta, positive=True)
    t1, t2, a_err, terms = _h_hypergeometric_part(beta, ctl)
    j, j_err = _bessel_quartet(beta)
    _, _, c = _phase(beta)
    cos_c, sin_c = math.cos(c), math.sin(c)
    b3 = beta**3
    k = 8.0 * beta * beta / (243.0 * _SQRT3)
    odd = j[Fr(-1, 3)] - j[Fr(1, 3)]
    q1 = -k * odd * 4.0 * b3 * cos_c
    q2 = -k * odd * 9.0 * sin_c
    q3 = k * 4.0 * b3 * (j[Fr(-2, 3)] + j[Fr(2, 3)]) * sin_c
    value = t1 + t2 + q1 + q2 + q3
    err = a_err + k * j_err * (8.0 * b3 + 9.0) + _rounding(c, t1, t2, q1, q2, q3)
    return EvalResult(value, MethodId.BESSEL_CLOSED, err, terms)


def half_line_transform(beta: float, ctl: SeriesControl = DEFAULT_CONTROL) -> complex:
    """I(beta) = int_0^inf exp(-t^(3/2) - i beta t) dt via its 1F1/2F2 form.

    The mirror integral over (-inf, 0] is the complex conjugate, and
    S(beta) = (I + conj(I)) / (2 pi).
    """
    beta = float(beta)
    _, _, b3h, b3l = _beta_cubed_dd(abs(beta))
    yh, yl = dd_div(4.0 * b3h, 4.0 * b3l, 27.0, 0.0)
    if beta < 0:
        yh, yl = -yh, -yl
    z = (0.0, 0.0, yh, yl)
    f1 = pfq_dd((Fr(5, 6),), (Fr(2, 3),), z, ctl).value
    f2 = pfq_dd((Fr(7, 6),), (Fr(4, 3),), z, ctl).value
    f3 = pfq_dd(*_F22_S, z, ctl).value
    g23 = GAMMA_2_3[0]
    g13 = GAMMA_1_3[0]
    return (2.0 / 3.0) * g23 * f1 - (2j * beta / 9.0) * g13 * f2 - (beta * beta / 3.0) * f3


# -- dispatch -----------------------------------------------------------------


def s_auto(beta: float, *, switchover: float = SWITCHOVER) -> EvalResult:
    """S(beta) by the closed form up to ``switchover``, the asymptotic series beyond.

    S is even, so negative beta is folded onto |beta|.
    """
    beta = float(beta)
    if not math.isfinite(beta):
        raise DomainError(f"beta must be finite, got {beta}")
    b = abs(beta)
    if b <= switchover:
        return s_airy_closed(b)
    return s_asymptotic(b)


def h_auto(beta: float, *, switchover: float = SWITCHOVER) -> EvalResult:
    """H(beta) by the closed form up to ``switchover``, the asymptotic series beyond."""
    beta = _check_beta(beta)
    if beta <= switchover:
        return h_airy_closed(beta)
    return h_asymptotic(beta)


_S_METHODS = {
    MethodId.SERIES: s_series,
    MethodId.LEE: s_lee,
    MethodId.AIRY_CLOSED: s_airy_closed,
    MethodId.BESSEL_CLOSED: s_bessel_closed,
}
_H_METHODS = {
    MethodId.SERIES: h_series,
    MethodId.AIRY_CLOSED: h_airy_closed,
    MethodId.BESSEL_CLOSED: h_bessel_closed,
}


def evaluate(
    function: str,
    method: MethodId | str,
    beta: float,
    tol: float | None = None,
    *,
    switchover: float = SWITCHOVER,
) -> EvalResult:
    """Evaluate S or H by name.

    ``tol`` is the series ``rel_tol`` for series-based routes and the
    absolute tolerance for quadrature; the asymptotic route ignores it.
    """
    method = MethodId.parse(method) if isinstance(method, str) else method
    fn = function.upper()
    if fn not in ("S", "H"):
        raise DomainError(f"function must be S or H, got {function!r}")
    if fn == "S":
        beta = abs(float(beta))  # even function
    if method is MethodId.AUTO:
        return s_auto(beta, switchover=switchover) if fn == "S" else h_auto(beta, switchover=switchover)
    if method is MethodId.ASYMPTOTIC:
        return s_asymptotic(beta) if fn == "S" else h_asymptotic(beta)
    if method is MethodId.QUADRATURE:
        from . import oracle

        quad = oracle.s_quadrature if fn == "S" else oracle.h_quadrature
        rep = quad(_check_beta(beta), abs_tol=tol if tol is not None else oracle.DEFAULT_ABS_TOL)
        return EvalResult(rep.value, MethodId.QUADRATURE, rep.abs_err, rep.evaluations)
    table = _S_METHODS if fn == "S" else _H_METHODS
    if method not in table:
        raise DomainError(f"method {method.value} is not available for {fn}")
    ctl = DEFAULT_CONTROL if tol is None else SeriesControl(rel_tol=tol)
    if method is MethodId.BESSEL_CLOSED and 0.0 <= beta < BESSEL_MIN_BETA:
        method = MethodId.AIRY_CLOSED
    return table[method](beta, ctl)
