"""The ten acceptance criteria, one test each.

Each test prints a single PASS/FAIL line with the measured figure.  Run as a
script (python tests/test_acceptance.py) for just the summary.
"""

import io
import csv
import math
import sys

import numpy as np
import pytest

from holtsmark import cli, oracle
from holtsmark import evaluators as ev
from holtsmark.specfun import HypergeometricSpec, airy_bi, airy_pair, bessel_j_frac, pfq

GRID = [round(0.1 * k, 10) for k in range(51)]


def report(num, title, ok, detail):
    print(f"[{'PASS' if ok else 'FAIL'}] criterion {num:2d}: {title} ({detail})", flush=True)
    return ok


def c1_peak():
    v = ev.s_auto(0.0).value
    exact = 2 * math.gamma(2 / 3) / (3 * math.pi)
    ok = abs(v - 0.2874) <= 5e-5 and abs(v - exact) <= 1e-12
    return ok, f"S(0)={v:.15f}, |S(0)-2G(2/3)/3pi|={abs(v - exact):.1e}"


def c2_small_coefficients():
    prev, got = 0.0, []
    for order in (1, 2, 3):
        part = ev.small_series_partial(1.0, order)
        got.append(part - prev)
        prev = part
    dev = max(abs(g - w) for g, w in zip(got, (0.2874, -0.1061, 0.0246)))
    return dev <= 5e-5, "coefficients " + ", ".join(f"{g:+.5f}" for g in got) + f", max dev {dev:.1e}"


def c3_asymptotic_coefficients():
    prev, got = 0.0, []
    for order in (1, 2, 3):
        part = ev.asymptotic_partial(1.0, order)
        got.append(part - prev)
        prev = part
    dev = max(abs(g - w) for g, w in zip(got, (0.2992, 0.9549, 1.9635)))
    return dev <= 5e-5, "coefficients " + ", ".join(f"{g:.5f}" for g in got) + f", max dev {dev:.1e}"


def c4_oracle_agreement():
    quad = {b: oracle.s_quadrature(b).value for b in GRID}
    worst = {}
    for f in (ev.s_airy_closed, ev.s_lee, ev.s_series, ev.s_bessel_closed):
        pts = [b for b in GRID if b > 0 or f is not ev.s_bessel_closed]
        worst[f.__name__] = max(abs(f(b).value - quad[b]) for b in pts)
    ok = all(w <= 1e-8 for w in worst.values())
    return ok, ", ".join(f"{k} {v:.1e}" for k, v in worst.items())


def c5_h_agreement():
    pts = GRID[1:]
    quad = max(abs(ev.h_airy_closed(b).value - oracle.h_quadrature(b).value) for b in pts)
    bes = max(abs(ev.h_bessel_closed(b).value - ev.h_airy_closed(b).value) for b in pts)
    return quad <= 1e-8 and bes <= 1e-10, f"airy vs quadrature {quad:.1e}, bessel vs airy {bes:.1e}"


def c6_derivative_relation():
    h = 1e-5
    worst = 0.0
    for b in (0.5, 1.0, 2.0, 3.0):
        fd = -2 * b * (ev.s_auto(b + h).value - ev.s_auto(b - h).value) / (2 * h)
        hv = ev.h_auto(b).value
        worst = max(worst, abs(fd - hv) / abs(hv))
    return worst <= 1e-6, f"max relative deviation {worst:.1e}"


def c7_fourier():
    d = {tau: oracle.fourier_check(tau) for tau in (0.0, 0.5, 1.0, 2.0)}
    return max(d.values()) <= 1e-6, ", ".join(f"tau={t}: {v:.1e}" for t, v in d.items())


def c8_asymptotic_regime():
    parts, ok = [], True
    for b in (8.0, 10.0, 15.0):
        a = ev.s_asymptotic(b)
        q = oracle.s_quadrature(b, 1e-19)
        diff = abs(a.value - q.value)
        ok &= diff <= a.err_estimate
        parts.append(f"beta={b:g}: |diff|={diff:.1e} <= est {a.err_estimate:.1e}")
        if b == 15.0:
            rel = diff / q.value
            ok &= rel <= 1e-6
            parts.append(f"rel {rel:.1e}")
    return ok, "; ".join(parts)


def c9_identities():
    devs = {}
    xs = [1j * y for y in (0.3, -1.0, 2.5, 5.0)]
    c1 = max(
        abs(pfq(HypergeometricSpec((1, 5 / 6), (2 / 3, 1), x)) - pfq(HypergeometricSpec((5 / 6,), (2 / 3,), x)))
        / abs(pfq(HypergeometricSpec((5 / 6,), (2 / 3,), x)))
        for x in xs
    )
    c2 = 0.0
    for x in xs:
        rhs = 8 / (7 * x) * (pfq(HypergeometricSpec((7 / 6,), (4 / 3,), x)) - 1)
        c2 = max(c2, abs(pfq(HypergeometricSpec((1, 13 / 6), (2, 7 / 3), x)) - rhs) / abs(rhs))
    devs["contractions"] = (max(c1, c2), 1e-12)

    g = 0.0
    for r in range(6):
        for q in range(3):
            lhs = math.gamma(2 * r + 2 * (2 * q + 1) / 3) / math.gamma(3 * r + 2 * q + 1)
            a = 2 * q / 3 + 5 / 6
            num = math.gamma(a + r)
            den = math.gamma((2 * q + 2) / 3 + r) * math.gamma((2 * q + 3) / 3 + r)
            rhs = math.sqrt(2 * math.pi) * 2 ** (2 * r + 4 * q / 3 + 1 / 6) / 3 ** (3 * r + 2 * q + 0.5) * num / den
            g = max(g, abs(rhs - lhs) / lhs)
    devs["gauss"] = (g, 1e-12)

    h = 1e-4
    ode = 0.0
    for x in np.linspace(-5, 2, 10):
        second = (airy_bi(x + h) - 2 * airy_bi(x) + airy_bi(x - h)) / h**2
        ode = max(ode, abs(second - x * airy_bi(x)) / max(abs(x * airy_bi(x)), 1e-3))
    devs["airy ode"] = (ode, 1e-6)

    con = 0.0
    for x in (0.1, 0.7, 1.5, 3.0, 6.0, 10.0):
        z = 2 / 3 * x**1.5
        bi, _ = airy_pair(-x)
        con = max(con, abs(bi - math.sqrt(x / 3) * (bessel_j_frac(-1 / 3, z) - bessel_j_frac(1 / 3, z))) / abs(bi))
    devs["bessel/airy"] = (con, 1e-9)

    der = 0.0
    hh = 1e-6
    for x in (0.4, -1.3, 2.0, 3j):
        f = lambda z: pfq(HypergeometricSpec((1, 1.5), (4 / 3, 5 / 3), z))
        fd = (f(x + hh) - f(x - hh)) / (2 * hh)
        exact = 1.5 / (20 / 9) * pfq(HypergeometricSpec((2, 2.5), (7 / 3, 8 / 3), x))
        der = max(der, abs(fd - exact) / abs(exact))
    devs["2F2 derivative"] = (der, 1e-6)

    ij = 0.0
    for b in (0.5, 1.0, 2.0):
        i, j = ev.half_line_transform(b), ev.half_line_transform(-b)
        ij = max(ij, abs(i - j.conjugate()), abs(((i + j) / (2 * math.pi)).imag))
    devs["I/J conjugacy"] = (ij, 1e-10)

    ok = all(v <= tol for v, tol in devs.values())
    return ok, ", ".join(f"{k} {v:.1e}" for k, (v, _) in devs.items())


def _figure(*argv):
    out = io.StringIO()
    assert cli.main(["figure", *argv], out=out) == 0
    return [{k: float(v) for k, v in r.items()} for r in csv.DictReader(io.StringIO(out.getvalue()))]


def c10_figures():
    small = _figure("--which", "small", "--orders", "4,16,64", "--from", "0", "--to", "4", "--step", "0.05")
    track = max(abs(r["order_64"] - r["exact"]) for r in small)
    dev4 = [(r["beta"], abs(r["order_4"] - r["exact"])) for r in small]
    near = max(d for b, d in dev4 if b <= 0.5)
    departs = min(d for b, d in dev4 if b >= 1.5)
    large = _figure("--which", "large", "--orders", "4,16,64", "--from", "1", "--to", "8", "--step", "0.05")
    grows = True
    for n in (4, 16, 64):
        err = [abs(r[f"order_{n}"] - r["exact"]) for r in large]
        at = {r["beta"]: e for r, e in zip(large, err)}
        # error below beta = 2 exceeds the error at every beta >= 3
        grows &= min(e for b, e in at.items() if b <= 1.5) > max(e for b, e in at.items() if b >= 3.0)
    ok = track <= 1e-6 and departs > 100 * near and departs > 1e-3 and grows
    return ok, f"order-64 max dev {track:.1e}, order-4 dev {near:.1e} (beta<=0.5) vs >={departs:.1e} (beta>=1.5), large diverges: {grows}"


CRITERIA = [
    (1, "peak value S(0)", c1_peak),
    (2, "small-beta coefficients", c2_small_coefficients),
    (3, "asymptotic coefficients", c3_asymptotic_coefficients),
    (4, "S routes vs quadrature on 0..5", c4_oracle_agreement),
    (5, "H closed forms vs quadrature", c5_h_agreement),
    (6, "H = -2 beta S'", c6_derivative_relation),
    (7, "Fourier identity", c7_fourier),
    (8, "asymptotic regime vs quadrature", c8_asymptotic_regime),
    (9, "identity suite", c9_identities),
    (10, "truncation-order figure data", c10_figures),
]


@pytest.mark.parametrize("num,title,check", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        report(num, title, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    results = [report(n, t, *c()) for n, t, c in CRITERIA]
    sys.exit(0 if all(results) else 1)
