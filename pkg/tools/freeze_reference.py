#!/usr/bin/env python3
"""Regenerate tests/reference_values.py with mpmath at 40+ digits.

Desk tool only: the package never imports mpmath.  Each value is computed
by brute force (term-by-term sums or real-axis quadrature of the defining
integrals), not by the formulas under test.
"""

import argparse
from pathlib import Path

import mpmath as mp


def gamma_by_integral(a):
    return mp.quad(lambda t: t ** (a - 1) * mp.exp(-t), [0, 1, 10, 50, mp.inf])


def series(term, tol):
    total, n = mp.mpf(0), 0
    while True:
        t = term(n)
        total += t
        if n > 5 and abs(t) < tol:
            return total
        n += 1


def pfq_terms(a, b, z):
    total, t, n = mp.mpc(0), mp.mpc(1), 0
    while abs(t) > mp.mpf(10) ** (-mp.mp.dps - 5) or n < 5:
        total += t
        for x in a:
            t *= x + n
        for y in b:
            t /= y + n
        t *= z / (n + 1)
        n += 1
    return total


def airy_bi_series(x):
    c1 = 1 / (mp.mpf(3) ** (mp.mpf(1) / 6) * mp.gamma(mp.mpf(2) / 3))
    c2 = mp.mpf(3) ** (mp.mpf(1) / 6) / mp.gamma(mp.mpf(1) / 3)
    f = series(lambda k: mp.mpf(3) ** k * mp.rf(mp.mpf(1) / 3, k) * x ** (3 * k) / mp.factorial(3 * k), mp.mpf(10) ** -45)
    g = series(lambda k: mp.mpf(3) ** k * mp.rf(mp.mpf(2) / 3, k) * x ** (3 * k + 1) / mp.factorial(3 * k + 1), mp.mpf(10) ** -45)
    return c1 * f + c2 * g


def airy_bip_series(x):
    c1 = 1 / (mp.mpf(3) ** (mp.mpf(1) / 6) * mp.gamma(mp.mpf(2) / 3))
    c2 = mp.mpf(3) ** (mp.mpf(1) / 6) / mp.gamma(mp.mpf(1) / 3)
    fp = series(lambda k: mp.mpf(3) ** (k + 1) * mp.rf(mp.mpf(1) / 3, k + 1) * x ** (3 * k + 2) / mp.factorial(3 * k + 2), mp.mpf(10) ** -45)
    gp = series(lambda k: mp.mpf(3) ** k * mp.rf(mp.mpf(2) / 3, k) * x ** (3 * k) / mp.factorial(3 * k), mp.mpf(10) ** -45)
    return c1 * fp + c2 * gp


def bessel_series(nu, x):
    return series(lambda k: (-1) ** k / (mp.factorial(k) * mp.gamma(k + nu + 1)) * (x / 2) ** (2 * k + nu), mp.mpf(10) ** -45)


def _breaks(beta, upper=16):
    step = mp.pi / max(beta, 1)
    pts = [mp.mpf(0)]
    while pts[-1] < upper:
        pts.append(pts[-1] + step)
    return pts + [mp.inf]


def s_integral(beta):
    beta = mp.mpf(beta)
    return mp.quad(lambda x: mp.cos(beta * x) * mp.exp(-(x**1.5)), _breaks(beta)) / mp.pi


def h_integral(beta):
    beta = mp.mpf(beta)
    return 2 * beta / mp.pi * mp.quad(lambda x: x * mp.sin(beta * x) * mp.exp(-(x**1.5)), _breaks(beta))


def s_ray(beta):
    beta, e = mp.mpf(beta), mp.exp(1j * mp.pi / 4)
    return mp.re(mp.quad(lambda t: mp.exp(1j * beta * t * e - (t * e) ** 1.5) * e, [0, 1, 4, 16, mp.inf])) / mp.pi


def h_ray(beta):
    beta, e = mp.mpf(beta), mp.exp(1j * mp.pi / 4)
    g = lambda t: t * e * e * mp.exp(1j * beta * t * e - (t * e) ** 1.5)
    return 2 * beta / mp.pi * mp.im(mp.quad(g, [0, 1, 4, 16, mp.inf]))


S_BETAS = (0.5, 1, 1.5, 2, 2.5, 3, 4, 5, 6, 8, 10, 15, 20)
H_BETAS = (0.5, 1, 1.5, 2, 3, 4, 5, 6, 8, 10, 15)


def build():
    mp.mp.dps = 45
    out = {}
    out["GAMMA_2_3"] = gamma_by_integral(mp.mpf(2) / 3)
    out["F11_5_6_2_3_AT_4I_27"] = pfq_terms([mp.mpf(5) / 6], [mp.mpf(2) / 3], 4j / mp.mpf(27))
    out["BI_M1"] = airy_bi_series(mp.mpf(-1))
    out["BIP_M1"] = airy_bip_series(mp.mpf(-1))
    out["J_2_3_AT_1"] = bessel_series(mp.mpf(2) / 3, mp.mpf(1))
    s_vals, h_vals = {}, {}
    for b in S_BETAS:
        v = s_integral(b) if b <= 6 else s_ray(b)
        w = s_ray(b)
        assert abs(v - w) < mp.mpf(10) ** -30, (b, v, w)
        s_vals[b] = v
    for b in H_BETAS:
        v = h_integral(b) if b <= 6 else h_ray(b)
        w = h_ray(b)
        assert abs(v - w) < mp.mpf(10) ** -30, (b, v, w)
        h_vals[b] = v
    return out, s_vals, h_vals


def render(out, s_vals, h_vals) -> str:
    def num(x):
        if isinstance(x, mp.mpc):
            return f"complex({mp.nstr(x.real, 20)}, {mp.nstr(x.imag, 20)})"
        return mp.nstr(x, 20)

    lines = ['"""Frozen high-precision reference values (written by tools/freeze_reference.py)."""', ""]
    for k, v in out.items():
        lines.append(f"{k} = {num(v)}")
    lines.append("")
    lines.append("S_REF = {")
    lines += [f"    {b!r}: {num(v)}," for b, v in s_vals.items()]
    lines.append("}")
    lines.append("")
    lines.append("H_REF = {")
    lines += [f"    {b!r}: {num(v)}," for b, v in h_vals.items()]
    lines.append("}")
    return "\n".join(lines) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path(__file__).resolve().parents[1] / "tests" / "reference_values.py")
    args = ap.parse_args()
    args.out.write_text(render(*build()))
    print(f"wrote {args.out}")


if __name__ == "__main__":
    main()
