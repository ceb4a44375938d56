"""Scalar series kernels.

These are the hot loops of the package.  Every function here takes and
returns plain floats/ints (or float64 arrays for parameter lists) so the
same source runs under numba or as ordinary Python.  Error handling is
done by the callers: kernels report a status code and the magnitudes
needed to judge cancellation, they never raise.

Status codes: 0 converged, 1 term cap reached.
"""

import math

from ._accel import jit
from ._dd import (
    BI0,
    BIP0,
    DD_EPS,
    GAMMA_1_3,
    GAMMA_2_3,
    cdd_mul,
    dd_add,
    dd_div,
    dd_mul,
    two_prod,
)

OK = 0
NO_CONVERGENCE = 1

# sign * |sin(3 pi n / 4)| pattern of the large-argument expansion, indexed by n % 8
_ASYM_SIGN = (0.0, 0.7071067811865476, 1.0, 0.7071067811865476,
              0.0, -0.7071067811865476, -1.0, -0.7071067811865476)


@jit
def pfq_sum(nh, nl, dh, dl, zrh, zrl, zih, zil, rel_tol, max_terms):
    """Sum a generalized hypergeometric series in double-double arithmetic.

    Parameters are given as hi/lo arrays, the argument as the four parts
    of a complex double-double.  Returns::

        (re_hi, re_lo, im_hi, im_lo, peak, abs_sum, weighted, last, terms, status)

    where ``peak`` is the largest partial-sum modulus seen, ``abs_sum`` the
    sum of term moduli, ``weighted`` the sum of ``n * |t_n|`` and ``last``
    the modulus of the final term added.
    """
    trh, trl, tih, til = 1.0, 0.0, 0.0, 0.0
    srh, srl, sih, sil = 1.0, 0.0, 0.0, 0.0
    peak = 1.0
    abs_sum = 1.0
    weighted = 0.0
    last = 1.0
    small = 0
    n = 0
    status = NO_CONVERGENCE
    while n < max_terms - 1:
        rh, rl = 1.0, 0.0
        for i in range(nh.shape[0]):
            ah, al = dd_add(nh[i], nl[i], float(n), 0.0)
            rh, rl = dd_mul(rh, rl, ah, al)
        for j in range(dh.shape[0]):
            bh, bl = dd_add(dh[j], dl[j], float(n), 0.0)
            rh, rl = dd_div(rh, rl, bh, bl)
        rh, rl = dd_div(rh, rl, float(n + 1), 0.0)
        trh, trl = dd_mul(trh, trl, rh, rl)
        tih, til = dd_mul(tih, til, rh, rl)
        trh, trl, tih, til = cdd_mul(trh, trl, tih, til, zrh, zrl, zih, zil)
        srh, srl = dd_add(srh, srl, trh, trl)
        sih, sil = dd_add(sih, sil, tih, til)
        n += 1

        tabs = math.hypot(trh, tih)
        sabs = math.hypot(srh, sih)
        last = tabs
        abs_sum += tabs
        weighted += n * tabs
        if sabs > peak:
            peak = sabs
        if tabs <= rel_tol * sabs:
            small += 1
            if small >= 2:
                status = OK
                break
        else:
            small = 0
    return srh, srl, sih, sil, peak, abs_sum, weighted, last, n + 1, status


@jit
def small_beta_series(beta, rel_tol, max_terms, deriv, fixed_terms):
    """Power series of S (``deriv=0``) or H (``deriv=1``) about beta = 0.

    S = (2/3pi) sum_n (-1)^n Gamma((4n+2)/3) beta^(2n) / (2n)!, and H uses
    the weights -4n.  The Gamma factor is not a rational function of n, so
    the terms run as three interleaved chains n = 3p + q, each with the
    rational step Gamma(x + 4) = x(x+1)(x+2)(x+3) Gamma(x).

    The common factor 2/(3pi) is NOT applied.  With ``fixed_terms > 0`` exactly
    that many terms (n = 0 .. fixed_terms-1) are summed.  Returns::

        (sum_hi, sum_lo, next_abs, peak, abs_sum, weighted, terms, status)
    """
    b2h, b2l = two_prod(beta, beta)
    b4h, b4l = dd_mul(b2h, b2l, b2h, b2l)
    b6h, b6l = dd_mul(b4h, b4l, b2h, b2l)

    # chain heads t_0, t_1, t_2 (without the 2/(3pi) factor)
    ch = [GAMMA_2_3[0], -0.5 * b2h, 0.0]
    cl = [GAMMA_2_3[1], -0.5 * b2l, 0.0]
    th, tl = dd_mul(GAMMA_1_3[0], GAMMA_1_3[1], b4h, b4l)
    th, tl = dd_mul(th, tl, 7.0, 0.0)
    th, tl = dd_div(th, tl, 162.0, 0.0)
    ch[2] = th
    cl[2] = tl

    sh, sl = 0.0, 0.0
    peak = 0.0
    abs_sum = 0.0
    weighted = 0.0
    small = 0
    n = 0
    status = NO_CONVERGENCE
    limit = fixed_terms if fixed_terms > 0 else max_terms
    while n < limit:
        q = n % 3
        xh, xl = ch[q], cl[q]
        if deriv == 1:
            wh, wl = dd_mul(xh, xl, -4.0 * n, 0.0)
        else:
            wh, wl = xh, xl
        sh, sl = dd_add(sh, sl, wh, wl)

        # advance this chain: t_{n+3} = -t_n * prod_{k<4}(x_n + k) * beta^6 / prod_{k=1..6}(2n + k)
        gh, gl = dd_div(4.0 * n + 2.0, 0.0, 3.0, 0.0)
        ph, pl = gh, gl
        for k in range(1, 4):
            ah, al = dd_add(gh, gl, float(k), 0.0)
            ph, pl = dd_mul(ph, pl, ah, al)
        dh_, dl_ = 1.0, 0.0
        for k in range(1, 7):
            dh_, dl_ = dd_mul(dh_, dl_, 2.0 * n + k, 0.0)
        ph, pl = dd_mul(ph, pl, b6h, b6l)
        ph, pl = dd_div(ph, pl, dh_, dl_)
        nh_, nl_ = dd_mul(xh, xl, ph, pl)
        ch[q] = -nh_
        cl[q] = -nl_

        tabs = abs(wh)
        sabs = abs(sh)
        abs_sum += tabs
        weighted += n * tabs
        if sabs > peak:
            peak = sabs
        n += 1
        if fixed_terms > 0:
            continue
        if tabs <= rel_tol * sabs:
            small += 1
            if small >= 2:
                status = OK
                break
        else:
            small = 0
    if fixed_terms > 0:
        status = OK
    nxt = abs(ch[n % 3])
    if deriv == 1:
        nxt *= 4.0 * n
    return sh, sl, nxt, peak, abs_sum, weighted, n, status


@jit
def large_beta_series(beta, max_terms, deriv, fixed_terms):
    """Asymptotic expansion of S (``deriv=0``) or H (``deriv=1``) in 1/beta.

    S ~ (1/pi) sum_{n>=1} (-1)^(n+1) Gamma((3n+2)/2) sin(3 pi n/4) beta^(-(3n+2)/2) / n!
    and H carries the extra factor (3n+2).  The envelope (term without the
    sine) is first decreasing, then increasing; the sum stops at its
    smallest member unless ``fixed_terms > 0`` forces n = 1 .. fixed_terms.
    The envelope magnitudes run as two interleaved chains,
    Gamma(a + 3) = a(a+1)(a+2) Gamma(a), with a log-domain twin used for the
    stopping decision so underflow cannot stall it.

    Returns ``(sum, omitted, abs_sum, rounding, terms)`` with ``omitted`` the
    envelope of the first term left out and ``rounding`` an a-priori bound on
    the floating-point error of the summation.
    """
    u = 2.0**-53
    lb = math.log(beta)
    # envelopes of n = 1 and n = 2
    m = [3.0 / (4.0 * math.sqrt(math.pi) * beta * beta * math.sqrt(beta)),
         3.0 / (math.pi * beta**4)]
    lg = [math.log(0.75 / math.sqrt(math.pi)) - 2.5 * lb,
          math.log(3.0 / math.pi) - 4.0 * lb]
    if deriv == 1:
        m[0] *= 5.0
        m[1] *= 8.0
        lg[0] += math.log(5.0)
        lg[1] += math.log(8.0)

    total = 0.0
    abs_sum = 0.0
    term_err = 0.0
    n = 1
    limit = fixed_terms if fixed_terms > 0 else max_terms
    while True:
        j = (n - 1) % 2
        cur = m[j]
        cur_log = lg[j]
        sgn = _ASYM_SIGN[n % 8]
        t = sgn * cur
        total += t
        abs_sum += abs(t)
        term_err += (3.0 * n + 4.0) * abs(t)

        # advance chain j from n to n + 2
        a = 0.5 * (3.0 * n + 2.0)
        ratio = a * (a + 1.0) * (a + 2.0) / ((n + 1.0) * (n + 2.0) * beta**3)
        if deriv == 1:
            ratio *= (3.0 * n + 8.0) / (3.0 * n + 2.0)
        m[j] = cur * ratio
        lg[j] = cur_log + math.log(ratio)

        if n >= limit:
            break
        # the other chain already holds n + 1
        if fixed_terms <= 0 and lg[1 - j] >= cur_log:
            break
        n += 1
    omitted = math.exp(lg[n % 2])
    gamma_n = n * u / (1.0 - n * u)
    rounding = u * term_err + gamma_n * abs_sum
    return total, omitted, abs_sum, rounding, n


@jit
def airy_maclaurin(xh, xl):
    """Bi and Bi' from the Maclaurin pair, in double-double.

    Bi = Bi(0) f + Bi'(0) g with f = sum 3^k (1/3)_k x^(3k)/(3k)! and
    g = sum 3^k (2/3)_k x^(3k+1)/(3k+1)!.  Returns
    ``(bi_hi, bi_lo, bip_hi, bip_lo, bi_abs, bip_abs)`` where the ``*_abs``
    values bound the sum of term moduli (for cancellation accounting).
    """
    x3h, x3l = dd_mul(xh, xl, xh, xl)
    x3h, x3l = dd_mul(x3h, x3l, xh, xl)

    fh, fl = 1.0, 0.0          # f
    gh, gl = xh, xl            # g
    dfh, dfl = 0.0, 0.0        # f'
    dgh, dgl = 1.0, 0.0        # g'
    afh, afl = 1.0, 0.0        # f term, k
    agh, agl = xh, xl          # g term, k
    adfh, adfl = 0.0, 0.0      # f' term, k
    adgh, adgl = 1.0, 0.0      # g' term, k
    f_abs = 1.0
    g_abs = abs(xh)
    df_abs = 0.0
    dg_abs = 1.0
    k = 0
    while k < 400:
        kk = 3.0 * k
        afh, afl = dd_mul(afh, afl, x3h, x3l)
        afh, afl = dd_div(afh, afl, (kk + 2.0) * (kk + 3.0), 0.0)
        agh, agl = dd_mul(agh, agl, x3h, x3l)
        agh, agl = dd_div(agh, agl, (kk + 3.0) * (kk + 4.0), 0.0)
        if k == 0:
            # f' starts at x^2/2
            adfh, adfl = dd_mul(xh, xl, xh, xl)
            adfh, adfl = dd_div(adfh, adfl, 2.0, 0.0)
        else:
            adfh, adfl = dd_mul(adfh, adfl, x3h, x3l)
            adfh, adfl = dd_div(adfh, adfl, kk * (kk + 2.0), 0.0)
        adgh, adgl = dd_mul(adgh, adgl, x3h, x3l)
        adgh, adgl = dd_div(adgh, adgl, (kk + 1.0) * (kk + 3.0), 0.0)

        fh, fl = dd_add(fh, fl, afh, afl)
        gh, gl = dd_add(gh, gl, agh, agl)
        dfh, dfl = dd_add(dfh, dfl, adfh, adfl)
        dgh, dgl = dd_add(dgh, dgl, adgh, adgl)
        f_abs += abs(afh)
        g_abs += abs(agh)
        df_abs += abs(adfh)
        dg_abs += abs(adgh)
        k += 1
        tiny = DD_EPS * 1e-3
        if (abs(afh) <= tiny * f_abs and abs(agh) <= tiny * g_abs
                and abs(adfh) <= tiny * max(df_abs, 1e-300)
                and abs(adgh) <= tiny * dg_abs):
            break

    bh, bl = dd_mul(BI0[0], BI0[1], fh, fl)
    ch_, cl_ = dd_mul(BIP0[0], BIP0[1], gh, gl)
    bh, bl = dd_add(bh, bl, ch_, cl_)
    ph, pl = dd_mul(BI0[0], BI0[1], dfh, dfl)
    ch_, cl_ = dd_mul(BIP0[0], BIP0[1], dgh, dgl)
    ph, pl = dd_add(ph, pl, ch_, cl_)
    return bh, bl, ph, pl, BI0[0] * f_abs + BIP0[0] * g_abs, BI0[0] * df_abs + BIP0[0] * dg_abs


@jit
def airy_march(y, dy, x0, x, step):
    """Carry (Bi, Bi') from x0 to x by Taylor steps of y'' = x y.

    About a centre c the Taylor coefficients obey
    a_m = (c a_{m-2} + a_{m-3}) / (m (m-1)).
    """
    c = x0
    while c != x:
        h = x - c
        if abs(h) > step:
            h = step if h > 0 else -step
        am3, am2, am1 = 0.0, y, dy
        val = y + dy * h
        der = dy
        hm1 = h
        small = 0
        m = 2
        while m < 300:
            am = (c * am2 + am3) / (m * (m - 1.0))
            dterm = m * am * hm1
            hm1 *= h
            vterm = am * hm1
            der += dterm
            val += vterm
            if abs(vterm) <= 1e-18 * abs(val) and abs(dterm) <= 1e-18 * abs(der):
                small += 1
                if small >= 3:
                    break
            else:
                small = 0
            am3, am2, am1 = am2, am1, am
            m += 1
        y, dy = val, der
        c = c + h
    return y, dy


@jit
def bessel_ascending(nu_h, nu_l, rg_h, rg_l, xh, xl):
    """J_nu(x) by its ascending series, summed in double-double.

    ``rg`` is 1/Gamma(nu+1).  Returns ``(value, abs_sum)`` where the common
    factor (x/2)^nu has been applied to both.
    """
    qh, ql = dd_mul(xh, xl, xh, xl)
    qh, ql = dd_div(qh, ql, 4.0, 0.0)
    ch, cl = rg_h, rg_l
    sh, sl = ch, cl
    abs_sum = abs(ch)
    small = 0
    k = 0
    while k < 1000:
        ah, al = dd_add(nu_h, nu_l, k + 1.0, 0.0)
        ah, al = dd_mul(ah, al, k + 1.0, 0.0)
        ch, cl = dd_mul(ch, cl, qh, ql)
        ch, cl = dd_div(ch, cl, ah, al)
        ch, cl = -ch, -cl
        sh, sl = dd_add(sh, sl, ch, cl)
        abs_sum += abs(ch)
        k += 1
        if abs(ch) <= DD_EPS * abs(sh):
            small += 1
            if small >= 2:
                break
        else:
            small = 0
    nu = nu_h + nu_l
    half = 0.5 * xh
    scale = math.exp(nu * math.log(half)) * (1.0 + nu * xl / xh)
    return (sh + sl) * scale, abs_sum * scale
