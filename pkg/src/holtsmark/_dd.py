"""Double-double arithmetic.

A value is carried as an unevaluated sum ``hi + lo`` of two floats with
``|lo| <= ulp(hi)/2``, giving roughly 32 significant digits.  The
primitives are the classic error-free transforms (Knuth two-sum, Dekker
split/two-product).  They are written as free functions over floats so
numba can inline them into the series kernels.
"""

from fractions import Fraction

from ._accel import jit

# unit roundoff of the double-double format
DD_EPS = 2.0**-104

_SPLITTER = 134217729.0  # 2**27 + 1


@jit
def two_sum(a, b):
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


@jit
def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    e = b - (s - a)
    return s, e


@jit
def split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


@jit
def two_prod(a, b):
    p = a * b
    ah, al = split(a)
    bh, bl = split(b)
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


@jit
def dd_add(ah, al, bh, bl):
    s, e = two_sum(ah, bh)
    t, f = two_sum(al, bl)
    e += t
    s, e = quick_two_sum(s, e)
    e += f
    return quick_two_sum(s, e)


@jit
def dd_sub(ah, al, bh, bl):
    return dd_add(ah, al, -bh, -bl)


@jit
def dd_mul(ah, al, bh, bl):
    p, e = two_prod(ah, bh)
    e += ah * bl + al * bh
    return quick_two_sum(p, e)


@jit
def dd_div(ah, al, bh, bl):
    q1 = ah / bh
    ph, pl = dd_mul(bh, bl, q1, 0.0)
    rh, rl = dd_sub(ah, al, ph, pl)
    q2 = rh / bh
    ph, pl = dd_mul(bh, bl, q2, 0.0)
    rh, rl = dd_sub(rh, rl, ph, pl)
    q3 = rh / bh
    q1, q2 = quick_two_sum(q1, q2)
    return dd_add(q1, q2, q3, 0.0)


@jit
def cdd_mul(arh, arl, aih, ail, brh, brl, bih, bil):
    """Complex double-double product; returns (re_hi, re_lo, im_hi, im_lo)."""
    xh, xl = dd_mul(arh, arl, brh, brl)
    yh, yl = dd_mul(aih, ail, bih, bil)
    rh, rl = dd_sub(xh, xl, yh, yl)
    xh, xl = dd_mul(arh, arl, bih, bil)
    yh, yl = dd_mul(aih, ail, brh, brl)
    ih, il = dd_add(xh, xl, yh, yl)
    return rh, rl, ih, il


def dd_from(value):
    """Split an int, float or Fraction into a (hi, lo) pair."""
    if isinstance(value, Fraction):
        hi = float(value)
        return hi, float(value - Fraction(hi))
    return float(value), 0.0


def dd_to_fraction(hi, lo):
    return Fraction(hi) + Fraction(lo)


# constants, correct to ~1e-32 relative
PI = (3.141592653589793, 1.2246467991473532e-16)
GAMMA_1_3 = (2.6789385347077475, 1.7947798648225244e-16)
GAMMA_2_3 = (1.3541179394264005, -4.6231203911366416e-17)
THREE_M43 = (0.23112042478354491, -1.2756640991409918e-17)  # 3**(-4/3)
BI0 = (0.6149266274460007, 5.0899207794891416e-17)  # Bi(0)
BIP0 = (0.4482883573538264, -2.5363237774417305e-17)  # Bi'(0)
