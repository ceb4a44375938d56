import math


def rel_err(a, b):
    return abs(a - b) / abs(b) if b != 0 else abs(a)


def close(a, b, rel, abs_=0.0):
    return abs(a - b) <= max(rel * abs(b), abs_) or math.isclose(a, b, rel_tol=rel, abs_tol=abs_)
