"""The pure-Python fallback must reproduce the compiled kernels."""

import json
import os
import subprocess
import sys

import pytest

from holtsmark import NUMBA_ENABLED

PROBE = """
import json
from holtsmark import NUMBA_ENABLED, evaluators as ev, specfun as sf
vals = [ev.s_airy_closed(2.3).value, ev.h_bessel_closed(4.1).value, ev.s_lee(1.7).value,
        ev.s_series(3.3).value, ev.h_asymptotic(9.0).value, sf.airy_bi(-20.0), sf.bessel_j_frac(-1/3, 7.5)]
print(json.dumps({"numba": NUMBA_ENABLED, "vals": vals}))
"""


def probe(flag):
    env = dict(os.environ, HOLTSMARK_NO_NUMBA=flag)
    out = subprocess.run([sys.executable, "-c", PROBE], env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def test_flag_disables_numba():
    assert probe("1")["numba"] is False
    assert probe("0")["numba"] is NUMBA_ENABLED


@pytest.mark.skipif(not NUMBA_ENABLED, reason="numba not importable")
def test_fallback_matches_compiled():
    py, jit = probe("1")["vals"], probe("0")["vals"]
    for a, b in zip(py, jit):
        assert abs(a - b) <= 1e-15 * abs(b)
