#!/usr/bin/env python3
"""Compare the numba kernels with the pure-Python fallback.

Each mode runs in its own interpreter because the flag is read at import.
JIT compile time is reported separately from the warm timings.

    python3 benchmarks/bench_jit.py --repeat 5
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = {
    "s_airy_closed": "lambda b: ev.s_airy_closed(b)",
    "h_airy_closed": "lambda b: ev.h_airy_closed(b)",
    "s_lee": "lambda b: ev.s_lee(b)",
    "s_series": "lambda b: ev.s_series(b)",
    "s_asymptotic": "lambda b: ev.s_asymptotic(b + 6.0)",
}

CHILD = r"""
import json, sys, time
import numpy as np
t0 = time.perf_counter()
import holtsmark
from holtsmark import evaluators as ev
grid = np.linspace(0.05, 5.0, {points})
out = {{"numba": holtsmark.NUMBA_ENABLED}}
for name, src in {workloads}.items():
    f = eval(src)
    c0 = time.perf_counter(); f(1.0); first = time.perf_counter() - c0
    best = float("inf")
    for _ in range({repeat}):
        s = time.perf_counter()
        for b in grid:
            f(float(b))
        best = min(best, time.perf_counter() - s)
    out[name] = {{"first_call_s": first, "per_call_us": best / len(grid) * 1e6}}
print(json.dumps(out))
"""


def run_mode(no_numba: bool, points: int, repeat: int) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["HOLTSMARK_NO_NUMBA"] = "1"
    else:
        env.pop("HOLTSMARK_NO_NUMBA", None)
    code = CHILD.format(points=points, repeat=repeat, workloads=WORKLOADS)
    p = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return json.loads(p.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--points", type=int, default=50)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="emit raw results")
    args = ap.parse_args()

    t = time.perf_counter()
    jit = run_mode(False, args.points, args.repeat)
    py = run_mode(True, args.points, args.repeat)
    if args.json:
        print(json.dumps({"numba": jit, "python": py}, indent=1))
        return
    if not jit.pop("numba"):
        print("warning: numba did not load; both columns are pure Python", file=sys.stderr)
    py.pop("numba")
    print(f"{'workload':16s} {'numba us/call':>14s} {'python us/call':>15s} {'speedup':>8s} {'jit compile s':>14s}")
    for name in WORKLOADS:
        a, b = jit[name], py[name]
        print(
            f"{name:16s} {a['per_call_us']:14.1f} {b['per_call_us']:15.1f} "
            f"{b['per_call_us'] / a['per_call_us']:7.1f}x {a['first_call_s']:14.2f}"
        )
    print(f"total wall time {time.perf_counter() - t:.1f}s")


if __name__ == "__main__":
    main()
