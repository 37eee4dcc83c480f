"""Compiled kernels against the numpy fallback on the hot loops.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""
import argparse
import time

import numpy as np

from rrw import _kernels_py as pure
from rrw import bounds_g4 as g4
from rrw import bounds_g7 as g7
from rrw.channel import ChannelParams
from rrw.regions import RADIAL_XTOL, octant_directions

try:
    from rrw import _kernels as compiled
except ImportError:
    compiled = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if compiled is None:
        raise SystemExit("compiled extension not built; run `pip install --no-build-isolation -e .`")

    ch = ChannelParams(10, 1, 2, 4)
    reg = g7.inner_g7(1, ch)
    prog = reg._prog
    dirs = octant_directions(32)
    bases = np.zeros_like(dirs)
    pts = np.random.default_rng(0).uniform(0, 1.5, (100_000, 3))
    best = g7.best_inner_g7(1, ch)
    B = best.rhs_at(best.theta_grid())
    A = best.masks
    inner1 = g4.inner1_g4(1, ch)
    thetas = inner1.theta_grid(1e-4)
    B1 = inner1.rhs_at(thetas)

    cases = [
        ("member, 1e5 points", lambda k: k.member(*prog, pts, 0.0)),
        ("radial, 1024 directions", lambda k: k.sup_along(*prog, bases, dirs, RADIAL_XTOL)),
        (f"vertices, {len(B)} simplex cells", lambda k: k.polytope_vertices(A, B, 1e-9)),
        (f"vertices, {len(B1)} interval cells", lambda k: k.polytope_vertices(inner1.masks, B1, 1e-9)),
    ]
    print(f"{'kernel':34s} {'pure [s]':>10s} {'compiled [s]':>13s} {'speedup':>8s}")
    for name, fn in cases:
        tp = best_of(lambda: fn(pure), args.repeat)
        tc = best_of(lambda: fn(compiled), args.repeat)
        print(f"{name:34s} {tp:10.4f} {tc:13.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
