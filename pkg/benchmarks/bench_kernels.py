"""Compiled vs pure-Python kernels: polynomial ops and nodal scalar multiplication.

    python benchmarks/bench_kernels.py [--degrees 5,47,193] [--reps 5]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time

from nodaljac import _backend
from nodaljac.nodal import NodalCurve
from nodaljac.poly import Poly, divrem, mulmod, random_irreducible, xgcd

P = 4294967311


def timed(fn, reps):
    times = []
    for _ in range(reps):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return statistics.median(times)


def workloads(d, rng):
    f = random_irreducible(d, P, rng)
    a = Poly([rng.randrange(P) for _ in range(d)], P)
    b = Poly([rng.randrange(P) for _ in range(d)], P)
    ab = a * b
    curve = NodalCurve(P, f)
    Q = curve.random_element(rng)
    return {
        "mul": lambda: [a * b for _ in range(100)],
        "divrem": lambda: [divrem(ab, f) for _ in range(100)],
        "mulmod": lambda: [mulmod(a, b, f) for _ in range(100)],
        "xgcd": lambda: [xgcd(f, a) for _ in range(20)],
        "scalar_mul": lambda: curve.scalar_mul(P, Q),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degrees", default="5,47,193")
    ap.add_argument("--reps", type=int, default=5)
    args = ap.parse_args()
    if "compiled" not in _backend.AVAILABLE:
        raise SystemExit("compiled kernels are not built; nothing to compare")

    print(f"{'degree':>6} {'op':>11} {'compiled_s':>11} {'pure_s':>11} {'speedup':>8}")
    for d in (int(t) for t in args.degrees.split(",")):
        _backend.use("compiled")
        jobs = workloads(d, random.Random(d))
        for op, fn in jobs.items():
            t = {}
            for backend in ("compiled", "pure"):
                _backend.use(backend)
                t[backend] = timed(fn, args.reps)
            print(f"{d:>6} {op:>11} {t['compiled']:>11.5f} {t['pure']:>11.5f} {t['pure'] / t['compiled']:>8.1f}", flush=True)
    _backend.use("compiled")


if __name__ == "__main__":
    main()
