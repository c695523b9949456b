"""Time the compiled kernels against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat R] [--number N]
"""

from __future__ import annotations

import argparse
import math
import timeit

from bpaprob import _kernels, singleton_bounds
from bpaprob.sampling import default_frame, random_bpa


def _workloads():
    """(name, n, callable-factory) triples; each factory takes a backend module."""
    cases = []
    for n, focal, seed in ((3, 5, 1), (6, 20, 2), (12, 60, 3), (20, 120, 4)):
        b = singleton_bounds(random_bpa(default_frame(n), focal, seed))
        lo, hi = list(b.lower), list(b.upper)
        cases.append((f"waterfill n={n}", lambda k, lo=lo, hi=hi: k.waterfill(lo, hi)))
        cases.append((f"min_entropy_vertex n={n}",
                      lambda k, lo=lo, hi=hi: k.min_entropy_vertex(lo, hi)))
        start = _kernels.python_backend.min_entropy_vertex(lo, hi)[0]
        end = _kernels.python_backend.waterfill(lo, hi)[0]
        h0, h1 = _kernels.python_backend.entropy_nats(start), _kernels.python_backend.entropy_nats(end)
        mid = 0.5 * (h0 + h1)
        cases.append((f"segment_bisect n={n}",
                      lambda k, s=start, e=end, t=mid: k.segment_bisect(s, e, t, 1e-12)))
    for n, step in ((3, 0.01), (4, 0.02)):
        b = singleton_bounds(random_bpa(default_frame(n), 2 * n, 5))
        lo, hi = list(b.lower), list(b.upper)
        cases.append((f"grid_search n={n} step={step}",
                      lambda k, lo=lo, hi=hi, s=step: k.grid_search(lo, hi, s, 1.0)))
    return cases


def _best(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=20)
    args = parser.parse_args(argv)

    compiled = _kernels.compiled_backend
    py = _kernels.python_backend
    if compiled is None:
        print("compiled backend unavailable; timing the Python fallback only")
    print(f"{'kernel':32} {'python':>12} {'compiled':>12} {'speedup':>8}")
    for name, make in _workloads():
        number = 1 if name.startswith("grid") else args.number
        t_py = _best(lambda: make(py), args.repeat, number)
        if compiled is None:
            print(f"{name:32} {t_py * 1e6:10.1f}us {'-':>12} {'-':>8}")
            continue
        t_c = _best(lambda: make(compiled), args.repeat, number)
        speedup = t_py / t_c if t_c > 0 else math.inf
        print(f"{name:32} {t_py * 1e6:10.1f}us {t_c * 1e6:10.1f}us {speedup:7.1f}x")


if __name__ == "__main__":
    main()
