#!/usr/bin/env python3
"""Compare the compiled reduction kernel against the pure-Python fallback.

Runs identical Groebner-basis workloads through both implementations on the
raw term-dict interface and reports wall-clock times plus the speedup. The
outputs are asserted equal term-for-term, so this doubles as a consistency
check of the two kernels.
"""

import time
from fractions import Fraction

from weildescent import _pykernel

try:
    from weildescent import _speedups
except ImportError:
    _speedups = None

import weildescent as wd


def term_dicts(texts, ring):
    return [dict(wd.parse_poly(t, ring).terms) for t in texts]


def workloads():
    qi = wd.NumberField([1, 0, 1], gen_name="i")
    q = wd.NumberField([0, 1], gen_name="q0")

    r3 = wd.PolyRing(q, ("x", "y", "z"))
    yield "cyclic-like cubic system", term_dicts(
        ["x^2 - y*z", "x*y - z^2", "y^2 - x*z"], r3
    ), ("grevlex", None)

    r4 = wd.PolyRing(q, ("x", "y", "z", "w"))
    yield "katsura-style quartic system", term_dicts(
        [
            "x + 2*y + 2*z + 2*w - 1",
            "x^2 + 2*y^2 + 2*z^2 + 2*w^2 - x",
            "2*x*y + 2*y*z + 2*z*w - y",
            "y^2 + 2*x*z + 2*y*w - z",
        ],
        r4,
    ), ("grevlex", None)

    rh = wd.PolyRing(qi, ("x1", "x2", "x3", "x4", "t1", "t2", "t3", "t4"))
    yield "descent graph elimination", term_dicts(
        [
            "1 + x1^2 + x2^2",
            "-1 + x1^2 + x3^2",
            "i + x1^2 + x4^2",
            "t1 - (1 + i)*x1",
            "t2 - x2 - i*x3",
            "t3 - x3 - i*x2",
            "t4 - (1 + i)*x4",
        ],
        rh,
    ), ("block", 4)


def run(kernel, gens, order, repeats):
    budgeted = lambda: kernel.buchberger(
        [dict(g) for g in gens], order, [10 ** 9]
    )
    out = budgeted()
    best = min(
        timed(budgeted) for _ in range(repeats)
    )
    return out, best


def timed(fn):
    start = time.perf_counter()
    fn()
    return time.perf_counter() - start


def main():
    repeats = 5
    print(f"active kernel: {wd.kernel_implementation}")
    if _speedups is None:
        print("compiled kernel unavailable; benchmarking pure Python only")
    header = f"{'workload':<34}{'python':>12}{'compiled':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, gens, order in workloads():
        py_out, py_time = run(_pykernel, gens, order, repeats)
        if _speedups is not None:
            cy_out, cy_time = run(_speedups, gens, order, repeats)
            assert py_out == cy_out, f"kernel outputs differ on {name!r}"
            print(
                f"{name:<34}{py_time * 1e3:>10.2f}ms{cy_time * 1e3:>10.2f}ms"
                f"{py_time / cy_time:>9.2f}x"
            )
        else:
            print(f"{name:<34}{py_time * 1e3:>10.2f}ms{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
