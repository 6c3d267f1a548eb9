#!/usr/bin/env python3
"""Benchmark the compiled Groebner engine against the pure-Python fallback.

Workloads:
  orbit-fibre    GB of the naive homogenisation of the 4-critical-value
                 fibre ideal (9 variables, grevlex)
  orbit-saturate the full saturated homogenisation of the same ideal
                 (elimination order in 10 variables)
  katsura-5/6    dense quadrics, classic stress systems
  cyclic-5       the cyclic-roots system

Usage: python benchmarks/bench_gb.py [--repeat N] [--skip-slow]
"""

import argparse
import statistics
import sys
import time

from orbitcompat import (
    DiagSpec,
    IdealPresentation,
    VarContext,
    fibre_ideal,
    homogenise_naive,
    orbit_ideal_charvalues,
    parse_poly,
)
from orbitcompat._kernel import pure

try:
    from orbitcompat._kernel import _speedups
except ImportError:
    _speedups = None


def orbit_fibre_raw():
    spec = DiagSpec([1, 0, -1])
    orbit = orbit_ideal_charvalues(spec, [0, -1])
    fib = fibre_ideal(orbit, DiagSpec([1, -1, 0]), 0)
    hom = homogenise_naive(fib, "t")
    gens = [[(m, int(c)) for m, c in g.terms.items()] for g in hom.generators]
    return gens, len(hom.ctx), 1, 0


def orbit_saturate_raw():
    # the saturation workload: naive homogenisation + (1 - w*t), eliminate w
    spec = DiagSpec([1, 0, -1])
    orbit = orbit_ideal_charvalues(spec, [0, -1])
    fib = fibre_ideal(orbit, DiagSpec([1, -1, 0]), 0)
    hom = homogenise_naive(fib, "t")
    names = ("w",) + hom.ctx.names
    ctx = VarContext(names)
    gens = [g.map_context(ctx) for g in hom.generators]
    gens.append(parse_poly("1 - w*t", ctx))
    raw = [[(m, int(c)) for m, c in g.terms.items()] for g in gens]
    return raw, len(ctx), 2, 1


def katsura(n):
    names = [f"u{i}" for i in range(n + 1)]
    ctx = VarContext(names)
    u = lambda i: parse_poly(names[abs(i)], ctx)
    gens = []
    for m in range(n):
        acc = parse_poly("0", ctx)
        for i in range(-n, n + 1):
            j = m - i
            if abs(j) <= n:
                acc = acc + u(i) * u(j)
        gens.append(acc - u(m))
    total = parse_poly("0", ctx)
    for i in range(-n, n + 1):
        total = total + u(i)
    gens.append(total - parse_poly("1", ctx))
    raw = [[(m, int(c)) for m, c in g.terms.items()] for g in gens]
    return raw, n + 1, 1, 0


def cyclic(n):
    names = [f"x{i}" for i in range(n)]
    ctx = VarContext(names)
    xs = [parse_poly(nm, ctx) for nm in names]
    gens = []
    for d in range(1, n):
        acc = parse_poly("0", ctx)
        for i in range(n):
            prod = parse_poly("1", ctx)
            for k in range(d):
                prod = prod * xs[(i + k) % n]
            acc = acc + prod
        gens.append(acc)
    prod = parse_poly("1", ctx)
    for x in xs:
        prod = prod * x
    gens.append(prod - parse_poly("1", ctx))
    raw = [[(m, int(c)) for m, c in g.terms.items()] for g in gens]
    return raw, n, 1, 0


WORKLOADS = {
    "orbit-fibre": (orbit_fibre_raw, False),
    "orbit-saturate": (orbit_saturate_raw, False),
    "katsura-5": (lambda: katsura(5), True),
    "cyclic-5": (lambda: cyclic(5), True),
    "katsura-6": (lambda: katsura(6), True),
}


def bench(fn, raw_args, repeat):
    times = []
    basis = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        basis = fn(*raw_args, 2_000_000, 200)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.mean(times), len(basis)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-slow", action="store_true", help="only the orbit workloads")
    args = ap.parse_args(argv)

    engines = [("pure", pure.buchberger)]
    if _speedups is not None:
        engines.append(("cython", _speedups.buchberger))
    else:
        print("note: compiled kernel not built; benchmarking pure only")

    print(f"{'workload':<16} {'engine':<8} {'best':>9} {'mean':>9}  basis")
    print("-" * 55)
    for name, (make, slow) in WORKLOADS.items():
        if slow and args.skip_slow:
            continue
        raw_args = make()
        results = {}
        for ename, fn in engines:
            best, mean, size = bench(fn, raw_args, args.repeat)
            results[ename] = best
            print(f"{name:<16} {ename:<8} {best:>8.3f}s {mean:>8.3f}s  {size}")
        if len(results) == 2:
            print(
                f"{'':<16} speedup {results['pure'] / results['cython']:>7.2f}x"
            )
    return 0


if __name__ == "__main__":
    sys.exit(main())
