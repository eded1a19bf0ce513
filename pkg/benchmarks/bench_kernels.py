#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-python fallback.

The workload is a universal Maurer-Cartan solve on a DGLA built so that the
series never terminates: g^1 = span{x1..x4, c}, g^2 = span{b}, dc = b, and
every bracket of degree-1 generators equals b.  All brackets land in g^2 and
g^3 = 0, so Leibniz and Jacobi hold trivially, while h(b) = c keeps feeding
new terms into the fixed-point iteration.  With 4 harmonic directions the
monomial count grows combinatorially in the truncation order, which is what
makes the convolution kernel hot.

Backend selection happens at import time, so each measurement runs in a
fresh subprocess (DGLA_PURE_PYTHON=1 forces the fallback).  Both runs must
produce byte-identical solutions; the parent verifies that before printing
the comparison.

Usage: python3 benchmarks/bench_kernels.py [--order N] [--repeat R]
"""

import argparse
import hashlib
import json
import os
import subprocess
import sys
import time


def build_workload_dgla():
    from dgla import DGLA, antisymmetric_closure

    gens = [("x%d" % i, 1) for i in range(1, 5)] + [("c", 1), ("b", 2)]
    ones = [g for g, _ in gens if g != "b"]
    pairs = {}
    for i, u in enumerate(ones):
        for v in ones[i:]:
            pairs[(u, v)] = [("b", 1)]
    return DGLA(gens, d={"c": [("b", 1)]},
                bracket=antisymmetric_closure(gens, pairs), name="bench")


def run_child(order, repeat):
    from dgla import (
        build_contraction,
        build_splitting,
        kernel_backend,
        kuranishi_map,
        universal_solution,
        validate_dgla,
    )
    from dgla.report import canonical_json, element_data

    L = build_workload_dgla()
    assert validate_dgla(L).ok
    R = build_contraction(L, build_splitting(L))

    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        sol = universal_solution(L, R, order)
        back = kuranishi_map(L, R, sol.tau)
        dt = time.perf_counter() - t0
        best = dt if best is None or dt < best else best
    assert back == sol.direction

    blob = canonical_json({"tau": element_data(sol.tau),
                           "residual": element_data(sol.residual)})
    print(json.dumps({
        "backend": kernel_backend(),
        "seconds": best,
        "monomials": len(sol.tau.support()),
        "sha256": hashlib.sha256(blob).hexdigest(),
    }))


def measure(order, repeat, pure):
    env = dict(os.environ)
    if pure:
        env["DGLA_PURE_PYTHON"] = "1"
    else:
        env.pop("DGLA_PURE_PYTHON", None)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__),
         "--child", "--order", str(order), "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=8,
                    help="truncation order for the universal solve (default 8)")
    ap.add_argument("--repeat", type=int, default=3,
                    help="timed repetitions, best-of (default 3)")
    ap.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = ap.parse_args()

    if args.child:
        run_child(args.order, args.repeat)
        return 0

    results = [measure(args.order, args.repeat, pure) for pure in (True, False)]
    if results[0]["sha256"] != results[1]["sha256"]:
        print("BACKEND MISMATCH: solutions differ", file=sys.stderr)
        return 1

    print("universal MC solve, 4 harmonic directions, order %d "
          "(%d tau monomials), best of %d:" %
          (args.order, results[0]["monomials"], args.repeat))
    for r in results:
        print("  %-8s  %8.3f s" % (r["backend"], r["seconds"]))
    if results[1]["backend"] == results[0]["backend"]:
        print("compiled extension unavailable; both runs used the fallback")
    else:
        print("speedup: %.2fx (identical output, sha256 %s...)" %
              (results[0]["seconds"] / results[1]["seconds"],
               results[0]["sha256"][:12]))
    return 0


if __name__ == "__main__":
    sys.exit(main())
