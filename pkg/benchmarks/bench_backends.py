#!/usr/bin/env python3
"""Benchmark the compiled sweep kernel against the pure-Python fallback.

Runs the same sweeps through both backends, checks that the reports agree,
and prints wall times plus speedups.  The sharded row exercises the compiled
kernel's GIL-free recursion across threads.

Usage: python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import time

from nmtri import engine
from nmtri.search import SearchSpec, run_search


def time_run(spec: SearchSpec, backend: str) -> tuple[float, dict]:
    t0 = time.perf_counter()
    rep = run_search(spec, backend=backend)
    return time.perf_counter() - t0, rep.comparable_dict()


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true",
                        help="drop the slowest rows")
    args = parser.parse_args()

    try:
        engine.get_kernel("cython")
    except ImportError:
        print("compiled backend unavailable; build it with "
              "`python setup.py build_ext --inplace`")
        return 1

    rows = [
        ("theorem n=5", SearchSpec("theorem", 5, 2)),
        ("theorem n=6", SearchSpec("theorem", 6, 2, budget=3 ** 15)),
        ("tight   n=6", SearchSpec("tight", 6, 2, budget=3 ** 15)),
        ("lemma   n=7", SearchSpec("lemma", 7, 1, budget=2 ** 21)),
        ("claims  n=5", SearchSpec("claims", 5, 2)),
        ("conj1 n=5 k=3", SearchSpec("conj1", 5, 3, budget=4 ** 10)),
    ]
    if not args.quick:
        rows.append(("claims  n=6", SearchSpec("claims", 6, 2, budget=3 ** 15)))

    print(f"{'sweep':<16}{'python':>10}{'cython':>10}{'speedup':>9}   agreement")
    for name, spec in rows:
        t_py, d_py = time_run(spec, "python")
        t_cy, d_cy = time_run(spec, "cython")
        ok = "OK" if d_py == d_cy else "MISMATCH"
        print(f"{name:<16}{t_py:>9.3f}s{t_cy:>9.3f}s{t_py / max(t_cy, 1e-9):>8.1f}x   {ok}")

    spec = SearchSpec("claims", 6, 2, budget=3 ** 15, shards=8)
    t_sh, d_sh = time_run(spec, "cython")
    base = SearchSpec("claims", 6, 2, budget=3 ** 15)
    t_1, d_1 = time_run(base, "cython")
    ok = "OK" if d_sh == d_1 else "MISMATCH"
    print(f"{'claims n=6 x8':<16}{'':>10}{t_sh:>9.3f}s"
          f"{t_1 / max(t_sh, 1e-9):>8.1f}x   {ok} (vs 1 shard, threads)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
