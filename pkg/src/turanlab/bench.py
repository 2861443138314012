"""Timing comparison between the pure-Python and compiled search kernels.

Runs the same extremal searches through both backends, checks they return
identical results (edge counts and canonical witnesses), and prints a
small table. With no compiled extension available it still times the pure
backend so the numbers stay comparable across machines.
"""

from __future__ import annotations

import time

from turanlab import kernels
from turanlab.patterns import parse_family
from turanlab.search import branch_and_bound_ex


def _time_one(n: int, family, backend) -> tuple[float, object]:
    start = time.perf_counter()
    rec = branch_and_bound_ex(n, family, backend=backend)
    return time.perf_counter() - start, rec


def run_bench(sizes: str = "6,7,8", family_text: str = "C4") -> int:
    family = parse_family(family_text)
    n_values = [int(s) for s in sizes.split(",") if s.strip()]
    pure = kernels.load_backend("pure")
    compiled = kernels.load_backend("compiled")
    print(f"family {{{family}}}; active backend: {kernels.BACKEND}")
    header = f"{'n':>3}  {'pure (s)':>10}"
    if compiled is not None:
        header += f"  {'compiled (s)':>13}  {'speedup':>8}  {'agree':>5}"
    print(header)
    for n in n_values:
        t_pure, rec_pure = _time_one(n, family, pure)
        line = f"{n:>3}  {t_pure:>10.4f}"
        if compiled is not None:
            t_fast, rec_fast = _time_one(n, family, compiled)
            agree = (
                rec_pure.max_edges == rec_fast.max_edges
                and rec_pure.witness == rec_fast.witness
            )
            speed = t_pure / t_fast if t_fast > 0 else float("inf")
            line += f"  {t_fast:>13.4f}  {speed:>7.1f}x  {'yes' if agree else 'NO'}"
            if not agree:
                print(line)
                print(
                    f"backend mismatch at n={n}: "
                    f"pure {rec_pure.max_edges}/{rec_pure.witness} vs "
                    f"compiled {rec_fast.max_edges}/{rec_fast.witness}"
                )
                return 1
        line += f"   ex = {rec_pure.max_edges}"
        print(line)
    if compiled is None:
        print("compiled backend not available; built pure-only timings")
    return 0
