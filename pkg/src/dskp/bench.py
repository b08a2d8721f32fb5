"""Timing sweeps; rows are ``family,n,s,algo,millis,frontier_size``."""
from __future__ import annotations

import csv
import io
import time

from .generators import generate
from .solve import solve

FIELDS = ("family", "n", "s", "algo", "millis", "frontier_size")


def bench_rows(family: str, ns, ss, algo: str = "tree", repeat: int = 3, seed: int = 0,
               wmax: int = 10, amax: int = 10, p: float = 0.3) -> list[dict]:
    """Best-of-``repeat`` wall time for every (n, s) combination."""
    rows = []
    for n in ns:
        base = generate(family, n=n, p=p, wmax=wmax, amax=amax, seed=seed)
        for s in ss:
            inst = base.with_budget(s=s)
            best = None
            for _ in range(repeat):
                start = time.perf_counter()
                front = solve(inst, algo)
                elapsed = time.perf_counter() - start
                best = elapsed if best is None else min(best, elapsed)
            rows.append({
                "family": family, "n": n, "s": s, "algo": algo,
                "millis": round(best * 1000, 3), "frontier_size": len(front),
            })
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
