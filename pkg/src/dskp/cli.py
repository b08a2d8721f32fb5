"""``dskp`` command-line front end.

Exit codes: 0 = yes / success, 1 = no (or soundness mismatches), 2 = error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import pareto
from .bench import bench_rows, rows_to_csv
from .decomposition import parse_td
from .generators import FAMILIES, generate
from .instance import read_instance, write_instance
from .oracle import oracle_pareto
from .reductions import (RULES, check_reduction_soundness, reduce_dskp_to_bipartite, reduce_dskp_to_wcs,
                         reduce_ds_to_dskp, reduce_ds_to_kdskp, reduce_knapsack_to_star,
                         reduce_uds_to_minimal_dskp, write_circuit)
from .solve import ALGORITHMS, solve

log = logging.getLogger("dskp")

VERIFY_LIMIT = 20
REDUCE_RULES = ("ds2dskp", "ds2kdskp", "bip", "star", "uds2min", "wcs")


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt(p) -> str:
    return f"({p.weight},{p.profit})"


def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    td = None
    if args.td:
        with open(args.td, "rb") as fh:
            td = parse_td(fh.read(), inst.graph)
    cover = None
    if args.vc is not None:
        cover = 0
        for v in args.vc:
            if not 0 <= v < inst.n:
                raise UsageError(f"--vc vertex {v} out of range")
            cover |= 1 << v
    front = solve(inst, args.algo, td=td, cover=cover, witness=True if args.witness else None, jobs=args.jobs)
    if args.verify and inst.n <= VERIFY_LIMIT and args.algo != "oracle":
        reference = oracle_pareto(inst)
        if reference != front:
            raise RuntimeError(f"--verify: {args.algo} frontier {front} differs from oracle {reference}")
    best = pareto.best_pair(front, inst.s)
    yes = best is not None and best.profit >= inst.d
    witness = None
    if best is not None and best.witness is not None:
        witness = [v for v in range(inst.n) if best.witness >> v & 1]

    if args.json:
        out = {"result": "yes" if yes else "no",
               "optimal": None if best is None else [best.weight, best.profit]}
        if args.pareto:
            out["pareto"] = front.points()
        if args.witness:
            out["witness"] = witness
        print(json.dumps(out))
    else:
        print(f"RESULT {'yes' if yes else 'no'}")
        print(f"OPTIMAL {_fmt(best) if best is not None else 'none'}")
        if args.pareto:
            print("PARETO " + " ".join(_fmt(p) for p in front) if front else "PARETO")
        if args.witness:
            print("WITNESS " + (" ".join(map(str, witness)) if witness is not None else "none"))
    return 0 if yes else 1


def cmd_gen(args) -> int:
    inst = generate(args.family, n=args.n, p=args.p, wmax=args.wmax, amax=args.amax,
                    seed=args.seed, s=args.s, d=args.d)
    _emit(write_instance(inst), args.output)
    return 0


def cmd_reduce(args) -> int:
    inst = read_instance(args.input)
    rule = args.rule
    if rule in ("ds2dskp", "ds2kdskp", "uds2min") and args.k is None:
        raise UsageError(f"--rule {rule} needs --k")
    if rule == "ds2dskp":
        out = write_instance(reduce_ds_to_dskp(inst.graph, args.k))
    elif rule == "ds2kdskp":
        out = write_instance(reduce_ds_to_kdskp(inst.graph, args.k))
    elif rule == "uds2min":
        out = write_instance(reduce_uds_to_minimal_dskp(inst.graph, args.k, args.paper_weights))
    elif rule == "bip":
        out = write_instance(reduce_dskp_to_bipartite(inst))
    elif rule == "star":
        if inst.graph.m:
            raise UsageError("--rule star reads knapsack items from an edgeless instance (vertex = item, s = b, d = q)")
        out = write_instance(reduce_knapsack_to_star(zip(inst.weights, inst.profits), inst.s, inst.d))
    else:
        out = write_circuit(reduce_dskp_to_wcs(inst, args.k))
    _emit(out, args.output)
    return 0


def cmd_bench(args) -> int:
    rows = bench_rows(args.family, args.n, args.s, algo=args.algo, repeat=args.repeat,
                      seed=args.seed, wmax=args.wmax, amax=args.amax, p=args.p)
    _emit(rows_to_csv(rows), args.output)
    return 0


def cmd_soundness(args) -> int:
    report = check_reduction_soundness(args.rule, args.trials, args.max_n, args.seed)
    print(report.summary())
    for m in report.mismatches:
        print(f"MISMATCH trial={m['trial']} source={m['source']} target={m['target']}")
        for line in m["instance"].splitlines():
            print(f"  {line}")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dskp", description="Exact solvers for Dominating Set Knapsack.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--algo", choices=ALGORITHMS, default="oracle")
    p.add_argument("--input", required=True)
    p.add_argument("--td", help="PACE .td decomposition for --algo treewidth")
    p.add_argument("--vc", type=_int_list, help="vertex cover for --algo vck, e.g. 0,3,5")
    p.add_argument("--pareto", action="store_true", help="print the whole frontier")
    p.add_argument("--witness", action="store_true", help="print the vertices of the optimal set")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verify", action="store_true", help=f"cross-check against the oracle when n <= {VERIFY_LIMIT}")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--amax", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--s", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", help="apply a reduction to an instance file")
    p.add_argument("--rule", choices=REDUCE_RULES, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--paper-weights", action="store_true",
                   help="uds2min: give the last vertex weight 0 instead of 1")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("bench", help="time a solver over a parameter sweep (CSV)")
    p.add_argument("--family", choices=FAMILIES, default="random-tree")
    p.add_argument("--n", type=_int_list, default=[1000, 2000, 4000])
    p.add_argument("--s", type=_int_list, default=[50])
    p.add_argument("--algo", choices=ALGORITHMS, default="tree")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--amax", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("soundness", help="check a reduction against brute force")
    p.add_argument("--rule", choices=RULES, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_soundness)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
