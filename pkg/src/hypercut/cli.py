"""Command-line front end: generate, solve, brute-force, and experiment,
with one seed governing all randomness and machine-readable reports."""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from fractions import Fraction

import numpy as np

from .errors import CapacityError, InputError
from .experiments import (
    colored_sampling_experiment,
    records_to_csv,
    scaling_to_csv,
    surplus_scaling_study,
)
from .generators import (
    gen_complete,
    gen_random_3graph,
    gen_random_linear_3graph,
)
from .hypergraph import (
    KCut,
    colored_pair_graph,
    dump_hypergraph,
    load_hypergraph,
    random_cut_coefficient,
)
from .oracle import brute_force_max_kcut
from .rounding import best_bipartition
from .solver import SamplePlan, solve_3cut_auto, solve_kcut
from .spectral import SymmetricMatrix


def _digest_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _report_dict(command: str, input_path: str, seed: int, params: dict, cut: KCut) -> dict:
    with open(input_path, "rb") as fh:
        input_digest = _digest_bytes(fh.read())
    report = {
        "command": command,
        "input_digest": input_digest,
        "seed": seed,
        "parameters": params,
        "assignment": list(cut.assignment),
        "cut_value": cut.cut_value,
        "surplus": str(cut.surplus),
        "surplus_float": float(cut.surplus),
        "notes": list(cut.notes),
    }
    body = json.dumps(report, sort_keys=True, separators=(",", ":"))
    report["digest"] = _digest_bytes(body.encode())
    return report


def _write_report(report: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _cmd_solve(args) -> int:
    h = load_hypergraph(args.file)
    k = args.k
    start = time.perf_counter()
    if args.oracle:
        cut = brute_force_max_kcut(h, k)
    elif h.r == 2 and k == 2:
        a = SymmetricMatrix.from_pair_graph(h)
        bp = best_bipartition(a, seed=args.seed)
        assign = [0 if s > 0 else 1 for s in bp.x]
        cut = KCut.from_assignment(h, assign, 2)
    elif h.r == 3 and k == 3:
        cut = solve_3cut_auto(h, SamplePlan(trials=args.trials, seed=args.seed))
    else:
        cut = solve_kcut(h, k, SamplePlan(trials=args.trials, seed=args.seed))
    wall = time.perf_counter() - start
    params = {"k": k, "trials": args.trials, "oracle": bool(args.oracle)}
    report = _report_dict("solve", args.file, args.seed, params, cut)
    if 2 <= k <= h.r:
        report["coefficient"] = str(random_cut_coefficient(h.r, k))
    report["wall_time_s"] = wall
    print(
        f"solve {args.file}: r={h.r} n={h.n} m={h.m} k={k} "
        f"cut={cut.cut_value} surplus={cut.surplus} ({float(cut.surplus):.4f})"
    )
    for note in cut.notes:
        print(f"note: {note}")
    if args.report:
        _write_report(report, args.report)
    return 0


def _cmd_gen(args) -> int:
    if args.kind == "random3":
        if args.p is None:
            raise InputError("gen random3 needs --p")
        h = gen_random_3graph(args.n, args.p, args.seed)
    elif args.kind == "linear3":
        if args.m is None:
            raise InputError("gen linear3 needs --m")
        h, shortfall = gen_random_linear_3graph(args.n, args.m, args.seed)
        if shortfall:
            print(f"warning: packed only {h.m} of {args.m} requested edges")
    elif args.kind == "complete":
        h = gen_complete(args.r, args.n)
    else:  # argparse choices already guard this
        raise InputError(f"unknown generator kind {args.kind!r}")
    dump_hypergraph(h, args.out)
    print(f"gen {args.kind}: wrote r={h.r} n={h.n} m={h.m} to {args.out}")
    return 0


def _cmd_experiment(args) -> int:
    if args.kind == "concentration":
        ss = np.random.SeedSequence(args.seed)
        gen_seed, samp_seed = (
            int(x & (2**63 - 1)) for x in ss.generate_state(2, dtype=np.uint64)
        )
        h = gen_random_3graph(args.n, args.edge_prob, gen_seed)
        g = colored_pair_graph(h)
        records = colored_sampling_experiment(g, args.p, args.reps, samp_seed)
        csv = records_to_csv(records)
        rate = sum(rec.passed for rec in records) / len(records)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(csv)
        print(
            f"experiment concentration: n={args.n} m={g.m} p={args.p} "
            f"reps={args.reps} pass_rate={rate:.3f} -> {args.out}"
        )
    elif args.kind == "scaling":
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
        rows = surplus_scaling_study(
            sizes, reps=args.reps, seed=args.seed, trials=args.trials
        )
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(scaling_to_csv(rows))
        print(f"experiment scaling: {len(rows)} rows -> {args.out}")
    else:
        raise InputError(f"unknown experiment kind {args.kind!r}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypercut",
        description="Large k-cuts of r-uniform multi-hypergraphs via spectral "
        "surplus machinery, with generators, an exhaustive oracle, and "
        "concentration experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a max-k-cut instance from a file")
    p_solve.add_argument("--file", required=True)
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("--trials", type=int, default=30)
    p_solve.add_argument("--seed", type=int, default=0)
    p_solve.add_argument("--oracle", action="store_true", help="exhaustive scan")
    p_solve.add_argument("--report", help="write a JSON report to this path")
    p_solve.add_argument("--threads", type=int, default=1, help="reserved; only 1")
    p_solve.set_defaults(func=_cmd_solve)

    p_gen = sub.add_parser("gen", help="generate an instance file")
    p_gen.add_argument("--kind", required=True, choices=["random3", "linear3", "complete"])
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--p", type=float, help="edge probability (random3)")
    p_gen.add_argument("--m", type=int, help="target edge count (linear3)")
    p_gen.add_argument("--r", type=int, default=3, help="uniformity (complete)")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_exp = sub.add_parser("experiment", help="run a measurement study")
    p_exp.add_argument("--kind", required=True, choices=["concentration", "scaling"])
    p_exp.add_argument("--n", type=int, default=40)
    p_exp.add_argument("--edge-prob", type=float, default=0.02)
    p_exp.add_argument("--p", type=float, default=1.0 / 3.0)
    p_exp.add_argument("--reps", type=int, default=100)
    p_exp.add_argument("--sizes", default="40,80,160")
    p_exp.add_argument("--trials", type=int, default=8)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--out", required=True)
    p_exp.set_defaults(func=_cmd_experiment)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 3


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
