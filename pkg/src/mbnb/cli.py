"""Command-line front end: solve, bounds, generate, experiment, verify.

Exit status is 0 on success, 1 on invalid input and 2 when an invariant
check fails (a bug, or a counterexample to one of the proved results).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from . import checks
from .bounds import BOUNDS_COLUMNS, bounds_row, compute_bounds
from .experiment import PAPER_DEMO, PAPER_DEMO_SEED, render_report, run_experiment, run_on_instances
from .instances import (GeneratorConfig, InstanceError, format_instance_list, generate_instances,
                        instances_to_csv, parse_instance, parse_instance_list)
from .solver import InvariantViolation, export_tree, solve

EXIT_OK, EXIT_INVALID, EXIT_INVARIANT = 0, 1, 2


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = parse_instance(_read(args.instance))
    report = solve(inst, collect_tuples=args.tuples, export_tree=bool(args.tree), order=args.order)
    solution = "".join(map(str, report.optimal_solution))
    if args.format == "csv":
        text = ("S,L,c0,c1,optimal_value,solution\n"
                f"{report.node_count},{report.leaf_count},{report.c0_leaves},"
                f"{report.c1_leaves},{report.optimal_value},{solution}\n")
    else:
        text = (f"S = {report.node_count}\nL = {report.leaf_count}\n"
                f"c0 = {report.c0_leaves}\nc1 = {report.c1_leaves}\n"
                f"optimal_value = {report.optimal_value}\nsolution = {solution}\n")
    if args.tuples:
        zeros = sorted(map(str, report.zero_tuples))
        ones = sorted(map(str, report.one_tuples))
        text += "# leaf 0-tuples (canonical order)\n" + "".join(z + "\n" for z in zeros)
        text += "# leaf 1-tuples (canonical order)\n" + "".join(o + "\n" for o in ones)
    _emit(text, args.out)
    if args.tree:
        with open(args.tree, "w", encoding="utf-8") as fh:
            fh.write(export_tree(report))
    return EXIT_OK


def cmd_bounds(args) -> int:
    instances = parse_instance_list(_read(args.instance))
    reports = [compute_bounds(inst) for inst in instances]
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(BOUNDS_COLUMNS)
        w.writerows(bounds_row(r) for r in reports)
        text = buf.getvalue()
    else:
        text = "\n".join(
            " ".join(f"{k}={v or '-'}" for k, v in zip(BOUNDS_COLUMNS, bounds_row(r)))
            for r in reports) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def _config(args) -> GeneratorConfig:
    return GeneratorConfig(args.n, args.wmin, args.wmax, args.seed, args.count)


def cmd_generate(args) -> int:
    cfg = _config(args)
    instances = generate_instances(cfg)
    text = instances_to_csv(cfg, instances) if args.format == "csv" else format_instance_list(instances)
    _emit(text, args.out)
    return EXIT_OK


def cmd_experiment(args) -> int:
    if args.instances:
        report = run_on_instances(parse_instance_list(_read(args.instances)))
    else:
        if args.paper_demo:
            cfg = GeneratorConfig(master_seed=args.seed if args.seed is not None else PAPER_DEMO_SEED,
                                  **PAPER_DEMO)
        else:
            cfg = _config(args)
        report = run_experiment(cfg, jobs=args.jobs)
    _emit(render_report(report, args.format), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = []
    if args.lemmas:
        results += checks.lemma_suite(args.lemmas)
    if args.theorems:
        results += checks.check_theorems(min(args.theorems, 5))
    if args.tight:
        results.append(checks.check_tight_all_twos(args.tight))
        results.append(checks.check_tight_three_k(args.tight))
    if args.random:
        failures = []
        for cfg in checks.sweep_config(args.random, args.seed, args.random_max_n):
            for i in range(cfg.instance_count):
                failures += checks.check_random_instance(cfg, i)
        results.append(checks.CheckResult("random instances vs brute force and leaf-tuple properties",
                                          not failures, args.random, "; ".join(failures[:3])))
    for r in results:
        print(r.line())
    if args.probe_n7:
        s, inst = checks.probe_max_complexity(7, 6, args.probe_n7, args.seed)
        print(f"[INFO] n=7, t=6 probe over {args.probe_n7} trials: max S = {s} "
              f"(L = {(s + 1) // 2}); witness weights={inst.weights if inst else None} "
              f"C={inst.capacity if inst else None}")
    if not results and not args.probe_n7:
        print("nothing to verify; pass --lemmas, --theorems, --tight, --random or --probe-n7")
        return EXIT_INVALID
    return EXIT_OK if all(r.passed for r in results) else EXIT_INVARIANT


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mbnb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="run MBnB on one instance file")
    s.add_argument("instance", nargs="?", default="-")
    s.add_argument("--tuples", action="store_true", help="also list leaf 0-/1-tuples")
    s.add_argument("--tree", metavar="PATH", help="write the search tree as DOT")
    s.add_argument("--order", choices=("dfs", "bfs"), default="dfs")
    s.add_argument("--format", choices=("text", "csv"), default="text")
    s.add_argument("--out")
    s.set_defaults(func=cmd_solve)

    b = sub.add_parser("bounds", help="compute t, t', B1, B2, B3")
    b.add_argument("instance", nargs="?", default="-")
    b.add_argument("--format", choices=("text", "csv"), default="text")
    b.add_argument("--out")
    b.set_defaults(func=cmd_bounds)

    def generator_flags(q, seed_default=0):
        q.add_argument("--n", type=int, default=15)
        q.add_argument("--count", type=int, default=1000)
        q.add_argument("--seed", type=int, default=seed_default)
        q.add_argument("--wmin", type=int, default=1)
        q.add_argument("--wmax", type=int, default=100)
        q.add_argument("--out")

    g = sub.add_parser("generate", help="emit seeded random instances")
    generator_flags(g)
    g.add_argument("--format", choices=("csv", "text"), default="csv")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("experiment", help="solve a batch and compare the bounds")
    generator_flags(e, seed_default=None)
    e.add_argument("--format", choices=("csv", "md"), default="csv")
    e.add_argument("--jobs", type=int, default=1)
    e.add_argument("--paper-demo", action="store_true",
                   help=f"n=15, weights in [1,100], 1000 instances, seed {PAPER_DEMO_SEED}")
    e.add_argument("--instances", metavar="PATH", help="use instances from a file instead")
    e.set_defaults(func=cmd_experiment)

    v = sub.add_parser("verify", help="exhaustive and randomized property checks")
    v.add_argument("--lemmas", type=int, metavar="MAX_N")
    v.add_argument("--theorems", type=int, metavar="MAX_N")
    v.add_argument("--tight", type=int, metavar="MAX_N")
    v.add_argument("--random", type=int, metavar="COUNT")
    v.add_argument("--random-max-n", type=int, default=18)
    v.add_argument("--probe-n7", type=int, metavar="TRIALS")
    v.add_argument("--seed", type=int, default=2024)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "seed", 0) is None and args.command == "experiment" and not args.paper_demo:
        args.seed = 0
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except (InstanceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
