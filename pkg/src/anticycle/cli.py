"""Command-line front end.

Exit codes: 0 success (or FREE), 2 input or configuration error, 3 witness
found, 4 inconclusive because a cap was hit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import PhiTableError
from .covering import count_z_covering, verify_finalcount_bound
from .enumeration import count_induced_paths
from .experiment import ExperimentSpec, fit_exponent, read_csv_rows, run_experiment
from .generators import GENERATORS, GenParams, generate
from .graph import CapExceeded, GraphInputError, Multigraph
from .graphio import format_graph, parse_graph, parse_multigraph, parse_vertex_list, read_text
from .hitting import pack_or_cover
from .pipeline import run_pipeline
from .plantation import make_plantation
from .recognizer import DEFAULT_MAX_CYCLES, is_2O_free_via_paths, is_sO_free

EXIT_OK, EXIT_INPUT, EXIT_WITNESS, EXIT_CAP = 0, 2, 3, 4


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(lines))


def _graph(args):
    return parse_graph(read_text(args.file), args.format)


def _z(args) -> list[int]:
    return parse_vertex_list(read_text(args.z))


def cmd_recognize(args) -> int:
    g = _graph(args)
    if args.via_paths:
        if args.s != 2:
            raise GraphInputError("--via-paths only decides s = 2")
        res = is_2O_free_via_paths(g, args.max_cycles)
    else:
        res = is_sO_free(g, args.s, args.max_cycles)
    if res.free:
        _emit(args, {"verdict": "FREE"}, ["FREE"])
        return EXIT_OK
    cycles = [list(c) for c in res.witness.cycles]
    _emit(args, {"verdict": "WITNESS", "cycles": cycles}, ["WITNESS"] + [" ".join(map(str, c)) for c in cycles])
    return EXIT_WITNESS


def cmd_count_paths(args) -> int:
    g = _graph(args)
    n = count_induced_paths(g, ordered=args.ordered, max_len=args.max_len)
    _emit(args, {"count": n, "ordered": args.ordered}, [str(n)])
    return EXIT_OK


def cmd_count_covering(args) -> int:
    g = _graph(args)
    p = make_plantation(g, _z(args), args.s)
    if args.check_bound:
        fc = verify_finalcount_bound(p)
        _emit(
            args,
            {"count": fc.n, "bound": fc.bound, "holds": fc.holds},
            [str(fc.n), f"bound {fc.bound}", "holds" if fc.holds else "VIOLATED"],
        )
        return EXIT_OK if fc.holds else 1
    n = count_z_covering(p)
    _emit(args, {"count": n}, [str(n)])
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = _graph(args)
    report = run_pipeline(g, _z(args), args.s, covering_cap=args.covering_cap)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(report.to_text())
    if report.verdict == "WITNESS":
        return EXIT_WITNESS
    return EXIT_OK if report.verdict == "PASS" else 1


def cmd_hitting_set(args) -> int:
    text = read_text(args.file)
    if args.format == "graph6":
        h = Multigraph.from_graph(parse_graph(text, "graph6"))
    else:
        h = parse_multigraph(text)
    res = pack_or_cover(h, args.s)
    if res.is_packing:
        cycles = [list(c.vertices) for c in res.packing]
        _emit(args, {"result": "PACKING", "cycles": cycles}, ["PACKING"] + [" ".join(map(str, c)) for c in cycles])
        return EXIT_WITNESS
    cover = sorted(res.cover)
    _emit(args, {"result": "COVER", "vertices": cover}, ["COVER", " ".join(map(str, cover))])
    return EXIT_OK


def cmd_generate(args) -> int:
    params = GenParams(n=args.n, p=args.p, k=args.k, s=args.s, length=args.length)
    graphs = [generate(args.generator, params, args.seed, i) for i in range(args.count)]
    if args.json:
        print(json.dumps([{"n": g.n, "edges": [list(e) for e in g.edges]} for g in graphs]))
    else:
        sep = "\n" if args.format == "edgelist" else ""
        sys.stdout.write(sep.join(format_graph(g, args.format) for g in graphs))
    return EXIT_OK


def cmd_experiment(args) -> int:
    spec = ExperimentSpec(
        generator=args.generator,
        sizes=args.sizes,
        seed=args.seed,
        trials=args.trials,
        s=args.s,
        p=args.p,
        k=args.k,
        length=args.length,
        max_cycles=args.max_cycles,
        covering_cap=args.covering_cap,
        run_pipeline=not args.no_pipeline,
        timing=args.timing,
        workers=args.workers,
    )
    text = run_experiment(spec, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fit(args) -> int:
    fit = fit_exponent(read_csv_rows(read_text(args.csv)), args.x, args.y, args.x_transform)
    _emit(
        args,
        {"slope": fit.slope, "intercept": fit.intercept, "residual": fit.residual, "points": fit.points},
        [f"slope {fit.slope:.6f}", f"residual {fit.residual:.6g}", f"points {fit.points}"],
    )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    ap = argparse.ArgumentParser(prog="anticycle", description="Anticomplete cycle packings, induced paths and plantations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[common], help="decide whether s anticomplete cycles exist")
    p.add_argument("file")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    p.add_argument("--via-paths", action="store_true", help="use the induced-path route (s = 2 only)")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("count-paths", parents=[common], help="count induced paths")
    p.add_argument("file")
    p.add_argument("--ordered", action="store_true")
    p.add_argument("--max-len", type=int)
    p.set_defaults(func=cmd_count_paths)

    p = sub.add_parser("count-covering", parents=[common], help="count z-covering paths")
    p.add_argument("file")
    p.add_argument("--z", required=True, help="file of whitespace-separated vertex ids")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--check-bound", action="store_true")
    p.set_defaults(func=cmd_count_covering)

    p = sub.add_parser("reduce", parents=[common], help="run the reduction pipeline on (G, Z)")
    p.add_argument("file")
    p.add_argument("--z", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--covering-cap", type=int, default=20, help="skip covering counts past this many z-edges")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("hitting-set", parents=[common], help="disjoint cycles or a minimum cycle cover of a multigraph")
    p.add_argument("file")
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_hitting_set)

    p = sub.add_parser("generate", parents=[common], help="print seeded random graphs")
    p.add_argument("generator", choices=GENERATORS)
    p.add_argument("--n", type=int, default=16)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--length", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", parents=[common], help="run a seeded batch and write CSV")
    p.add_argument("--generator", choices=GENERATORS, required=True)
    p.add_argument("--sizes", type=int, nargs="+", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--p", type=float, default=0.2)
    p.add_argument("--k", type=int, default=3)
    p.add_argument("--length", type=int, default=3)
    p.add_argument("--max-cycles", type=int, default=DEFAULT_MAX_CYCLES)
    p.add_argument("--covering-cap", type=int, default=16)
    p.add_argument("--no-pipeline", action="store_true")
    p.add_argument("--timing", action="store_true", help="fill wall_time (output no longer byte-stable)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("fit", parents=[common], help="log-log slope between two CSV columns")
    p.add_argument("csv")
    p.add_argument("--x", default="n")
    p.add_argument("--y", default="induced_paths")
    p.add_argument("--x-transform", choices=("log", "loglog"), default="log")
    p.set_defaults(func=cmd_fit)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapExceeded as e:
        print(f"INCONCLUSIVE: {e}", file=sys.stderr)
        if not getattr(args, "json", False):
            print("INCONCLUSIVE")
        else:
            print(json.dumps({"verdict": "INCONCLUSIVE", "cap": e.cap, "limit": e.limit}))
        return EXIT_CAP
    except (GraphInputError, PhiTableError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
