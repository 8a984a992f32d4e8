"""Command-line entry point: ``simplexnet {complex,centrality,si,mine,reproduce}``.

Exit codes: 0 success, 1 usage or configuration error, 2 data or parse
error, 3 numerical non-convergence. Every subcommand validates its whole
configuration before computing, and output is written only once the result
is complete.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import centrality as cen
from .complex import ComplexError, Metric, SimplicialComplex, build_clique_complex, build_vietoris_rips
from .epidemic import ROUNDING, SIError, params_from_graph, run
from .io import ParseError, read_edge_list, read_feature_table, read_patterns, read_point_cloud, read_targets
from .mining import OPS, MiningError, QualitySpec, evaluate_pattern_set, scan_thresholds
from .reproduce import FAIL, SKIP, SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3
CONGRESS_EDGES_ENV = "SIMPLEXNET_CONGRESS_EDGES"
TABLE_DECIMALS = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _existing(path: str | None, flag: str) -> Path | None:
    if path is None:
        return None
    p = Path(path)
    if not p.exists() or p.is_dir():
        raise UsageError(f"{flag}: no such file {path!r}")
    return p


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


# ---------------------------------------------------------------- input

def _check_input(args):
    if (args.edges is None) == (args.points is None):
        raise UsageError("give exactly one of --edges or --points")
    if args.points is not None:
        if args.radius is None:
            raise UsageError("--points needs --radius")
        if args.radius <= 0:
            raise UsageError(f"--radius must be positive, got {args.radius}")
        if Metric.parse(args.metric) in (Metric.EXCHANGE_SIZE, Metric.EXCHANGE_FLAG) and args.exchanges is None:
            raise UsageError(f"metric {args.metric} needs --exchanges")
    elif args.exchanges is not None or args.radius is not None:
        raise UsageError("--exchanges and --radius apply to --points input only")
    if args.max_dim is not None and args.max_dim < 0:
        raise UsageError(f"--max-dim must be non-negative, got {args.max_dim}")
    _existing(args.edges, "--edges")
    _existing(args.points, "--points")
    _existing(args.exchanges, "--exchanges")


def _load_complex(args) -> SimplicialComplex:
    if args.edges is not None:
        return build_clique_complex(read_edge_list(args.edges), args.max_dim)
    pc = read_point_cloud(args.points, args.exchanges)
    return build_vietoris_rips(pc, Metric.parse(args.metric), args.radius, args.max_dim)


# ---------------------------------------------------------------- subcommands

def cmd_complex(args) -> str:
    _check_input(args)
    c = _load_complex(args)
    if args.format == "json":
        return json.dumps(
            {"dim": c.dim, "f_vector": list(c.f_vector()), "facets": len(c.facets)}, indent=2
        ) + "\n"
    return f"dim {c.dim}; f-vector {c.f_vector()}\nfacets {len(c.facets)}\n"


def _centrality_jobs(args) -> list[tuple[str, int | None]]:
    jobs = []
    for m in args.measure:
        if m.endswith("-max"):
            jobs.append((m, None))
        else:
            if not args.p:
                raise UsageError(f"measure {m!r} needs --p")
            jobs += [(m, p) for p in args.p]
    return jobs


def _check_jobs(c: SimplicialComplex, jobs):
    # degree and closeness are only defined up to the complex dimension;
    # the (p,p) and eigenvector measures are zero beyond it
    bad = []
    for m, p in jobs:
        if p is None:
            continue
        if p < 1:
            bad.append(f"{m} at p={p} (p must be >= 1)")
        elif m in ("degree", "closeness") and p > c.dim:
            bad.append(f"{m} at p={p} (complex has dimension {c.dim})")
    if bad:
        raise UsageError("invalid measure/p combinations: " + "; ".join(bad))


def cmd_centrality(args) -> str:
    _check_input(args)
    jobs = _centrality_jobs(args)
    c = _load_complex(args)
    _check_jobs(c, jobs)
    reports = [
        cen.centrality_report(c, m, p, args.variant, args.tolerance, args.max_iterations) for m, p in jobs
    ]
    if args.format == "json":
        return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"
    lines = ["vertex,measure,p,value"]
    for r in reports:
        decimals = None
        if args.table:
            decimals = 0 if r.measure.startswith("degree") else TABLE_DECIMALS
        lines += r.to_csv(decimals).splitlines()[1:]
    return "\n".join(lines) + "\n"


def cmd_si(args) -> str:
    if args.edges is None:
        raise UsageError("si needs --edges")
    if args.seed is None:
        raise UsageError("si is stochastic; --seed is required")
    if args.steps < 1:
        raise UsageError(f"--steps must be at least 1, got {args.steps}")
    _existing(args.edges, "--edges")
    g = read_edge_list(args.edges)
    try:
        params = params_from_graph(g, args.g0, args.prob, r=args.r, rounding=args.rounding)
    except SIError as e:
        raise UsageError(str(e)) from None
    states = run(g, params, args.steps, rng_seed=args.seed)
    records = [s.to_record(params) for s in states]
    if args.format == "csv":  # si defaults to json
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "infectious_ids", "g_expected", "shortfall"])
        for rec in records:
            ids = " ".join(map(str, rec["infectious_ids"]))
            w.writerow([rec["t"], ids, f"{rec['g_expected']:.6g}", rec["shortfall"]])
        return buf.getvalue()
    return json.dumps(records, indent=2) + "\n"


def cmd_mine(args) -> str:
    if args.features is None or args.labels is None:
        raise UsageError("mine needs --features and --labels")
    if (args.patterns is None) == (args.scan is None):
        raise UsageError("give exactly one of --patterns or --scan")
    if args.scan is not None and args.op is None:
        raise UsageError("--scan needs --op")
    _existing(args.features, "--features")
    _existing(args.labels, "--labels")
    _existing(args.patterns, "--patterns")
    tbl = read_feature_table(args.features)
    targets = read_targets(args.labels)
    if args.complements:
        targets += [t.complement() for t in targets]
    if args.target:
        by_name = {t.name: t for t in targets}
        missing = [n for n in args.target if n not in by_name]
        if missing:
            raise UsageError(f"unknown target(s) {missing}; available: {sorted(by_name)}")
        targets = [by_name[n] for n in args.target]
    spec = QualitySpec(args.a)
    if args.scan is not None:
        rows = []
        for t in targets:
            res = scan_thresholds(tbl, args.scan, args.op, t, spec)
            ev = evaluate_pattern_set(tbl, [res.pattern], [t], spec)[0]
            row = ev.row()
            row["degenerate"] = res.degenerate
            rows.append(row)
        rows.sort(key=lambda r: -float(r["quality"]))
    else:
        patterns = read_patterns(args.patterns)
        by_name = {t.name: t for t in targets}
        evs = []
        for pat, tname in patterns:
            if tname is not None and tname not in by_name:
                raise UsageError(f"pattern {pat} names unknown target {tname!r}")
            ts = [by_name[tname]] if tname is not None else targets
            evs += evaluate_pattern_set(tbl, [pat], ts, spec)
        evs.sort(key=lambda e: -float(e.quality))
        rows = [e.row() for e in evs]
    if args.format == "json":
        return json.dumps(rows, indent=2) + "\n"
    fields = ["pattern", "target", "support", "share", "quality", "quality_exact"]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def cmd_reproduce(args) -> tuple[str, int]:
    names = list(SUITES) if args.fixture == "all" else [args.fixture]
    if names[0] not in SUITES:
        raise UsageError(f"unknown fixture {args.fixture!r}; available: {', '.join(SUITES)}, all")
    edges = args.congress_edges or os.environ.get(CONGRESS_EDGES_ENV)
    edges = _existing(edges, "--congress-edges")
    out, failed, skipped, total = [], 0, 0, 0
    for name in names:
        out.append(f"== {name}")
        for chk in run_suite(name, congress_edges=edges):
            out.append(chk.line())
            total += 1
            failed += chk.status == FAIL
            skipped += chk.status == SKIP
    out.append(f"{total - failed - skipped} passed, {failed} failed, {skipped} skipped")
    return "\n".join(out) + "\n", EXIT_DATA if failed else EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--edges", help="edge list, one 'u,v' per line")
    shared.add_argument("--points", help="point cloud CSV 'id,x1,...,xn'")
    shared.add_argument("--exchanges", help="exchange CSV 'u,v,size' for metrics d4/d5")
    shared.add_argument("--metric", default="d1", choices=[m.value for m in Metric])
    shared.add_argument("--radius", type=float, help="Rips radius (points input)")
    shared.add_argument("--max-dim", type=int, help="cap on simplex dimension")
    shared.add_argument("--out", help="write output here instead of stdout")
    shared.add_argument("--format", choices=["csv", "json"], help="default csv (json for si)")
    shared.add_argument("--seed", type=int, help="random seed (required by si)")

    ap = _Parser(prog="simplexnet", description="Simplicial complexes, centralities, SI labelings and pattern mining.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("complex", parents=[shared], help="build a complex and print its f-vector")

    pc = sub.add_parser("centrality", parents=[shared], help="per-vertex centrality report")
    pc.add_argument("--measure", action="append", choices=cen.MEASURES, required=True)
    pc.add_argument("--p", type=_int_list, default=[], help="comma-separated dimensions, e.g. 1,2,3")
    pc.add_argument("--variant", choices=[v.value for v in cen.ClosenessVariant], default="reciprocal")
    pc.add_argument("--table", action="store_true", help="round like the printed tables")
    pc.add_argument("--tolerance", type=float, default=1e-10)
    pc.add_argument("--max-iterations", type=int, default=10_000)

    ps = sub.add_parser("si", parents=[shared], help="seeded SI spreading trajectory")
    ps.add_argument("--g0", type=int, required=True, help="initial number of attackers")
    ps.add_argument("--p", dest="prob", type=float, required=True, help="infection probability")
    ps.add_argument("--r", type=float, help="explicit rate; defaults to p * mean degree / N")
    ps.add_argument("--steps", type=int, default=1)
    ps.add_argument("--rounding", choices=sorted(ROUNDING), default="round")

    pm = sub.add_parser("mine", parents=[shared], help="evaluate or scan threshold patterns")
    pm.add_argument("--features", help="CSV 'individual,feature1,...'")
    pm.add_argument("--labels", help="CSV 'individual,label[,label2...]'")
    pm.add_argument("--patterns", help="JSON pattern list")
    pm.add_argument("--scan", metavar="FEATURE", help="search the best threshold on FEATURE")
    pm.add_argument("--op", choices=sorted(OPS))
    pm.add_argument("--target", action="append", help="restrict to these target names")
    pm.add_argument("--complements", action="store_true", help="also mine each label's complement")
    pm.add_argument("--a", type=float, default=0.0, help="quality exponent (0 gain, 0.5 binomial, 1 PS)")

    pr = sub.add_parser("reproduce", help="run an embedded reproduction suite")
    pr.add_argument("fixture", help=f"one of {', '.join(SUITES)}, or 'all'")
    pr.add_argument("--congress-edges", help=f"optional congress edge list (or ${CONGRESS_EDGES_ENV})")
    pr.add_argument("--out")
    return ap


COMMANDS = {
    "complex": cmd_complex,
    "centrality": cmd_centrality,
    "si": cmd_si,
    "mine": cmd_mine,
}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:  # argparse exits on usage errors and --help
        return e.code
    code = EXIT_OK
    try:
        if args.command == "reproduce":
            text, code = cmd_reproduce(args)
        else:
            text = COMMANDS[args.command](args)
    except UsageError as e:
        print(f"simplexnet: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except cen.ConvergenceError as e:
        print(f"simplexnet: no convergence: {e}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ParseError, ComplexError, MiningError, SIError, OSError) as e:
        print(f"simplexnet: data error: {e}", file=sys.stderr)
        return EXIT_DATA
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
