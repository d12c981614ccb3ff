"""Command line interface: ``maxac {bound,construct,analyze,search,catalog}``.

Exit codes: 0 success, 2 usage or invalid parameters, 3 unreadable input,
4 search budget exhausted without a find.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from . import families
from .bounds import (
    BoundConstraint,
    ac_upper_bound,
    certify_maximal,
    format_entry,
    format_table_csv,
    format_table_text,
    odd_diameter_exact_order,
)
from .catalog import (
    CatalogError,
    append_records,
    catalog_query,
    default_catalog_path,
    known_canonicals,
    make_record,
)
from .fields import NotPrimePowerError
from .graph import INF, Graph, decode_graph6, encode_graph6, write_graph6_file
from .iso import automorphism_group_order
from .search import SEED_MODES, SearchConfig, SearchConfigError, double_tree_completion, stochastic_search
from .spectra import adjacency_spectrum

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _fmt(x) -> str:
    return "inf" if x == INF else str(int(x))


# ---------------------------------------------------------------------------
# bound


def cmd_bound(args, out) -> int:
    if args.table:
        for kind in ("D", "g"):
            out.write(format_table_csv(kind) if args.csv else format_table_text(kind))
            if not args.csv and kind == "D":
                out.write("\n")
        return EXIT_OK
    if args.d is None or (args.diameter is None and args.girth is None):
        raise UsageError("bound needs -d and one of --diameter/--girth (or --table)")
    try:
        if args.diameter is not None:
            c = BoundConstraint.diameter(args.d, args.diameter)
        else:
            c = BoundConstraint.girth(args.d, args.girth)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    r = ac_upper_bound(c)
    if args.csv:
        out.write("d,constraint,theta,lambda,method\n")
        out.write(f"{c.d},{c.label},{r.theta:.12f},{r.lam:.12f},{r.method}\n")
        return EXIT_OK
    out.write(f"{format_entry(r.lam)}\n")
    out.write(f"d={c.d} {c.label} kind={c.kind.value} K={c.K}\n")
    out.write(f"theta={r.theta:.12f} lambda={r.lam:.12f} method={r.method}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# construct

FAMILY_CONSTRAINT = {
    "complete": lambda d: BoundConstraint.girth(d, 3),
    "bipartite": lambda d: BoundConstraint.girth(d, 4),
    "modified-bipartite": lambda d: BoundConstraint.diameter(d, 3),
    "pg": lambda d: BoundConstraint.girth(d, 6),
    "pg-minus": lambda d: BoundConstraint.diameter(d, 4),
}


def _build_family(args) -> Graph:
    fam = args.family
    if fam in ("pg", "pg-minus"):
        if args.q is None:
            raise UsageError(f"{fam} needs -q")
        return families.FAMILIES[fam](args.q)
    if args.d is None:
        raise UsageError(f"{fam} needs -d")
    if fam == "bethe-tree":
        if args.levels is None:
            raise UsageError("bethe-tree needs -K")
        return families.bethe_tree(args.levels, args.d, rooted_at=args.rooted)
    return families.FAMILIES[fam](args.d)


def _summary(g: Graph, c: BoundConstraint | None) -> dict:
    deg = g.regular_degree()
    info = {"n": g.n, "m": g.m, "degree": deg}
    if c is None:
        from .graph import metrics

        mt = metrics(g)
        info.update(girth=_fmt(mt.girth), diameter=_fmt(mt.diameter))
        return info
    rep = certify_maximal(g, c)
    info.update(rep.to_dict())
    return info


def cmd_construct(args, out) -> int:
    try:
        g = _build_family(args)
    except NotPrimePowerError as exc:
        raise UsageError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    c = None
    deg = g.regular_degree()
    if args.constraint:
        c = BoundConstraint.parse(deg or 3, args.constraint)
    elif args.family in FAMILY_CONSTRAINT and deg is not None and deg >= 3:
        c = FAMILY_CONSTRAINT[args.family](deg)
    if args.out:
        write_graph6_file(args.out, [g])
    else:
        out.write(encode_graph6(g) + "\n")
    info = _summary(g, c)
    line = f"{args.family}: n={g.n} d={deg}"
    if c is not None:
        line += f" girth={_fmt(info['girth'] if info['girth'] is not None else INF)}"
        line += f" diameter={_fmt(info['diameter'] if info['diameter'] is not None else INF)}"
        line += f" AC={info['ac']:.6f} bound={info['bound']:.6f}"
        out.write(line + "\n")
        out.write(f"attained: {str(info['attained']).lower()} ({_constraint_words(c)})\n")
    else:
        out.write(line + f" girth={info['girth']} diameter={info['diameter']}\n")
    return EXIT_OK


def _constraint_words(c: BoundConstraint) -> str:
    return ("diameter " if c.kind.is_diameter else "girth ") + str(c.value)


# ---------------------------------------------------------------------------
# analyze


def _analyze_one(g: Graph, constraint: str | None, want_spectrum: bool) -> dict:
    deg = g.regular_degree()
    info: dict = {"graph6": encode_graph6(g), "n": g.n, "m": g.m, "degree": deg}
    c = None
    if constraint:
        c = BoundConstraint.parse(deg if deg and deg >= 3 else 3, constraint)
    if c is not None:
        info["certification"] = certify_maximal(g, c).to_dict()
        info["ac"] = info["certification"]["ac"]
        info["girth"] = info["certification"]["girth"]
        info["diameter"] = info["certification"]["diameter"]
    else:
        from .graph import metrics
        from .spectra import DisconnectedGraphError, algebraic_connectivity

        mt = metrics(g)
        info["girth"] = None if mt.girth == INF else int(mt.girth)
        info["diameter"] = None if mt.diameter == INF else int(mt.diameter)
        try:
            info["ac"] = algebraic_connectivity(g)
        except DisconnectedGraphError:
            info["ac"] = 0.0
    if want_spectrum:
        info["spectrum"] = [[round(v, 9), k] for v, k in adjacency_spectrum(g).grouped()]
    info["aut_order"] = automorphism_group_order(g)
    return info


def cmd_analyze(args, out) -> int:
    try:
        with open(args.file) as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(f"error: cannot read {args.file}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    failures = 0
    results = []
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text:
            continue
        try:
            g = decode_graph6(text)
        except ValueError as exc:
            failures += 1
            print(f"{args.file}:{lineno}: parse error: {exc}", file=sys.stderr)
            continue
        try:
            info = _analyze_one(g, args.constraint, not args.no_spectrum)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        info["line"] = lineno
        results.append(info)
        if not args.json:
            _print_analysis(info, out)
    if args.json:
        json.dump(results, out, indent=2)
        out.write("\n")
    return EXIT_INPUT if failures else EXIT_OK


def _print_analysis(info: dict, out) -> None:
    g_ = "inf" if info["girth"] is None else info["girth"]
    D_ = "inf" if info["diameter"] is None else info["diameter"]
    out.write(f"line {info['line']}: n={info['n']} m={info['m']} d={info['degree']} girth={g_} diameter={D_}"
              f" AC={info['ac']:.9f} aut={info['aut_order']}\n")
    if "certification" in info:
        rep = info["certification"]
        out.write(f"  {rep['constraint']}: bound={rep['bound']:.9f} attained={str(rep['attained']).lower()}")
        if rep["structure_ok"] is not None:
            out.write(f" structure_ok={str(rep['structure_ok']).lower()}")
        out.write("\n")
        for note in rep["notes"]:
            out.write(f"  note: {note}\n")
    if "spectrum" in info:
        parts = [f"{v:.6f}^{k}" if k > 1 else f"{v:.6f}" for v, k in info["spectrum"]]
        out.write("  spectrum: " + " ".join(parts) + "\n")


# ---------------------------------------------------------------------------
# search


def _search_levels(args) -> int | None:
    if args.levels is not None:
        return args.levels
    if args.constraint:
        c = BoundConstraint.parse(args.d, args.constraint)
        if c.kind.value == "odd-diameter":
            return c.K
    for K in range(2, 40):
        if odd_diameter_exact_order(args.d, K) == args.n:
            return K
        if odd_diameter_exact_order(args.d, K) > args.n:
            break
    return None


def _run_one(cfg: SearchConfig):
    return stochastic_search(cfg)


def cmd_search(args, out) -> int:
    seed_mode = args.seed_mode
    levels = _search_levels(args) if seed_mode == "double-tree" else args.levels
    girth_floor = args.girth
    if girth_floor is None:
        # conjectured girth of odd-diameter maximal graphs, as a heuristic only
        girth_floor = 2 * levels if seed_mode == "double-tree" and levels else 3
    try:
        constraint = BoundConstraint.parse(args.d, args.constraint) if args.constraint else None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.mode == "exhaustive":
        if seed_mode != "double-tree" or levels is None:
            raise UsageError("exhaustive mode needs --seed-mode double-tree with a resolvable K")
        stream = double_tree_completion(args.d, levels, girth_floor, mode="exhaustive")
        found = list(stream)
        status_found = bool(found)
        provenance = f"double-tree exhaustive d={args.d} K={levels} g>={girth_floor}"
    else:
        base = SearchConfig(
            n=args.n, d=args.d, min_girth=girth_floor, seed_mode=seed_mode, levels=levels,
            rng_seed=args.rng_seed, stall_window=args.stall_window, k_max=args.k_max,
            max_iterations=args.max_iterations, time_limit=args.time_limit,
            wrap_escalation=not args.no_wrap, checkpoint=args.checkpoint, progress_every=args.progress,
        )
        try:
            base.validate()
        except SearchConfigError as exc:
            raise UsageError(str(exc)) from None
        seed0 = base.effective_seed()
        print(f"config={base.digest()} rng_seed={seed0} runs={args.runs}", file=sys.stderr)
        cfgs = [replace(base, rng_seed=seed0 + i) for i in range(args.runs)]
        if args.workers > 1 and len(cfgs) > 1:
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                outcomes = list(pool.map(_run_one, cfgs))
        else:
            outcomes = [_run_one(c) for c in cfgs]
        for o in outcomes:
            print(f"seed={o.seed} status={o.status} iterations={o.iterations} restarts={o.restarts} "
                  f"best={o.best_edgecount} time={o.wall_time:.2f}s", file=sys.stderr)
        found = [o.graph for o in outcomes if o.found]
        status_found = bool(found)
        provenance = f"stochastic config={base.digest()}"
    if not status_found:
        out.write("no graph found within budget\n")
        return EXIT_BUDGET
    if constraint is None:
        for g in found:
            out.write(encode_graph6(g) + "\n")
        return EXIT_OK
    from .search import verify_and_emit

    catalog = args.catalog or default_catalog_path()
    existing = known_canonicals(catalog)
    new = [r for r in verify_and_emit(found, constraint, provenance) if r.canonical not in existing]
    append_records(catalog, new)
    for r in new:
        out.write(f"{r.graph6} n={r.n} {constraint.label} AC={r.ac:.9f} aut={r.aut_order}\n")
    out.write(f"{len(found)} graph(s) found, {len(new)} new attaining record(s) appended to {catalog}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# catalog


def cmd_catalog(args, out) -> int:
    path = args.path or default_catalog_path()
    attained = None
    if args.attained:
        attained = True
    elif args.not_attained:
        attained = False
    try:
        recs = catalog_query(path, d=args.d, D=args.diameter, g=args.girth, attained=attained,
                             n_min=args.n_min, n_max=args.n_max)
    except CatalogError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        out.write(json.dumps([json.loads(r.to_json()) for r in recs], indent=2) + "\n")
    else:
        for r in recs:
            out.write(f"{r.graph6} n={r.n} d={r.d} girth={r.girth} diameter={r.diameter} AC={r.ac:.9f} "
                      f"bound={r.bound:.9f} attained={str(r.attained).lower()} aut={r.aut_order} "
                      f"[{r.provenance}]\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="maxac", description="Algebraic connectivity bounds and maximal regular graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="AC upper bound for a degree and diameter or girth")
    b.add_argument("-d", type=int, help="degree")
    grp = b.add_mutually_exclusive_group()
    grp.add_argument("--diameter", "-D", type=int)
    grp.add_argument("--girth", "-g", type=int)
    b.add_argument("--table", action="store_true", help="print both grids (D, g = 3..13, d = 3..11)")
    b.add_argument("--csv", action="store_true", help="CSV output")

    c = sub.add_parser("construct", help="build a graph from a known family")
    c.add_argument("family", choices=sorted(families.FAMILIES))
    c.add_argument("-q", type=int, help="field order for pg / pg-minus")
    c.add_argument("-d", type=int, help="degree")
    c.add_argument("-K", dest="levels", type=int, help="levels for bethe-tree")
    c.add_argument("--rooted", choices=("vertex", "edge"), default="vertex")
    c.add_argument("--constraint", help="certify against D=<int> or g=<int> instead of the family default")
    c.add_argument("--out", help="graph6 output file (default: stdout)")

    a = sub.add_parser("analyze", help="metrics, spectrum, AC and certification for a graph6 file")
    a.add_argument("file")
    a.add_argument("--constraint", help="D=<int> or g=<int>")
    a.add_argument("--json", action="store_true")
    a.add_argument("--no-spectrum", action="store_true")

    s = sub.add_parser("search", help="stochastic or double-tree search, appending certified finds")
    s.add_argument("-n", type=int, required=True)
    s.add_argument("-d", type=int, required=True)
    s.add_argument("--girth", type=int, help="girth floor (default 3, or 2K with double-tree)")
    s.add_argument("--seed-mode", choices=SEED_MODES, default="empty")
    s.add_argument("--levels", "-K", type=int)
    s.add_argument("--mode", choices=("stochastic", "exhaustive"), default="stochastic")
    s.add_argument("--constraint", help="certify finds against D=<int> or g=<int>")
    s.add_argument("--max-iterations", type=int, default=10**6)
    s.add_argument("--time-limit", type=float)
    s.add_argument("--rng-seed", type=int)
    s.add_argument("--runs", type=int, default=1)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--stall-window", type=int, default=2000)
    s.add_argument("--k-max", type=int, default=8)
    s.add_argument("--no-wrap", action="store_true", help="hold k at k_max instead of resetting it")
    s.add_argument("--checkpoint", help="graph6 file receiving best-so-far graphs")
    s.add_argument("--progress", type=int, default=0, help="progress line every N iterations")
    s.add_argument("--catalog", help="catalog path (default: $MAXAC_CATALOG or ./maxac_catalog.jsonl)")

    k = sub.add_parser("catalog", help="query the catalog")
    k.add_argument("path", nargs="?")
    k.add_argument("-d", type=int)
    k.add_argument("--diameter", "-D", type=int)
    k.add_argument("--girth", "-g", type=int)
    att = k.add_mutually_exclusive_group()
    att.add_argument("--attained", action="store_true")
    att.add_argument("--not-attained", action="store_true")
    k.add_argument("--n-min", type=int)
    k.add_argument("--n-max", type=int)
    k.add_argument("--json", action="store_true")
    return p


COMMANDS = {
    "bound": cmd_bound,
    "construct": cmd_construct,
    "analyze": cmd_analyze,
    "search": cmd_search,
    "catalog": cmd_catalog,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"maxac {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
