"""Command-line driver: ``s6quartics <subcommand> ...``; JSON lines on stdout."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from ..report import jsonable
from .registry import check_names, run_by_name, select
from .tables import TABLES, table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(records: Iterable[dict], json_path: str | None) -> list[dict]:
    """Print each record as one JSON line (and mirror to ``json_path``)."""
    out = []
    sink = open(json_path, "w", encoding="utf-8") if json_path else None
    try:
        for rec in records:
            line = json.dumps(jsonable(rec), sort_keys=True)
            print(line, flush=True)
            if sink:
                sink.write(line + "\n")
            out.append(rec)
    finally:
        if sink:
            sink.close()
    return out


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    try:
        checks = select(args.names)
    except KeyError as exc:
        raise UsageError(f"unknown check name(s): {exc.args[0]}") from None
    names = [c.name for c in checks]
    if args.jobs > 1:
        def stream():
            with ProcessPoolExecutor(max_workers=args.jobs) as pool:
                futures = [pool.submit(run_by_name, n, args.seed) for n in names]
                for f in futures:  # registry order, whatever the completion order
                    yield f.result()
    else:
        def stream():
            for n in names:
                yield run_by_name(n, args.seed)
    records = _emit(stream(), args.json)
    failed = [r["name"] for r in records if r["status"] != "pass"]
    print(f"{len(records) - len(failed)}/{len(records)} checks passed"
          + (f"; failed: {', '.join(failed)}" if failed else ""), file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_list(args) -> int:
    from .registry import REGISTRY

    _emit(({"name": c.name, "module": c.module, "summary": c.summary} for c in REGISTRY), args.json)
    return EXIT_OK


def cmd_table(args) -> int:
    if args.id not in TABLES:
        raise UsageError(f"unknown table id {args.id!r}; known: {', '.join(TABLES)}")
    rep = table(args.id, args.variety, args.action)
    _emit([rep.to_json()], args.json)
    return EXIT_OK if rep.match else EXIT_FAIL


def cmd_singular_locus(args) -> int:
    from ..algebra.parse import parse_scalar
    from ..algebra.scalars import format_scalar
    from ..varieties.tables import orbit_status

    t = parse_scalar(args.t)
    status = orbit_status(t)
    rec = {
        "t": format_scalar(t),
        "orbits": status,
        "singular_orbits": [n for n, r in status.items() if r["singular"]],
        "all_singular_points_nodes": all(r["nodes"] == r["singular"] for r in status.values()),
    }
    _emit([rec], args.json)
    return EXIT_OK


def cmd_orbits(args) -> int:
    from ..varieties.orbits import orbit_catalog

    _emit([orbit_catalog().to_json()], args.json)
    return EXIT_OK


def cmd_cr(args) -> int:
    from ..crconfig import incidence_matrix, igusa_uniqueness_kernel, jail_decompositions

    if args.decompositions:
        _emit([{"decompositions": [d.to_json() for d in jail_decompositions()]}], args.json)
        return EXIT_OK
    if args.kernel:
        k = igusa_uniqueness_kernel()
        _emit([k], args.json)
        return EXIT_OK if k["kernel_dimension"] == 1 and k.get("proportional_to_igusa") else EXIT_FAIL
    if args.incidence:
        _emit([{"incidence": incidence_matrix()}], args.json)
        return EXIT_OK
    which = args.check or "all"
    names = [n for n in check_names() if n.startswith("cr_")] if which == "all" else [which]
    if not set(names) <= {n for n in check_names() if n.startswith("cr_")}:
        raise UsageError(f"unknown configuration check {which!r}")
    records = _emit((run_by_name(n, args.seed) for n in names), args.json)
    return EXIT_OK if all(r["status"] == "pass" for r in records) else EXIT_FAIL


def cmd_subgroups(args) -> int:
    from ..groups.lattice import subgroup_classes
    from ..groups.named import class_names
    from ..reps.classgroup import rank_table

    try:
        idx = rank_table(args.variety, args.action, args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cat = subgroup_classes()
    names = class_names()
    rec = {
        "variety": args.variety,
        "action": args.action,
        "rank": args.rank,
        "count": len(idx),
        "classes": [{"index": i, "order": cat.classes[i].order, "names": names.get(i, []),
                     "census": cat.classes[i].census_signature()} for i in idx],
    }
    _emit([rec], args.json)
    return EXIT_OK


def cmd_conic(args) -> int:
    from ..algebra.parse import parse_point, parse_scalar
    from ..varieties.verra import conic_fiber

    try:
        tau = parse_scalar(args.tau)
        u = parse_point(args.u)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if len(u) != 3:
        raise UsageError("--u needs three coordinates")
    _emit([conic_fiber(tau, u).to_json()], args.json)
    return EXIT_OK


def cmd_wiman_edge(args) -> int:
    if args.singular_members:
        from ..varieties.wiman_edge import wiman_edge_elimination

        _emit([wiman_edge_elimination().to_json()], args.json)
        return EXIT_OK
    records = _emit((run_by_name(n, args.seed) for n in ("wiman_edge_base_points",)), args.json)
    return EXIT_OK if records[0]["status"] == "pass" else EXIT_FAIL


def cmd_characters(args) -> int:
    from ..reps.partitions import character_table, label
    from ..reps.tables import A5_CLASS_SIZES, A5_TABLE

    if args.group == "A5":
        rec = {"group": "A5", "classes": A5_CLASS_SIZES, "characters": A5_TABLE}
    else:
        n = int(args.group[1:])
        tab = character_table(n)
        classes = list(next(iter(tab.values())))
        rec = {
            "group": args.group,
            "classes": [label(mu).removeprefix("R") for mu in classes],
            "characters": {label(lam): [row[mu] for mu in classes] for lam, row in tab.items()},
        }
    _emit([rec], args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit with 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the JSON lines to PATH")
    common.add_argument("--seed", type=int, default=0, help="seed for the randomized checks")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for verify")

    p = _Parser(prog="s6quartics", description="Exact verification of S6-invariant quartic threefolds.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", parents=[common], help="run named checks (or all)")
    v.add_argument("names", nargs="*", default=["all"])
    v.set_defaults(func=cmd_verify)

    ls = sub.add_parser("list", parents=[common], help="list the registered checks")
    ls.set_defaults(func=cmd_list)

    t = sub.add_parser("table", parents=[common], help="recompute a table and diff it")
    t.add_argument("id")
    t.add_argument("--variety")
    t.add_argument("--action", choices=("natural", "twisted", "product"))
    t.set_defaults(func=cmd_table)

    s = sub.add_parser("singular-locus", parents=[common], help="singular catalog points of X_t")
    s.add_argument("--t", required=True)
    s.set_defaults(func=cmd_singular_locus)

    o = sub.add_parser("orbits", parents=[common], help="the orbit catalog")
    o.set_defaults(func=cmd_orbits)

    c = sub.add_parser("cr", parents=[common], help="the Cremona-Richmond configuration")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--check", nargs="?", const="all")
    g.add_argument("--decompositions", action="store_true")
    g.add_argument("--kernel", action="store_true")
    g.add_argument("--incidence", action="store_true")
    c.set_defaults(func=cmd_cr)

    sg = sub.add_parser("subgroups", parents=[common], help="subgroup classes with given invariant rank")
    sg.add_argument("--rank", type=int, choices=(1, 2), required=True)
    sg.add_argument("--variety", default="X_generic")
    sg.add_argument("--action", choices=("natural", "twisted"), default="natural")
    sg.set_defaults(func=cmd_subgroups)

    cn = sub.add_parser("conic", parents=[common], help="the conic fibre over u at tau")
    cn.add_argument("--tau", required=True)
    cn.add_argument("--u", required=True)
    cn.set_defaults(func=cmd_conic)

    w = sub.add_parser("wiman-edge", parents=[common], help="the Wiman-Edge pencil")
    w.add_argument("--singular-members", action="store_true")
    w.set_defaults(func=cmd_wiman_edge)

    ch = sub.add_parser("characters", parents=[common], help="character tables")
    ch.add_argument("--group", choices=("S6", "S5", "A5"), default="S6")
    ch.set_defaults(func=cmd_characters)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"s6quartics: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"s6quartics: I/O error: {exc}", file=sys.stderr)
        return EXIT_USAGE

