"""Command-line entry point.

Exit codes: 0 success (verify: statement held), 1 computational
falsification, 2 usage or input errors, 3 verification inconclusive under
the configured caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .betti import betti_table, find_reg_witness_variable
from .classify import (
    THEOREMS,
    EnumerationConfig,
    compute_atlas,
    verify_theorem,
)
from .fields import GF2, RATIONALS, FieldChoice
from .graphs import (
    WeightedOrientedGraph,
    bipartite_depth_zero_witness,
    complete_graph,
    cycle_naturally_oriented,
    depth_zero_certificate,
    depth_zero_family,
    edge_ideal,
    export_cas_script,
    graph_from_json,
    graph_to_json,
    lift_graph,
    path_graph,
    star_graph,
)
from .monomials import krull_dim

FIELD_NAMES = {"q": RATIONALS, "gf2": GF2}


def _field_from_flags(value: Optional[str], default: FieldChoice) -> FieldChoice:
    if value is None:
        value = os.environ.get("WOG_FIELD")
    if value is None:
        return default
    key = value.strip().lower()
    if key not in FIELD_NAMES:
        raise ValueError(f"unknown field {value!r}; use one of {sorted(FIELD_NAMES)}")
    return FIELD_NAMES[key]


def _load_graph(path: str) -> WeightedOrientedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return graph_from_json(json.load(fh))


def _dump(obj, out: Optional[str]) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_weights(text: Optional[str]) -> Optional[tuple[int, ...]]:
    if text is None:
        return None
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad weight list {text!r}: {exc}") from exc


def _cmd_invariants(args) -> int:
    graph = _load_graph(args.graph)
    field_choice = _field_from_flags(args.field, RATIONALS)
    ideal = edge_ideal(graph)
    table = betti_table(ideal, field_choice)
    dim = krull_dim(ideal)
    if args.format == "json":
        payload = table.to_json()
        payload["dim"] = dim
        payload["field"] = str(field_choice)
        _dump(payload, None)
    else:
        print(table.to_grid())
        print(
            f"pdim = {table.pdim}, depth = {table.depth}, "
            f"reg = {table.reg}, dim = {dim}  (over {field_choice})"
        )
    return 0


def _cmd_certify(args) -> int:
    graph = _load_graph(args.graph)
    cert = depth_zero_certificate(graph)
    if cert is None:
        print("none")
    else:
        edges = [[u + 1, v + 1] for u, v in cert.chosen_in_edge]
        print(json.dumps({"in_edges": edges}, sort_keys=True))
    return 0


def _cmd_construct(args) -> int:
    if args.lift is not None:
        if args.r is None:
            raise ValueError("--lift needs --r")
        graph = _load_graph(args.lift)
        field_choice = _field_from_flags(args.field, RATIONALS)
        witness = find_reg_witness_variable(edge_ideal(graph), field_choice)
        built = lift_graph(graph, witness, args.r)
    elif args.family == "G":
        if None in (args.t, args.l, args.r):
            raise ValueError("--family G needs --t, --l and --r")
        built = depth_zero_family(args.t, args.l, args.r)
    elif args.family == "cycle":
        if args.n is None or args.weights is None:
            raise ValueError("--family cycle needs --n and --weights")
        built = cycle_naturally_oriented(args.n, _parse_weights(args.weights))
    elif args.family == "path":
        if args.n is None:
            raise ValueError("--family path needs --n")
        built = path_graph(args.n, _parse_weights(args.weights))
    elif args.family == "star":
        if args.n is None:
            raise ValueError("--family star needs --n")
        built = star_graph(args.n, _parse_weights(args.weights))
    elif args.family == "complete":
        if args.n is None:
            raise ValueError("--family complete needs --n")
        built = complete_graph(args.n, _parse_weights(args.weights))
    elif args.family == "bipartite-witness":
        if args.n is None or args.r is None:
            raise ValueError("--family bipartite-witness needs --n and --r")
        built = bipartite_depth_zero_witness(args.n, args.r)
    else:
        raise ValueError("pick a --family or --lift")
    _dump(graph_to_json(built), args.out)
    return 0


def _cmd_classify(args) -> int:
    cfg = EnumerationConfig(
        n=args.n,
        weight_cap=args.weight_cap,
        reg_cap=args.reg_cap,
        class_filter=args.graph_class,
    )
    field_choice = _field_from_flags(args.field, GF2)
    atlas = compute_atlas(cfg, args.projection, field_choice, jobs=args.jobs)
    _dump(atlas.to_json(), args.out)
    return 0


def _cmd_verify(args) -> int:
    cfg = EnumerationConfig(
        n=args.n,
        weight_cap=args.weight_cap,
        reg_cap=args.reg_cap,
    )
    field_choice = _field_from_flags(args.field, GF2)
    report = verify_theorem(args.theorem, cfg, field_choice, jobs=args.jobs)
    print(report.to_text())
    if args.out:
        _dump(report.to_json(), args.out)
    return report.exit_code


def _cmd_export_cas(args) -> int:
    graph = _load_graph(args.graph)
    script = export_cas_script(graph)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(script)
    else:
        sys.stdout.write(script)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wog",
        description="Homological invariants of edge ideals of weighted oriented graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Betti table and derived invariants")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--field", choices=sorted(FIELD_NAMES))
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser(
        "certify-depth-zero", help="search for a depth-zero certificate"
    )
    p.add_argument("graph", help="graph JSON file")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("construct", help="emit a parameterized graph as JSON")
    p.add_argument(
        "--family",
        choices=("G", "cycle", "path", "star", "complete", "bipartite-witness"),
    )
    p.add_argument("--lift", metavar="GRAPH_JSON", help="re-weight an unweighted graph")
    p.add_argument("--t", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--weights", help="comma-separated weights")
    p.add_argument("--field", choices=sorted(FIELD_NAMES))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("classify", help="exhaustive invariant atlas under caps")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight-cap", type=int, default=1)
    p.add_argument(
        "--class",
        dest="graph_class",
        choices=("all", "tree", "bipartite"),
        default="all",
    )
    p.add_argument("--reg-cap", type=int)
    p.add_argument(
        "--projection", choices=("dd", "ddr", "betti_size", "full"), default="ddr"
    )
    p.add_argument("--out")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--field", choices=sorted(FIELD_NAMES))
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("verify", help="exhaustively test one theorem under caps")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight-cap", type=int, default=1)
    p.add_argument("--reg-cap", type=int)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--field", choices=sorted(FIELD_NAMES))
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("export-cas", help="computer-algebra script for an edge ideal")
    p.add_argument("graph", help="graph JSON file")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_export_cas)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
