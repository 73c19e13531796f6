"""Command line entry point: ``cyclicsg {show,distance,export,audit}``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .audit import (
    DEFAULT_CAP,
    PRESETS,
    CorpusError,
    _parse_line,
    audit_group,
    load_corpus,
    preset,
    run_audit,
)
from .gamma_graph import GammaGraph, build_gamma
from .graph_invariants import distance, summarize
from .group_core import ALL_SUBGROUPS_CAP, Group, GroupError, GroupTableError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

GROUP_HELP = (
    "group description, e.g. 'cyclic 12', 'dihedral 6', 'genq 3', 'dicyclic 3', "
    "'minnc p=2 r=3 q=3', 'product Z4xZ3xZ3', 'matrix sl2f3', 'cayley table.tbl'"
)


class UsageError(Exception):
    pass


def _group(words: list[str]) -> tuple[Group, str]:
    cases = _parse_line(" ".join(words))
    if len(cases) != 1:
        raise UsageError(f"expected a single group, got {len(cases)}")
    case = cases[0]
    return case.build(Path.cwd()), case.descriptor


def _selector(gamma: GammaGraph, text: str) -> int:
    try:
        order, idx = (int(x) for x in text.split(":"))
    except ValueError:
        raise UsageError(f"bad vertex selector {text!r}; use ORDER:INDEX") from None
    try:
        return gamma.index_of(order, idx)
    except KeyError:
        raise UsageError(f"no vertex {text} (Z{order}#{idx})") from None


def to_dot(gamma: GammaGraph, name: str) -> str:
    lines = [f'graph "{name}" {{']
    for v, label in enumerate(gamma.labels):
        lines.append(f'  {v} [label="{label}"];')
    for u, v in gamma.edge_list:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_json(G: Group, gamma: GammaGraph) -> dict:
    return {
        "group": G.label,
        "order": G.order,
        "vertices": [
            {"label": lab, "order": H.order, "elements": list(H.elements)}
            for lab, H in zip(gamma.labels, gamma.vertices)
        ],
        "edges": [list(e) for e in gamma.edge_list],
        "invariants": summarize(gamma).to_dict(),
    }


def _shape_line(gamma: GammaGraph, s) -> str:
    names = []
    if s.path_graph:
        names.append("path")
    if s.cycle_graph:
        names.append("cycle")
    if s.star_graph:
        center = max(range(gamma.vertex_count), key=gamma.degree)
        names.append(f"star (center {gamma.labels[center]})")
    if s.complete_graph:
        names.append("complete")
    if s.tree:
        names.append("tree")
    return ", ".join(names) or "none of path/cycle/star/complete/tree"


def show_text(G: Group, descriptor: str, gamma: GammaGraph, lattice_cap: int) -> str:
    s = summarize(gamma)
    labels = gamma.labels
    out = [
        f"{descriptor}: {G.label}, order {G.order}",
        f"{s.vertex_count} vertices, {s.edge_count} edges",
        "vertices: " + " ".join(labels),
        "edges:",
    ]
    out += [f"  {labels[u]} -- {labels[v]}" for u, v in gamma.edge_list]
    out += [
        f"degrees: {list(s.degree_sequence)} (min {s.min_degree}, max {s.max_degree})",
        f"diameter: {s.diameter}  girth: {s.girth}  bipartite: {s.bipartite}",
        f"regular: {s.regular}  eulerian: {s.eulerian}  pendants: {s.pendant_count}",
        f"shape: {_shape_line(gamma, s)}",
        "checks:",
    ]
    rep = audit_group(G, descriptor, lattice_cap=lattice_cap)
    for c in rep.checks:
        extra = f" [{c.discrepancy}]" if c.discrepancy and c.status != "match" else ""
        out.append(f"  {c.status:<34} {c.name}{extra}")
    return "\n".join(out) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_show(args) -> int:
    G, desc = _group(args.group)
    gamma = build_gamma(G)
    if args.format == "dot":
        _emit(to_dot(gamma, G.label), args.out)
    elif args.format == "json":
        _emit(json.dumps(graph_json(G, gamma), indent=1) + "\n", args.out)
    else:
        _emit(show_text(G, desc, gamma, args.lattice_cap), args.out)
    return EXIT_OK


def cmd_export(args) -> int:
    G, _ = _group(args.group)
    gamma = build_gamma(G)
    text = to_dot(gamma, G.label) if args.format == "dot" else json.dumps(graph_json(G, gamma), indent=1) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_distance(args) -> int:
    G, _ = _group(args.group)
    gamma = build_gamma(G)
    d = distance(gamma, _selector(gamma, args.source), _selector(gamma, args.target))
    print(d)
    return EXIT_OK


def cmd_audit(args) -> int:
    kw = {"cap": args.cap, "lattice_cap": args.lattice_cap}
    if args.spec is not None and args.preset is not None:
        raise UsageError("give either a spec file or --preset, not both")
    if args.spec is not None:
        spec = load_corpus(args.spec, **kw)
    else:
        spec = preset(args.preset or "default", **kw)
    report = run_audit(spec, jobs=args.jobs)
    if args.format == "json":
        body = report.to_json()
    elif args.format == "csv":
        body = report.to_csv()
    else:
        body = report.summary_text()
    _emit(body, args.out)
    if args.out and args.format != "text":
        sys.stdout.write(report.summary_text())
    return EXIT_OK if report.passed else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclicsg", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="print the graph of one group with its invariants and checks")
    p.add_argument("group", nargs="+", help=GROUP_HELP)
    p.add_argument("--format", choices=["text", "dot", "json"], default="text")
    p.add_argument("--out")
    p.add_argument("--lattice-cap", type=int, default=ALL_SUBGROUPS_CAP)
    p.set_defaults(func=cmd_show)

    p = sub.add_parser("export", help="write the graph as DOT or JSON")
    p.add_argument("group", nargs="+", help=GROUP_HELP)
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("distance", help="graph distance between two vertices given as ORDER:INDEX")
    p.add_argument("group", nargs="+", help=GROUP_HELP)
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("audit", help="sweep a corpus and compare predictions with computed graphs")
    p.add_argument("spec", nargs="?", help="corpus file, one sweep per line")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.add_argument("--out")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="skip groups larger than this")
    p.add_argument("--lattice-cap", type=int, default=ALL_SUBGROUPS_CAP)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_audit)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CorpusError, GroupError, GroupTableError, OSError) as exc:
        print(f"cyclicsg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
