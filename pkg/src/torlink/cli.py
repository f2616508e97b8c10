"""Command-line interface: predicates, slope queries, censuses, certification.

Exit status contract: 0 on success or a passing verdict, 1 on a negative
mathematical verdict (a link found, a failed certification, a predicate
that came out false), 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .canonical import canonical_graph
from .errors import TorlinkError
from .graph6 import decode_graph6, encode_graph6, read_graph6_file
from .graphs import Graph
from .oracles import (
    ObstructionDB,
    is_maxnil,
    is_mtn,
    is_nil,
    is_tn,
    is_toroidal,
    petersen_family,
)
from .search import (
    MAXNIL_ORDER9_FILE,
    census_maxnil,
    certify_order,
    extract_obstruction_set,
    find_all_mtn_order9,
    load_search_context,
    verify_size19_exclusion,
)
from .torus import (
    TorusDiagram,
    cycle_crossing_sums,
    cycle_slope,
    embedding_warnings,
    find_links,
    parse_embedding,
    torus_link_linking_number,
)

PASS, FAIL, USAGE = 0, 1, 2


def load_graph6_file(path) -> list[Graph]:
    """Graphs from a one-per-line graph6 file, with line-numbered errors."""
    return read_graph6_file(path)


def load_embedding_file(path) -> TorusDiagram:
    """A validated torus diagram from a 4-line embedding file."""
    path = Path(path)
    try:
        return parse_embedding(path.read_text())
    except TorlinkError as exc:
        raise type(exc)(f"{path.name}: {exc}") from None


def _data_dir(args) -> Path | None:
    if args.data_dir:
        return Path(args.data_dir)
    env = os.environ.get("TORLINK_DATA_DIR")
    return Path(env) if env else None


def _obstruction_db(args) -> ObstructionDB:
    d = _data_dir(args)
    return ObstructionDB.from_dir(d) if d else ObstructionDB.builtin()


def _input_graphs(spec: str) -> list[Graph]:
    if Path(spec).exists():
        return load_graph6_file(spec)
    return [decode_graph6(spec)]


def _cmd_check(args, out) -> int:
    graphs = _input_graphs(args.graph)
    wanted = [
        (name, flag)
        for name, flag in (
            ("nIL", args.nil),
            ("toroidal", args.toroidal),
            ("TN", args.tn),
            ("maxnIL", args.maxnil),
            ("MTN", args.mtn),
            ("connected", args.connected),
        )
        if flag
    ]
    if not wanted:
        raise TorlinkError("no predicate requested (try --nil)")
    needs_db = {"toroidal", "TN", "MTN"}
    db = _obstruction_db(args) if any(n in needs_db for n, _ in wanted) else None
    evaluators = {
        "nIL": is_nil,
        "toroidal": lambda g: is_toroidal(g, db),
        "TN": lambda g: is_tn(g, db),
        "maxnIL": is_maxnil,
        "MTN": lambda g: is_mtn(g, db),
        "connected": Graph.is_connected,
    }
    all_true = True
    for i, g in enumerate(graphs, start=1):
        prefix = "" if len(graphs) == 1 else f"graph {i} "
        for name, _ in wanted:
            value = evaluators[name](g)
            all_true = all_true and value
            out.write(f"{prefix}{name}: {str(value).lower()}\n")
    return PASS if all_true else FAIL


def _cmd_petersen(args, out) -> int:
    lines = [encode_graph6(g) for g in petersen_family()]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return PASS


def _cmd_linking_number(args, out) -> int:
    value = torus_link_linking_number(args.m, args.n)
    out.write(f"{value}\n")
    return PASS


def _parse_cycle(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise TorlinkError(f"bad cycle {text!r}") from None


def _cmd_slope(args, out) -> int:
    diagram = load_embedding_file(args.embedding)
    cycle = _parse_cycle(args.cycle)
    p, q = cycle_crossing_sums(diagram, cycle)
    slope = cycle_slope(diagram, cycle)
    out.write("cycle: " + " ".join(map(str, cycle)) + "\n")
    out.write(f"crossings: P={p} Q={q}\n")
    out.write(f"slope: {slope}\n")
    out.write(f"linking: {str(slope.is_linking).lower()}\n")
    return PASS


def _write_links(witnesses, out) -> None:
    for w in witnesses:
        ca = " ".join(map(str, w.cycle_a))
        cb = " ".join(map(str, w.cycle_b))
        out.write(f"link: [{ca}] [{cb}] slope={w.slope}\n")


def _cmd_find_links(args, out) -> int:
    diagram = load_embedding_file(args.embedding)
    witnesses = find_links(diagram, args.min_cycle, args.max_cycle)
    out.write(f"links: {len(witnesses)}\n")
    _write_links(witnesses, out)
    return PASS


def _cmd_verify_embedding(args, out) -> int:
    diagram = load_embedding_file(args.embedding)
    for warning in embedding_warnings(diagram):
        out.write(f"warning: {warning}\n")
    witnesses = find_links(diagram)
    out.write(f"linkless: {str(not witnesses).lower()}\n")
    _write_links(witnesses, out)
    return PASS if not witnesses else FAIL


def _cmd_census_maxnil(args, out) -> int:
    graphs = census_maxnil(args.order)
    lines = [f"count: {len(graphs)}"]
    lines += [encode_graph6(g) for g in graphs]
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return PASS


def _cmd_mtn_census(args, out) -> int:
    d = _data_dir(args)
    if d is None:
        raise TorlinkError("--data-dir (or TORLINK_DATA_DIR) is required")
    ctx = load_search_context(d)
    hits = extract_obstruction_set(ctx)
    sizes = ",".join(str(g.size) for g in hits.subgraphs)
    out.write(f"obstruction_subgraphs {len(hits.subgraphs)} sizes={sizes}\n")
    out.write(f"obstruction_order8_minors {len(hits.order8_minors)}\n")
    exclusion = verify_size19_exclusion(hits.subgraphs, ctx.db)
    out.write(f"size19_exclusion {'pass' if exclusion else 'fail'}\n")
    report = find_all_mtn_order9(ctx)
    out.write(report.to_text())
    print(f"search time: {report.seconds:.1f}s", file=sys.stderr)
    return PASS if exclusion else FAIL


def _cmd_certify(args, out) -> int:
    graphs = load_graph6_file(args.mtn)
    emb_dir = Path(args.embeddings)
    paths = sorted(emb_dir.glob("*.emb"))
    diagrams = [load_embedding_file(p) for p in paths]
    report = certify_order(graphs, diagrams, [p.name for p in paths])
    out.write(report.to_text())
    return PASS if report.overall_pass else FAIL


def _cmd_validate_data(args, out) -> int:
    d = _data_dir(args)
    if d is None:
        raise TorlinkError("--data-dir (or TORLINK_DATA_DIR) is required")
    db = ObstructionDB.from_dir(d)
    loaded = sorted(k for k in db.by_order if db.by_order[k])
    out.write(
        "obstruction orders: "
        + " ".join(f"{k}({len(db.by_order[k])})" for k in loaded)
        + "\n"
    )
    out.write(f"max_supported_order: {db.max_supported_order}\n")
    maxnil_path = d / MAXNIL_ORDER9_FILE
    if not maxnil_path.exists():
        out.write(f"{MAXNIL_ORDER9_FILE}: absent\n")
        return PASS
    ctx = load_search_context(d)
    out.write(f"{MAXNIL_ORDER9_FILE}: 20 graphs, all order 9, all maxnIL\n")
    out.write(f"toroidal: {len(ctx.toroidal_maxnil)}\n")
    out.write(f"nontoroidal: {len(ctx.nontoroidal_maxnil)}\n")
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torlink",
        description=(
            "Graph predicates via forbidden minors, torus-diagram link "
            "detection, and the maximal toroidal-linkless census."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_data_dir(p):
        p.add_argument(
            "--data-dir",
            help="directory with obstruction / maxnIL data files "
            "(default: $TORLINK_DATA_DIR)",
        )

    p = sub.add_parser("check", help="evaluate predicates on graph6 input")
    p.add_argument("graph", help="graph6 string or path to a graph6 file")
    p.add_argument("--nil", action="store_true", help="linkless-embeddable test")
    p.add_argument("--toroidal", action="store_true")
    p.add_argument("--tn", action="store_true", help="toroidal and nIL")
    p.add_argument("--maxnil", action="store_true", help="maximally nIL")
    p.add_argument("--mtn", action="store_true", help="maximally TN")
    p.add_argument("--connected", action="store_true")
    add_data_dir(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("petersen", help="emit the Petersen family as graph6")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_petersen)

    p = sub.add_parser(
        "linking-number", help="linking number of the (m, n) torus link"
    )
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_linking_number)

    p = sub.add_parser("slope", help="slope class of a cycle in a diagram")
    p.add_argument("embedding", help="embedding file")
    p.add_argument("--cycle", required=True, help="cycle, e.g. 1,2,3")
    p.set_defaults(handler=_cmd_slope)

    p = sub.add_parser("find-links", help="list linked cycle pairs in a diagram")
    p.add_argument("embedding", help="embedding file")
    p.add_argument("--min-cycle", type=int, default=None)
    p.add_argument("--max-cycle", type=int, default=None)
    p.set_defaults(handler=_cmd_find_links)

    p = sub.add_parser(
        "verify-embedding", help="check a diagram is linkless (exit 1 if not)"
    )
    p.add_argument("embedding", help="embedding file")
    p.set_defaults(handler=_cmd_verify_embedding)

    p = sub.add_parser(
        "census-maxnil", help="exhaustive maxnIL census for one order (3..8)"
    )
    p.add_argument("order", type=int)
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_census_maxnil)

    p = sub.add_parser(
        "mtn-census", help="order-9 search pipeline over external data files"
    )
    add_data_dir(p)
    p.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker hint; results are independent of this setting",
    )
    p.set_defaults(handler=_cmd_mtn_census)

    p = sub.add_parser(
        "certify", help="verify linkless embeddings for a list of graphs"
    )
    p.add_argument("--mtn", required=True, help="graph6 file of graphs to cover")
    p.add_argument(
        "--embeddings", required=True, help="directory of .emb diagram files"
    )
    p.set_defaults(handler=_cmd_certify)

    p = sub.add_parser("validate-data", help="strictly validate a data directory")
    add_data_dir(p)
    p.set_defaults(handler=_cmd_validate_data)

    return parser


def run(argv=None, out=None) -> int:
    """Parse argv, execute the mapped command, and return the exit status."""
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, out)
    except (TorlinkError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
