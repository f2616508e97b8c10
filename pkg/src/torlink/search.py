"""Recursive search and census pipeline for maximal TN graphs of order 9,
plus the exhaustive small-order maxnIL census and embedding certification.

The search takes a nIL order-9 graph and walks single-edge deletions,
pruned by an edge-count floor, connectivity, and containment in a known
toroidal maximal graph, returning the toroidal graphs where the recursion
bottoms out. Running it from every non-toroidal maximal root and filtering
by the maximality predicate yields the order-9 graphs that are maximally
toroidal-and-nIL without being maximally nIL.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from pathlib import Path

from .canonical import canonical_form, canonical_graph, is_isomorphic
from .errors import DataValidationError, UnsupportedOrderError
from .graph6 import encode_graph6, read_graph6_file
from .graphs import Graph, empty_graph
from .oracles import ObstructionDB, is_maxnil, is_mtn, is_nil, is_tn, is_toroidal
from .containment import has_minor, is_subgraph_iso
from .torus import TorusDiagram, find_links

MAXNIL_ORDER9_FILE = "maxnil_order9.g6"
SEARCH_ORDER = 9
DEFAULT_SIZE_FLOOR = 19


@dataclass(eq=False)
class SearchContext:
    """Partitioned order-9 maximal-nIL graphs plus the obstruction data
    backing toroidality queries. ``size_floor`` is the edge-count guard of
    the search (candidates must have strictly more edges)."""

    toroidal_maxnil: tuple[Graph, ...]
    nontoroidal_maxnil: tuple[Graph, ...]
    db: ObstructionDB
    size_floor: int = DEFAULT_SIZE_FLOOR
    cache: dict = field(default_factory=dict, repr=False)


def classify_maxnil(maxnil_order9, db: ObstructionDB) -> SearchContext:
    """Strictly validate the 20 order-9 maxnIL graphs and partition them
    by toroidality."""
    graphs = list(maxnil_order9)
    if len(graphs) != 20:
        raise DataValidationError(
            f"expected the 20 order-9 maxnIL graphs, got {len(graphs)}"
        )
    for i, g in enumerate(graphs, start=1):
        if g.n != SEARCH_ORDER:
            raise DataValidationError(f"graph {i} has order {g.n}, expected 9")
        if not is_maxnil(g):
            raise DataValidationError(f"graph {i} is not maximally nIL")
    toroidal = []
    nontoroidal = []
    for g in graphs:
        (toroidal if is_toroidal(g, db) else nontoroidal).append(canonical_graph(g))
    toroidal.sort(key=canonical_form)
    nontoroidal.sort(key=canonical_form)
    return SearchContext(tuple(toroidal), tuple(nontoroidal), db)


def load_search_context(data_dir) -> SearchContext:
    data_dir = Path(data_dir)
    path = data_dir / MAXNIL_ORDER9_FILE
    if not path.exists():
        raise DataValidationError(f"missing data file {path}")
    db = ObstructionDB.from_dir(data_dir)
    return classify_maxnil(read_graph6_file(path), db)


def mtn_search(g: Graph, ctx: SearchContext) -> frozenset[Graph]:
    """Search the deletion tree below g for surviving toroidal graphs.

    Returns canonically labeled representatives, deduplicated by canonical
    form; results and visited states are memoized in ctx.cache, so repeated
    and overlapping searches share work.
    """
    if g.n != SEARCH_ORDER:
        raise ValueError(f"search requires order {SEARCH_ORDER}, got {g.n}")
    if not is_nil(g):
        raise ValueError("search requires a nIL input graph")
    return _search(g, ctx)


def _search(g: Graph, ctx: SearchContext) -> frozenset[Graph]:
    key = canonical_form(g)
    hit = ctx.cache.get(key)
    if hit is not None:
        return hit
    if (
        g.size <= ctx.size_floor
        or not g.is_connected()
        or any(is_subgraph_iso(g, m) for m in ctx.toroidal_maxnil)
    ):
        result: frozenset[Graph] = frozenset()
    elif not is_toroidal(g, ctx.db):
        acc: dict[bytes, Graph] = {}
        seen_children: set[bytes] = set()
        for e in g.edges:
            child = g.delete_edge(e)
            child_key = canonical_form(child)
            if child_key in seen_children:
                continue
            seen_children.add(child_key)
            for found in _search(child, ctx):
                acc.setdefault(canonical_form(found), found)
        result = frozenset(acc.values())
    else:
        result = frozenset([canonical_graph(g)])
    ctx.cache[key] = result
    return result


@dataclass(frozen=True)
class ObstructionHits:
    """Obstructions found inside the non-toroidal maximal graphs.

    ``subgraphs`` are the order-9 obstructions appearing as subgraphs (the
    only way an order-9 graph holds an order-9 obstruction); an order-8
    obstruction occurring as a minor would be a surprise and is reported
    separately in ``order8_minors``.
    """

    subgraphs: tuple[Graph, ...]
    order8_minors: tuple[Graph, ...]


def extract_obstruction_set(ctx: SearchContext) -> ObstructionHits:
    """All obstructions contained in some non-toroidal maxnIL graph."""
    if 9 not in ctx.db.by_order:
        raise UnsupportedOrderError(
            "order-9 obstruction data is required to extract the embedded set"
        )
    subgraphs: dict[bytes, Graph] = {}
    for obs in ctx.db.by_order[9]:
        if any(is_subgraph_iso(obs, host) for host in ctx.nontoroidal_maxnil):
            subgraphs.setdefault(canonical_form(obs), canonical_graph(obs))
    order8: dict[bytes, Graph] = {}
    for obs in ctx.db.by_order.get(8, ()):
        if any(has_minor(host, obs) for host in ctx.nontoroidal_maxnil):
            order8.setdefault(canonical_form(obs), canonical_graph(obs))
    return ObstructionHits(
        tuple(sorted(subgraphs.values(), key=canonical_form)),
        tuple(sorted(order8.values(), key=canonical_form)),
    )


def verify_size19_exclusion(obstructions, db: ObstructionDB) -> bool:
    """Check that deleting any edge from any of the given obstructions
    leaves a graph that regains the TN property under some edge addition.

    A True result rules out candidates at the edge floor itself, which is
    what justifies the search's strict size guard.
    """
    for h in obstructions:
        for e in h.edges:
            reduced = h.delete_edge(e)
            if not any(
                is_tn(reduced.add_edge(e2), db) for e2 in reduced.non_edges()
            ):
                return False
    return True


@dataclass(frozen=True)
class CensusReport:
    """Outcome of the order-9 search pipeline."""

    toroidal_maxnil: tuple[Graph, ...]
    nontoroidal_maxnil: tuple[Graph, ...]
    candidates: tuple[Graph, ...]
    non_maxnil_mtn: tuple[Graph, ...]
    all_mtn: tuple[Graph, ...]
    provenance: dict[str, tuple[int, ...]]
    seconds: float

    def to_text(self) -> str:
        """Deterministic line-oriented report (timing deliberately absent)."""
        lines = [
            f"order {SEARCH_ORDER}",
            f"toroidal_maxnil {len(self.toroidal_maxnil)}",
            f"nontoroidal_maxnil {len(self.nontoroidal_maxnil)}",
            f"search_candidates {len(self.candidates)}",
            f"non_maxnil_mtn {len(self.non_maxnil_mtn)}",
            f"all_mtn {len(self.all_mtn)}",
            "begin graphs",
        ]
        for g in self.all_mtn:
            g6 = encode_graph6(g)
            roots = self.provenance.get(g6)
            if roots is None:
                lines.append(f"{g6} kind=maxnil")
            else:
                lines.append(
                    f"{g6} kind=search roots=" + ",".join(map(str, roots))
                )
        lines.append("end graphs")
        return "\n".join(lines) + "\n"


def find_all_mtn_order9(ctx: SearchContext) -> CensusReport:
    """Union the searches from every non-toroidal root, keep the graphs that
    are maximally TN, and merge with the toroidal maximal graphs."""
    start = time.perf_counter()
    found: dict[bytes, Graph] = {}
    provenance: dict[bytes, set[int]] = {}
    for idx, root in enumerate(ctx.nontoroidal_maxnil, start=1):
        for g in mtn_search(root, ctx):
            key = canonical_form(g)
            found.setdefault(key, g)
            provenance.setdefault(key, set()).add(idx)
    candidates = tuple(sorted(found.values(), key=canonical_form))
    non_maxnil = tuple(g for g in candidates if is_mtn(g, ctx.db))
    non_maxnil_keys = {canonical_form(g) for g in non_maxnil}
    merged = {canonical_form(g): g for g in non_maxnil}
    for g in ctx.toroidal_maxnil:
        merged[canonical_form(g)] = g
    all_mtn = tuple(sorted(merged.values(), key=encode_graph6))
    prov_text = {
        encode_graph6(found[key]): tuple(sorted(roots))
        for key, roots in provenance.items()
        if key in non_maxnil_keys
    }
    return CensusReport(
        toroidal_maxnil=ctx.toroidal_maxnil,
        nontoroidal_maxnil=ctx.nontoroidal_maxnil,
        candidates=candidates,
        non_maxnil_mtn=non_maxnil,
        all_mtn=all_mtn,
        provenance=prov_text,
        seconds=time.perf_counter() - start,
    )


# -- exhaustive small-order census -------------------------------------------


def isomorphism_classes(n: int) -> list[Graph]:
    """All order-n graphs up to isomorphism, by edge-adding closure with
    canonical-form deduplication. Practical through n = 8."""
    level = {canonical_form(empty_graph(n)): empty_graph(n)}
    out = list(level.values())
    while level:
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for e in g.non_edges():
                cand = g.add_edge(e)
                key = canonical_form(cand)
                if key not in nxt:
                    nxt[key] = cand
        out.extend(nxt.values())
        level = nxt
    return out


def census_maxnil(n: int) -> tuple[Graph, ...]:
    """All maximally-nIL graphs of order n up to isomorphism (3 <= n <= 8)."""
    if not 3 <= n <= 8:
        raise UnsupportedOrderError(
            f"exhaustive census supports orders 3..8, got {n}"
        )
    hits = [canonical_graph(g) for g in isomorphism_classes(n) if is_maxnil(g)]
    hits.sort(key=canonical_form)
    return tuple(hits)


# -- certification ------------------------------------------------------------


@dataclass(frozen=True)
class CertificationEntry:
    graph: Graph
    embedding_index: int | None
    embedding_name: str | None
    linkless: bool | None
    witnesses: tuple

    @property
    def passed(self) -> bool:
        return self.linkless is True


@dataclass(frozen=True)
class CertificationReport:
    entries: tuple[CertificationEntry, ...]
    unmatched: tuple[Graph, ...]

    @property
    def overall_pass(self) -> bool:
        return not self.unmatched and all(e.passed for e in self.entries)

    def to_text(self) -> str:
        lines = [f"certify graphs={len(self.entries) + len(self.unmatched)}"]
        for e in self.entries:
            name = e.embedding_name or f"#{e.embedding_index}"
            verdict = "ok" if e.passed else "LINKED"
            lines.append(
                f"graph {encode_graph6(e.graph)} embedding={name} "
                f"linkless={str(e.linkless).lower()} -> {verdict}"
            )
            for w in e.witnesses:
                ca = " ".join(map(str, w.cycle_a))
                cb = " ".join(map(str, w.cycle_b))
                lines.append(f"  link: [{ca}] [{cb}] slope={w.slope}")
        for g in self.unmatched:
            lines.append(f"graph {encode_graph6(g)} unmatched -> MISSING")
        lines.append(f"overall={'pass' if self.overall_pass else 'fail'}")
        return "\n".join(lines) + "\n"


def certify_order(
    mtn_graphs, embeddings, names=None
) -> CertificationReport:
    """Match each graph to an embedding diagram of the same isomorphism
    class and verify the diagram is linkless. Failures are report entries,
    never exceptions."""
    diagrams: list[TorusDiagram] = list(embeddings)
    names = list(names) if names is not None else [None] * len(diagrams)
    entries = []
    unmatched = []
    ordered = sorted(
        (canonical_graph(g) for g in mtn_graphs), key=canonical_form
    )
    for g in ordered:
        index = next(
            (i for i, d in enumerate(diagrams) if is_isomorphic(d.graph, g)),
            None,
        )
        if index is None:
            unmatched.append(g)
            continue
        witnesses = tuple(find_links(diagrams[index]))
        entries.append(
            CertificationEntry(
                graph=g,
                embedding_index=index,
                embedding_name=names[index],
                linkless=not witnesses,
                witnesses=witnesses,
            )
        )
    return CertificationReport(tuple(entries), tuple(unmatched))
