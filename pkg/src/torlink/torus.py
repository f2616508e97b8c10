"""Torus diagrams: cycle slopes, link detection, linking numbers.

A diagram is a graph drawn in the unit square with opposite sides glued.
Each edge may cross the top boundary at most once and the right boundary
at most once; the crossing lists record which edges do, with orientation
(u, v) meaning the traversal u -> v exits through that boundary. Exiting
the top or the right counts +1, the reverse direction -1. Summing these
signed crossings along a cycle gives the pair (P, Q) that classifies the
cycle: (0, 0) is inessential, and two vertex-disjoint cycles link exactly
when they share a slope class with both components nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ParseError
from .graphs import Graph, cycle_vertex_mask, enumerate_cycles, is_cycle_of


class TorusDiagram:
    """A graph plus its oriented boundary-crossing edge lists."""

    __slots__ = ("graph", "up_list", "right_list")

    def __init__(self, graph: Graph, up_list, right_list):
        up_list = tuple(tuple(p) for p in up_list)
        right_list = tuple(tuple(p) for p in right_list)
        for name, pairs in (("up", up_list), ("right", right_list)):
            seen = set()
            for u, v in pairs:
                if not graph.has_edge(u, v):
                    raise ValueError(f"{name} crossing ({u},{v}) is not an edge")
                key = frozenset((u, v))
                if key in seen:
                    raise ValueError(
                        f"edge ({u},{v}) crosses the {name} boundary twice"
                    )
                seen.add(key)
        self.graph = graph
        self.up_list = up_list
        self.right_list = right_list

    def __eq__(self, other):
        return (
            isinstance(other, TorusDiagram)
            and self.graph == other.graph
            and self.up_list == other.up_list
            and self.right_list == other.right_list
        )

    def __hash__(self):
        return hash((self.graph, self.up_list, self.right_list))

    def __repr__(self):
        return (
            f"TorusDiagram(order={self.graph.n}, up={list(self.up_list)}, "
            f"right={list(self.right_list)})"
        )


@dataclass(frozen=True)
class CrossingMatrix:
    """Antisymmetric per-edge crossing contributions, 1-based access."""

    n: int
    entries: tuple[tuple[tuple[int, int], ...], ...]

    def entry(self, u: int, v: int) -> tuple[int, int]:
        return self.entries[u - 1][v - 1]


def crossing_matrix(d: TorusDiagram) -> CrossingMatrix:
    n = d.graph.n
    rows = [[(0, 0)] * n for _ in range(n)]

    def bump(u, v, dp, dq):
        p, q = rows[u - 1][v - 1]
        rows[u - 1][v - 1] = (p + dp, q + dq)
        p, q = rows[v - 1][u - 1]
        rows[v - 1][u - 1] = (p - dp, q - dq)

    for u, v in d.up_list:
        bump(u, v, 1, 0)
    for u, v in d.right_list:
        bump(u, v, 0, 1)
    return CrossingMatrix(n, tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class SlopeClass:
    """Reduced slope pair; (0, 0) is the inessential class.

    Reduction divides by gcd(|P|, |Q|) and normalizes the sign so that
    q > 0, or p > 0 when q == 0.
    """

    p: int
    q: int

    @classmethod
    def from_sums(cls, p: int, q: int) -> "SlopeClass":
        if p == 0 and q == 0:
            return cls(0, 0)
        g = gcd(abs(p), abs(q))
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        return cls(p, q)

    @property
    def is_inessential(self) -> bool:
        return self.p == 0 and self.q == 0

    @property
    def is_linking(self) -> bool:
        """A pair of disjoint cycles of this slope forms a nontrivial link."""
        return self.p != 0 and self.q != 0

    def __str__(self) -> str:
        if self.is_inessential:
            return "inessential"
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class LinkWitness:
    """Two vertex-disjoint cycles sharing a linking slope class."""

    cycle_a: tuple[int, ...]
    cycle_b: tuple[int, ...]
    slope: SlopeClass


def cycle_crossing_sums(
    d: TorusDiagram, cycle: tuple[int, ...], m: CrossingMatrix | None = None
) -> tuple[int, int]:
    """Componentwise sum of crossing entries along the cycle traversal."""
    if not is_cycle_of(d.graph, tuple(cycle)):
        raise ValueError(f"{cycle!r} is not a cycle of the diagram's graph")
    if m is None:
        m = crossing_matrix(d)
    p = q = 0
    k = len(cycle)
    for i in range(k):
        dp, dq = m.entry(cycle[i], cycle[(i + 1) % k])
        p += dp
        q += dq
    return p, q


def cycle_slope(d: TorusDiagram, cycle: tuple[int, ...]) -> SlopeClass:
    """Slope class of a cycle of the diagram's graph."""
    return SlopeClass.from_sums(*cycle_crossing_sums(d, cycle))


def _candidate_cycles(d: TorusDiagram, min_len: int | None, max_len: int | None):
    n = d.graph.n
    lo = 3 if min_len is None else min_len
    hi = n - 3 if max_len is None else max_len
    hi = min(hi, n)
    if hi < lo:
        return []
    return enumerate_cycles(d.graph, lo, hi)


def find_links(
    d: TorusDiagram, min_len: int | None = None, max_len: int | None = None
) -> list[LinkWitness]:
    """All linked pairs among cycles of length min_len..max_len.

    Defaults cover lengths 3..n-3 (a disjoint partner needs 3 vertices).
    Cycles whose crossing sums have both components nonzero are grouped by
    reduced slope; every vertex-disjoint pair within a group is a link.
    Output is sorted by the cycle representatives.
    """
    m = crossing_matrix(d)
    by_slope: dict[SlopeClass, list[tuple[int, ...]]] = {}
    for cyc in _candidate_cycles(d, min_len, max_len):
        p, q = cycle_crossing_sums(d, cyc, m)
        if p != 0 and q != 0:
            by_slope.setdefault(SlopeClass.from_sums(p, q), []).append(cyc)
    witnesses = []
    for slope, cycles in by_slope.items():
        masks = [cycle_vertex_mask(c) for c in cycles]
        for i in range(len(cycles)):
            for j in range(i + 1, len(cycles)):
                if masks[i] & masks[j] == 0:
                    a, b = sorted((cycles[i], cycles[j]))
                    witnesses.append(LinkWitness(a, b, slope))
    witnesses.sort(key=lambda w: (w.cycle_a, w.cycle_b))
    return witnesses


def is_linkless(d: TorusDiagram) -> bool:
    """True iff the diagram contains no linked cycle pair."""
    return not find_links(d)


def embedding_warnings(
    d: TorusDiagram, min_len: int | None = None, max_len: int | None = None
) -> list[str]:
    """Diagnostics for diagrams that cannot be genuine embeddings.

    Vertex-disjoint cycles drawn without crossings on the torus must share
    one slope class; a disjoint essential pair with different slopes means
    the crossing lists do not describe a real embedding.
    """
    m = crossing_matrix(d)
    essential: list[tuple[tuple[int, ...], SlopeClass]] = []
    for cyc in _candidate_cycles(d, min_len, max_len):
        p, q = cycle_crossing_sums(d, cyc, m)
        if (p, q) != (0, 0):
            essential.append((cyc, SlopeClass.from_sums(p, q)))
    warnings = []
    for i in range(len(essential)):
        ci, si = essential[i]
        mi = cycle_vertex_mask(ci)
        for j in range(i + 1, len(essential)):
            cj, sj = essential[j]
            if si != sj and mi & cycle_vertex_mask(cj) == 0:
                warnings.append(
                    "disjoint essential cycles "
                    f"{_cycle_text(ci)} and {_cycle_text(cj)} have slopes "
                    f"{si} and {sj}; not a valid embedding"
                )
    return warnings


def torus_link_linking_number(m: int, n: int) -> Fraction:
    """Linking number of the torus link with parameters (m, n): the link
    made of gcd(m, n) parallel copies of a slope-m/n knot."""
    if m == 0 and n == 0:
        raise ValueError("(0, 0) does not define a torus link")
    d = gcd(abs(m), abs(n))
    return Fraction(m * n, 2) * (1 - Fraction(1, d))


# -- embedding file format ---------------------------------------------------
#
# line 1: order <n>
# line 2: edges <u>-<v> ...
# line 3: up <u>-><v> ...      (traversal u->v exits the top)
# line 4: right <u>-><v> ...   (traversal u->v exits the right)


def parse_embedding(text: str) -> TorusDiagram:
    lines = [ln for ln in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != 4:
        raise ParseError(f"expected 4 lines, got {len(lines)}")
    order = _parse_keyword_line(lines[0], "order", 1)
    if len(order) != 1:
        raise ParseError("order line must hold a single integer", line=1)
    try:
        n = int(order[0])
    except ValueError:
        raise ParseError(f"bad order {order[0]!r}", line=1) from None
    edges = [_parse_pair(tok, "-", 2) for tok in _parse_keyword_line(lines[1], "edges", 2)]
    up = [_parse_pair(tok, "->", 3) for tok in _parse_keyword_line(lines[2], "up", 3)]
    right = [
        _parse_pair(tok, "->", 4) for tok in _parse_keyword_line(lines[3], "right", 4)
    ]
    try:
        graph = Graph(n, edges)
        return TorusDiagram(graph, up, right)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_embedding(d: TorusDiagram) -> str:
    lines = [
        f"order {d.graph.n}",
        "edges " + " ".join(f"{u}-{v}" for u, v in d.graph.edges),
        "up " + " ".join(f"{u}->{v}" for u, v in d.up_list),
        "right " + " ".join(f"{u}->{v}" for u, v in d.right_list),
    ]
    return "\n".join(line.rstrip() for line in lines) + "\n"


def _parse_keyword_line(line: str, keyword: str, lineno: int) -> list[str]:
    tokens = line.split()
    if not tokens or tokens[0] != keyword:
        raise ParseError(f"expected line to start with {keyword!r}", line=lineno)
    return tokens[1:]


def _parse_pair(token: str, sep: str, lineno: int) -> tuple[int, int]:
    parts = token.split(sep)
    if len(parts) != 2:
        raise ParseError(f"bad pair {token!r}", line=lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(f"bad pair {token!r}", line=lineno) from None


def _cycle_text(cycle: tuple[int, ...]) -> str:
    return "[" + " ".join(str(v) for v in cycle) + "]"
