"""Forbidden-minor predicates: intrinsic linking and toroidality.

A graph is nIL (admits a linkless spatial embedding) exactly when it has no
member of the Petersen family as a minor; it is toroidal exactly when it has
no toroidal obstruction as a minor. The Petersen family is generated here as
the triangle/star exchange closure of K6. The order-8 obstructions are built
from their known descriptions; obstruction lists for higher orders come from
data files.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations
from pathlib import Path

from .canonical import canonical_form, canonical_graph, is_isomorphic
from .containment import contains_any_minor
from .errors import DataValidationError, UnsupportedOrderError
from .graph6 import read_graph6_file
from .graphs import Graph, complete_graph

# Every Petersen-family member has 15 edges, so smaller graphs are nIL.
FAMILY_SIZE = 15
# No toroidal obstruction has fewer than 8 vertices.
SMALLEST_OBSTRUCTION_ORDER = 8

OBSTRUCTION_FILE_PATTERN = "obstructions_order{order}.g6"


def delta_y(g: Graph, triangle: tuple[int, int, int]) -> Graph:
    """Replace a triangle by a new degree-3 vertex joined to its corners."""
    a, b, c = triangle
    out = g.delete_edge((a, b)).delete_edge((a, c)).delete_edge((b, c))
    new = g.n + 1
    return Graph(new, list(out.edges) + [(a, new), (b, new), (c, new)])


def y_delta(g: Graph, v: int) -> Graph:
    """Replace a degree-3 vertex with pairwise non-adjacent neighbors by a
    triangle on those neighbors."""
    nbrs = g.neighbors(v)
    if len(nbrs) != 3:
        raise ValueError(f"vertex {v} does not have degree 3")
    for x, y in combinations(nbrs, 2):
        if g.has_edge(x, y):
            raise ValueError("neighbors are not pairwise non-adjacent")
    out = g
    for x, y in combinations(nbrs, 2):
        out = out.add_edge((x, y))
    return out.delete_vertex(v)


@lru_cache(maxsize=1)
def petersen_family() -> tuple[Graph, ...]:
    """The closure of K6 under both exchange moves: seven graphs.

    Star moves that would need a parallel edge are skipped, keeping every
    intermediate graph simple; the closure is still complete.
    """
    seed = canonical_graph(complete_graph(6))
    found: dict[bytes, Graph] = {canonical_form(seed): seed}
    frontier = [seed]
    while frontier:
        g = frontier.pop()
        candidates = []
        for tri in combinations(range(1, g.n + 1), 3):
            a, b, c = tri
            if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
                candidates.append(delta_y(g, tri))
        for v in range(1, g.n + 1):
            nbrs = g.neighbors(v)
            if len(nbrs) == 3 and not any(
                g.has_edge(x, y) for x, y in combinations(nbrs, 2)
            ):
                candidates.append(y_delta(g, v))
        for cand in candidates:
            key = canonical_form(cand)
            if key not in found:
                rep = canonical_graph(cand)
                found[key] = rep
                frontier.append(rep)
    return tuple(sorted(found.values(), key=lambda g: (g.n, canonical_form(g))))


_nil_memo: dict[bytes, bool] = {}


def is_nil(g: Graph) -> bool:
    """True iff g has no Petersen-family minor (linkless embeddings exist)."""
    return not contains_any_minor(g, petersen_family(), _nil_memo)


def is_maxnil(g: Graph) -> bool:
    """True iff g is nIL and every single-edge addition destroys that."""
    if not is_nil(g):
        return False
    return all(not is_nil(g.add_edge(e)) for e in g.non_edges())


def order8_obstructions() -> tuple[Graph, Graph, Graph]:
    """The three order-8 toroidal obstructions, sizes 25, 24 and 22.

    Each is K8 with a small edge set removed: a triangle; two disjoint
    edges plus a 2-edge path; all six edges between {1,2} and {3,4,5}.
    """
    k8 = complete_graph(8)
    minus_k3 = k8
    for e in [(1, 2), (1, 3), (2, 3)]:
        minus_k3 = minus_k3.delete_edge(e)
    minus_2k2_p3 = k8
    for e in [(1, 2), (3, 4), (5, 6), (6, 7)]:
        minus_2k2_p3 = minus_2k2_p3.delete_edge(e)
    minus_k23 = k8
    for u in (1, 2):
        for v in (3, 4, 5):
            minus_k23 = minus_k23.delete_edge((u, v))
    return (minus_k3, minus_2k2_p3, minus_k23)


class ObstructionDB:
    """Per-order toroidal obstruction sets with a shared minor-query cache.

    Orders below 8 are implicitly empty. A query of order n needs every
    order 8..n present; ``max_supported_order`` is the largest such n.
    """

    def __init__(self, by_order: dict[int, tuple[Graph, ...]]):
        for k, graphs in by_order.items():
            if not SMALLEST_OBSTRUCTION_ORDER <= k <= 12:
                raise DataValidationError(
                    f"obstruction order {k} outside the supported range 8..12"
                )
            for g in graphs:
                if g.n != k:
                    raise DataValidationError(
                        f"order-{g.n} graph in the order-{k} obstruction set"
                    )
        self.by_order = {k: tuple(v) for k, v in sorted(by_order.items())}
        limit = SMALLEST_OBSTRUCTION_ORDER - 1
        while limit < 12 and limit + 1 in self.by_order:
            limit += 1
        self.max_supported_order = limit
        self._patterns = tuple(
            g for k in sorted(self.by_order) for g in self.by_order[k]
        )
        self._memo: dict[bytes, bool] = {}

    @classmethod
    def builtin(cls) -> "ObstructionDB":
        """Database holding only the programmatic order-8 set."""
        return cls({8: order8_obstructions()})

    @classmethod
    def from_dir(cls, data_dir) -> "ObstructionDB":
        """Built-in order-8 set plus any obstruction files found in data_dir.

        A provided order-8 file must agree with the built-in trio.
        """
        data_dir = Path(data_dir)
        by_order: dict[int, tuple[Graph, ...]] = {8: order8_obstructions()}
        pattern = re.compile(r"obstructions_order(\d+)\.g6$")
        for path in sorted(data_dir.glob("obstructions_order*.g6")):
            m = pattern.match(path.name)
            if not m:
                continue
            order = int(m.group(1))
            graphs = read_graph6_file(path)
            if order == 8:
                builtin = by_order[8]
                if len(graphs) != len(builtin) or not all(
                    any(is_isomorphic(g, b) for b in builtin) for g in graphs
                ):
                    raise DataValidationError(
                        f"{path.name} disagrees with the built-in order-8 set"
                    )
                continue
            by_order[order] = tuple(graphs)
        return cls(by_order)

    def check_supported(self, order: int) -> None:
        if order > self.max_supported_order:
            raise UnsupportedOrderError(
                f"order {order} exceeds the database's supported "
                f"maximum {self.max_supported_order}"
            )

    def contains_obstruction_minor(self, g: Graph) -> bool:
        if not any(p.n <= g.n for p in self._patterns):
            return False
        return contains_any_minor(g, self._patterns, self._memo)


def is_toroidal(g: Graph, db: ObstructionDB) -> bool:
    """True iff g has no obstruction minor; only valid for supported orders."""
    db.check_supported(g.n)
    return not db.contains_obstruction_minor(g)


def is_tn(g: Graph, db: ObstructionDB) -> bool:
    """Toroidal and nIL."""
    db.check_supported(g.n)
    return is_nil(g) and is_toroidal(g, db)


def is_mtn(g: Graph, db: ObstructionDB) -> bool:
    """TN, and every single-edge addition leaves the TN family."""
    db.check_supported(g.n)
    if not is_tn(g, db):
        return False
    return all(not is_tn(g.add_edge(e), db) for e in g.non_edges())
