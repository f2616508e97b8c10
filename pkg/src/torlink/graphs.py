"""Immutable simple graphs of small order, with value semantics.

Vertices are the integers 1..n in every public interface. Internally each
vertex keeps an adjacency bitmask, which keeps the heavy combinatorial
routines (isomorphism, containment, enumeration) cheap at the orders this
package supports (n <= 12).
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 12

EdgePair = tuple[int, int]


class Graph:
    """A labeled simple undirected graph on vertices 1..n.

    Graphs are immutable values: every mutation-style operation returns a
    new graph. Equality and hashing are on the labeled structure.
    """

    __slots__ = ("n", "_adj", "_canon")

    def __init__(self, n: int, edges: Iterable[EdgePair] = ()):
        if not 0 <= n <= MAX_ORDER:
            raise ValueError(f"order must be between 0 and {MAX_ORDER}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range 1..{n}")
            adj[u - 1] |= 1 << (v - 1)
            adj[v - 1] |= 1 << (u - 1)
        self.n = n
        self._adj = tuple(adj)
        self._canon = None

    @classmethod
    def _from_masks(cls, masks: Iterable[int]) -> "Graph":
        g = object.__new__(cls)
        g._adj = tuple(masks)
        g.n = len(g._adj)
        g._canon = None
        return g

    # -- basic queries ----------------------------------------------------

    @property
    def edges(self) -> tuple[EdgePair, ...]:
        """All edges as sorted (u, v) pairs with u < v."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u + 1, v + 1))
                rest >>= 1
                v += 1
        return tuple(out)

    @property
    def size(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def degree(self, v: int) -> int:
        return self._adj[v - 1].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees in descending order (an isomorphism invariant)."""
        return tuple(sorted(self.degrees(), reverse=True))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = self._adj[v - 1]
        return tuple(i + 1 for i in range(self.n) if m >> i & 1)

    def adjacency_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask (bit i-1 set for vertex i)."""
        return self._adj[v - 1]

    def non_edges(self) -> tuple[EdgePair, ...]:
        """Vertex pairs not joined by an edge, in lexicographic order."""
        return tuple(
            (u, v)
            for u, v in combinations(range(1, self.n + 1), 2)
            if not self.has_edge(u, v)
        )

    # -- mutation-style operations (value semantics) ----------------------

    def add_edge(self, e: EdgePair) -> "Graph":
        """New graph with edge e added; e must not already be present."""
        u, v = e
        if u == v or not (1 <= u <= self.n and 1 <= v <= self.n):
            raise ValueError(f"invalid edge ({u},{v}) for order {self.n}")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) already present")
        masks = list(self._adj)
        masks[u - 1] |= 1 << (v - 1)
        masks[v - 1] |= 1 << (u - 1)
        return Graph._from_masks(masks)

    def delete_edge(self, e: EdgePair) -> "Graph":
        """New graph with edge e removed; e must be present."""
        u, v = e
        if not (1 <= u <= self.n and 1 <= v <= self.n) or not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        masks = list(self._adj)
        masks[u - 1] &= ~(1 << (v - 1))
        masks[v - 1] &= ~(1 << (u - 1))
        return Graph._from_masks(masks)

    def contract_edge(self, e: EdgePair) -> "Graph":
        """Merge the endpoints of e, dropping loops and parallel edges.

        The merged vertex takes the smaller endpoint's slot; remaining
        vertices are relabeled to 1..n-1 preserving their order.
        """
        u, v = e
        if not (1 <= u <= self.n and 1 <= v <= self.n) or not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        keep, gone = (u - 1, v - 1) if u < v else (v - 1, u - 1)
        masks = list(self._adj)
        masks[keep] |= masks[gone]
        masks[keep] &= ~(1 << keep | 1 << gone)
        for w in range(self.n):
            if w != keep and masks[gone] >> w & 1:
                masks[w] |= 1 << keep
        return Graph._from_masks(_drop_slot(masks, gone, self.n))

    def delete_vertex(self, v: int) -> "Graph":
        """New graph without vertex v; others relabeled to 1..n-1."""
        if not 1 <= v <= self.n:
            raise ValueError(f"vertex {v} out of range")
        return Graph._from_masks(_drop_slot(list(self._adj), v - 1, self.n))

    def relabel(self, perm: dict[int, int]) -> "Graph":
        """Apply the bijection perm (old label -> new label) to vertices."""
        if sorted(perm) != list(range(1, self.n + 1)) or sorted(
            perm.values()
        ) != list(range(1, self.n + 1)):
            raise ValueError("perm must be a bijection of 1..n")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._from_masks(
            (full & ~m & ~(1 << i)) for i, m in enumerate(self._adj)
        )

    # -- connectivity ------------------------------------------------------

    def is_connected(self) -> bool:
        """True iff the graph has exactly one component (n >= 1)."""
        if self.n == 0:
            return False
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            while frontier:
                low = frontier & -frontier
                nxt |= self._adj[low.bit_length() - 1]
                frontier ^= low
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self._adj == other._adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges)!r})"


def _drop_slot(masks: list[int], slot: int, n: int) -> list[int]:
    """Remove one vertex slot from a mask list, shifting higher bits down."""
    low = (1 << slot) - 1
    out = []
    for w in range(n):
        if w == slot:
            continue
        m = masks[w]
        out.append((m & low) | ((m >> (slot + 1)) << slot))
    return out


# -- standard constructions -----------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])


def petersen_graph() -> Graph:
    """Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5."""
    edges = [(i, i % 5 + 1) for i in range(1, 6)]
    edges += [(5 + i, 5 + (i + 1) % 5 + 1) for i in range(1, 6)]
    edges += [(i, i + 5) for i in range(1, 6)]
    return Graph(10, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return Graph(g.n + h.n, edges)


# -- cycle enumeration ------------------------------------------------------


def enumerate_cycles(g: Graph, min_len: int, max_len: int) -> list[tuple[int, ...]]:
    """All simple cycles with length in [min_len, max_len], once each.

    Each cycle is reported as a vertex tuple in its canonical traversal:
    the smallest vertex first, continuing toward the smaller of its two
    cycle neighbors. This fixes one representative per rotation/reflection
    class, so output order is deterministic.
    """
    if not 3 <= min_len <= max_len <= max(g.n, 3):
        raise ValueError(f"invalid cycle length range [{min_len}, {max_len}]")
    adj = g._adj
    out: list[tuple[int, ...]] = []
    # Grow paths from each start s using only vertices > s, so s is the
    # cycle minimum; requiring second < last picks one direction.
    for s in range(g.n):
        s_bit = 1 << s
        above = ~((s_bit << 1) - 1)
        start_nbrs = adj[s] & above
        stack: list[tuple[int, int, list[int]]] = []
        nbrs = start_nbrs
        while nbrs:
            low = nbrs & -nbrs
            nbrs ^= low
            stack.append((low.bit_length() - 1, s_bit | low, [low.bit_length() - 1]))
        while stack:
            v, used, path = stack.pop()
            if len(path) + 1 >= min_len and adj[v] & s_bit and path[0] < v:
                out.append(tuple([s + 1] + [w + 1 for w in path]))
            if len(path) + 1 == max_len:
                continue
            ext = adj[v] & above & ~used
            while ext:
                low = ext & -ext
                ext ^= low
                w = low.bit_length() - 1
                stack.append((w, used | low, path + [w]))
    out.sort(key=lambda c: (len(c), c))
    return out


def is_cycle_of(g: Graph, vertices: tuple[int, ...]) -> bool:
    """True iff the vertex tuple traces a simple cycle of g."""
    k = len(vertices)
    if k < 3 or len(set(vertices)) != k:
        return False
    if not all(1 <= v <= g.n for v in vertices):
        return False
    return all(g.has_edge(vertices[i], vertices[(i + 1) % k]) for i in range(k))


def cycle_vertex_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def all_graphs_of_order(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^C(n,2) of them); test-scale only."""
    pairs = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(pairs)):
        yield Graph(n, [p for i, p in enumerate(pairs) if bits >> i & 1])
