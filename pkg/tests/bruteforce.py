"""Independent brute-force oracles used to validate the fast implementations.

Everything here is deliberately naive: permutations for isomorphism,
injections for subgraph containment, unmemoized recursion (with networkx
doing the bottom matching) for minors. Only usable at tiny orders.
"""

from itertools import combinations, permutations

import networkx as nx

from torlink import Graph


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(1, g.n + 1))
    out.add_edges_from(g.edges)
    return out


def well_formed(g: Graph) -> bool:
    """Adjacency masks symmetric, no self bits, no stray high bits."""
    for i, m in enumerate(g._adj):
        if m >> i & 1:
            return False
        if m >> g.n:
            return False
        for j in range(g.n):
            if (m >> j & 1) != (g._adj[j] >> i & 1):
                return False
    return True


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    gset = set(g.edges)
    for perm in permutations(range(1, h.n + 1)):
        mapping = {i + 1: perm[i] for i in range(h.n)}
        if {tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges} == set(
            h.edges
        ):
            return True
    return False


def brute_subgraph_iso(pattern: Graph, host: Graph) -> bool:
    if pattern.n > host.n:
        return False
    verts = range(1, host.n + 1)
    for chosen in permutations(verts, pattern.n):
        mapping = {i + 1: chosen[i] for i in range(pattern.n)}
        if all(host.has_edge(mapping[u], mapping[v]) for u, v in pattern.edges):
            return True
    return False


def brute_minor(g: Graph, h: Graph) -> bool:
    """Unmemoized reduction recursion; networkx does the spanning check."""
    if g.n < h.n or g.size < h.size:
        return False
    if g.n == h.n:
        matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), to_nx(h))
        return matcher.subgraph_is_monomorphic()
    for v in range(1, g.n + 1):
        if brute_minor(g.delete_vertex(v), h):
            return True
    for e in g.edges:
        if brute_minor(g.contract_edge(e), h):
            return True
    return False


def brute_cycles(g: Graph, min_len: int, max_len: int) -> set[tuple[int, ...]]:
    """All cycles as canonical tuples, from raw vertex-sequence filtering."""
    found = set()
    verts = range(1, g.n + 1)
    for k in range(min_len, max_len + 1):
        for seq in permutations(verts, k):
            if all(g.has_edge(seq[i], seq[(i + 1) % k]) for i in range(k)):
                found.add(canonical_cycle(seq))
    return found


def canonical_cycle(seq: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate to the smallest vertex, then take the smaller direction."""
    k = len(seq)
    i = seq.index(min(seq))
    rotated = seq[i:] + seq[:i]
    reverse = (rotated[0],) + tuple(reversed(rotated[1:]))
    return min(rotated, reverse)


def random_graph(rng, n: int, p: float) -> Graph:
    edges = [e for e in combinations(range(1, n + 1), 2) if rng.random() < p]
    return Graph(n, edges)
