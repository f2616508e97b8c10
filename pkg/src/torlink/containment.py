"""Subgraph and minor containment, exact, for small graphs.

Minor testing is a backtracking reduction search: while the host is larger
than the pattern, branch on single vertex deletions and edge contractions,
pruning by order and size and deduplicating states by canonical form; once
orders agree the question reduces to a spanning-subgraph embedding. Results
are memoized globally by (host, pattern) canonical form, which turns the
repeated queries made by the census and search pipelines into a shared DAG
traversal.
"""

from __future__ import annotations

from .canonical import canonical_form
from .graphs import Graph

_minor_memo: dict[tuple[bytes, bytes], bool] = {}


def is_subgraph_iso(pattern: Graph, host: Graph) -> bool:
    """True iff some injective vertex map sends pattern edges into host edges."""
    pn, hn = pattern.n, host.n
    if pn > hn or pattern.size > host.size:
        return False
    pd = pattern.degree_sequence()
    hd = host.degree_sequence()
    if any(p > h for p, h in zip(pd, hd)):
        return False
    if pn == 0:
        return True

    padj = pattern._adj
    hadj = host._adj
    order = _embedding_order(pn, padj)
    pos = {v: i for i, v in enumerate(order)}
    # Earlier-placed pattern neighbors of each vertex, by search position.
    back_edges = [
        [pos[w] for w in range(pn) if padj[v] >> w & 1 and pos[w] < i]
        for i, v in enumerate(order)
    ]
    pdeg = [padj[v].bit_count() for v in order]
    hdeg = [hadj[u].bit_count() for u in range(hn)]
    deg_ok = [
        sum(1 << u for u in range(hn) if hdeg[u] >= pdeg[i]) for i in range(pn)
    ]
    images = [0] * pn

    def place(i: int, used: int) -> bool:
        if i == pn:
            return True
        cand = deg_ok[i] & ~used
        for j in back_edges[i]:
            cand &= hadj[images[j]]
        while cand:
            low = cand & -cand
            cand ^= low
            images[i] = low.bit_length() - 1
            if place(i + 1, used | low):
                return True
        return False

    return place(0, 0)


def _embedding_order(n: int, adj: tuple[int, ...]) -> list[int]:
    """Greedy max-connectivity order: keeps the backtrack tree narrow."""
    degs = [adj[v].bit_count() for v in range(n)]
    order = [max(range(n), key=lambda v: degs[v])]
    placed = 1 << order[0]
    while len(order) < n:
        best = max(
            (v for v in range(n) if not placed >> v & 1),
            key=lambda v: ((adj[v] & placed).bit_count(), degs[v]),
        )
        order.append(best)
        placed |= 1 << best
    return order


def has_minor(g: Graph, h: Graph) -> bool:
    """True iff h is obtainable from g by deletions and contractions.

    Containment is up to isomorphism. Exact; practical for orders <= 12.
    """
    if h.n == 0:
        return True
    if h.size == 0:
        return g.n >= h.n
    return _has_minor(g, h, canonical_form(h))


def _has_minor(g: Graph, h: Graph, h_key: bytes) -> bool:
    if g.n < h.n or g.size < h.size:
        return False
    if is_subgraph_iso(h, g):
        # Covers the equal-order case: a spanning embedding is all that
        # deletions alone can reach.
        return True
    if g.n == h.n:
        return False
    memo_key = (canonical_form(g), h_key)
    cached = _minor_memo.get(memo_key)
    if cached is not None:
        return cached
    result = False
    for child in _reductions(g, h.size):
        if _has_minor(child, h, h_key):
            result = True
            break
    _minor_memo[memo_key] = result
    return result


def _reductions(g: Graph, min_size: int):
    """Order-reducing single steps (vertex deletion, edge contraction),
    deduplicated by canonical form and pruned by size."""
    seen: set[bytes] = set()
    for v in range(1, g.n + 1):
        child = g.delete_vertex(v)
        if child.size >= min_size:
            key = canonical_form(child)
            if key not in seen:
                seen.add(key)
                yield child
    for e in g.edges:
        child = g.contract_edge(e)
        if child.size >= min_size:
            key = canonical_form(child)
            if key not in seen:
                seen.add(key)
                yield child


def contains_any_minor(
    g: Graph, patterns: tuple[Graph, ...], memo: dict[bytes, bool]
) -> bool:
    """Does g contain any of the given graphs as a minor?

    Equivalent to any(has_minor(g, p)), but explores the reduction DAG once
    for the whole collection, with a caller-owned memo keyed by canonical
    form. The collection backing a memo must never change.
    """
    if not patterns:
        return False
    min_order = min(p.n for p in patterns)
    min_size = min(p.size for p in patterns)
    return _contains_any(g, patterns, memo, min_order, min_size)


def _contains_any(g, patterns, memo, min_order, min_size) -> bool:
    if g.n < min_order or g.size < min_size:
        return False
    key = canonical_form(g)
    cached = memo.get(key)
    if cached is not None:
        return cached
    result = False
    for p in patterns:
        if p.n <= g.n and p.size <= g.size and is_subgraph_iso(p, g):
            result = True
            break
    if not result and g.n > min_order:
        for child in _reductions(g, min_size):
            if _contains_any(child, patterns, memo, min_order, min_size):
                result = True
                break
    memo[key] = result
    return result
