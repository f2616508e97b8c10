import random

from torlink import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    has_minor,
    is_isomorphic,
    is_subgraph_iso,
    petersen_graph,
)
from torlink.canonical import canonical_form
from torlink.graphs import all_graphs_of_order
from torlink.oracles import order8_obstructions

from bruteforce import brute_minor, brute_subgraph_iso, random_graph


def test_k3_in_k4():
    assert is_subgraph_iso(complete_graph(3), complete_graph(4))


def test_k6_in_k8_minus_k23():
    # Dropping the two left-partite vertices leaves a complete graph.
    assert is_subgraph_iso(complete_graph(6), order8_obstructions()[2])


def test_c5_not_in_k33():
    # No odd cycles in a bipartite host.
    assert not is_subgraph_iso(cycle_graph(5), complete_bipartite(3, 3))
    assert not brute_subgraph_iso(cycle_graph(5), complete_bipartite(3, 3))


def test_subgraph_iso_matches_bruteforce():
    rng = random.Random(31)
    for _ in range(150):
        p = random_graph(rng, rng.randint(2, 5), rng.uniform(0.2, 0.9))
        h = random_graph(rng, rng.randint(p.n, 7), rng.uniform(0.2, 0.9))
        assert is_subgraph_iso(p, h) == brute_subgraph_iso(p, h)


def test_pattern_larger_than_host():
    assert not is_subgraph_iso(complete_graph(5), complete_graph(4))


def test_has_minor_reflexive_examples():
    assert has_minor(complete_graph(5), complete_graph(5))
    assert not has_minor(complete_graph(4), complete_graph(5))


def test_petersen_has_k5_minor():
    pet = petersen_graph()
    assert has_minor(pet, complete_graph(5))
    # Independent derivation: contracting the five spokes leaves K5.
    # Highest-label spoke first, so the remaining labels never shift.
    g = pet
    for spoke in [(5, 10), (4, 9), (3, 8), (2, 7), (1, 6)]:
        g = g.contract_edge(spoke)
    assert is_isomorphic(g, complete_graph(5))


def test_petersen_no_k6_minor():
    assert not has_minor(petersen_graph(), complete_graph(6))


def test_has_minor_matches_bruteforce():
    rng = random.Random(41)
    for _ in range(60):
        h = random_graph(rng, rng.randint(2, 4), rng.uniform(0.3, 0.9))
        g = random_graph(rng, rng.randint(h.n, 6), rng.uniform(0.3, 0.8))
        assert has_minor(g, h) == brute_minor(g, h)


def test_subgraph_implies_minor_exhaustive_order_le5():
    reps = []
    seen = set()
    for n in range(1, 6):
        for g in all_graphs_of_order(n):
            key = canonical_form(g)
            if key not in seen:
                seen.add(key)
                reps.append(g)
    for small in reps:
        for big in reps:
            if small.n <= big.n and is_subgraph_iso(small, big):
                assert has_minor(big, small)


def test_has_minor_reflexive_and_transitive_random():
    rng = random.Random(53)
    graphs = [random_graph(rng, rng.randint(3, 6), rng.uniform(0.3, 0.8)) for _ in range(12)]
    for g in graphs:
        assert has_minor(g, g)
    for a in graphs:
        for b in graphs:
            if not has_minor(b, a):
                continue
            for c in graphs:
                if has_minor(c, b):
                    assert has_minor(c, a)


def test_minor_via_contraction_not_subgraph():
    # C4 contracts to a triangle it does not contain as a subgraph.
    assert not is_subgraph_iso(complete_graph(3), cycle_graph(4))
    assert has_minor(cycle_graph(4), complete_graph(3))


def test_empty_pattern_minors():
    assert has_minor(complete_graph(3), Graph(2))
    assert not has_minor(complete_graph(3), Graph(4))
