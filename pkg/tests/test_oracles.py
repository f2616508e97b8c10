import random
from itertools import combinations

import pytest

from torlink import (
    Graph,
    ObstructionDB,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    encode_graph6,
    is_isomorphic,
    is_maxnil,
    is_mtn,
    is_nil,
    is_tn,
    is_toroidal,
    petersen_family,
    petersen_graph,
)
from torlink.canonical import canonical_form
from torlink.errors import DataValidationError, UnsupportedOrderError
from torlink.graphs import all_graphs_of_order
from torlink.oracles import delta_y, order8_obstructions, y_delta

from bruteforce import random_graph


def k6_minus_e() -> Graph:
    return complete_graph(6).delete_edge((1, 2))


# -- Petersen family ----------------------------------------------------------


def test_family_has_seven_members():
    assert len(petersen_family()) == 7


def test_family_orders_and_sizes():
    fam = petersen_family()
    assert sorted(g.n for g in fam) == [6, 7, 7, 8, 8, 9, 10]
    assert all(g.size == 15 for g in fam)


def test_family_pairwise_non_isomorphic():
    fam = petersen_family()
    assert len({canonical_form(g) for g in fam}) == 7


def test_family_contains_seed_and_petersen_graph():
    fam = petersen_family()
    assert any(is_isomorphic(g, complete_graph(6)) for g in fam)
    assert any(is_isomorphic(g, petersen_graph()) for g in fam)


def test_family_closed_under_exchange_moves():
    fam = petersen_family()
    keys = {canonical_form(g) for g in fam}
    for g in fam:
        for tri in combinations(range(1, g.n + 1), 3):
            a, b, c = tri
            if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c):
                assert canonical_form(delta_y(g, tri)) in keys
        for v in range(1, g.n + 1):
            nbrs = g.neighbors(v)
            if len(nbrs) == 3 and not any(
                g.has_edge(x, y) for x, y in combinations(nbrs, 2)
            ):
                assert canonical_form(y_delta(g, v)) in keys


def test_delta_y_preserves_size():
    fam = petersen_family()
    g = fam[0]
    tri = next(
        t for t in combinations(range(1, g.n + 1), 3)
        if g.has_edge(t[0], t[1]) and g.has_edge(t[0], t[2]) and g.has_edge(t[1], t[2])
    )
    assert delta_y(g, tri).size == g.size


# -- nIL ----------------------------------------------------------------------


def test_is_nil_examples():
    assert is_nil(complete_graph(5))
    assert not is_nil(complete_graph(6))
    assert is_nil(k6_minus_e())
    assert not is_nil(order8_obstructions()[2])
    assert not is_nil(complete_graph(7))
    assert not is_nil(petersen_graph())


def test_nil_is_minor_closed_small():
    reps = {}
    for n in range(1, 6):
        for g in all_graphs_of_order(n):
            reps.setdefault(canonical_form(g), g)
    for g in reps.values():
        if not is_nil(g):
            continue
        for e in g.edges:
            assert is_nil(g.delete_edge(e))
            assert is_nil(g.contract_edge(e))


def test_nil_minor_closed_random_order6():
    rng = random.Random(71)
    for _ in range(30):
        g = random_graph(rng, 6, rng.uniform(0.4, 1.0))
        if not is_nil(g) or not g.edges:
            continue
        e = rng.choice(g.edges)
        assert is_nil(g.delete_edge(e))
        assert is_nil(g.contract_edge(e))


# -- obstructions and toroidality ---------------------------------------------


def test_order8_obstruction_sizes():
    assert [g.size for g in order8_obstructions()] == [25, 24, 22]
    assert all(g.n == 8 for g in order8_obstructions())


def test_order8_obstructions_pairwise_distinct():
    assert len({canonical_form(g) for g in order8_obstructions()}) == 3


def test_is_toroidal_examples():
    db = ObstructionDB.builtin()
    assert is_toroidal(complete_graph(7), db)
    assert is_toroidal(complete_graph(4), db)
    for obs in order8_obstructions():
        assert not is_toroidal(obs, db)


def test_obstruction_contractions_are_toroidal():
    db = ObstructionDB.builtin()
    for obs in order8_obstructions():
        for e in obs.edges:
            assert is_toroidal(obs.contract_edge(e), db)


def test_planar_order5_graphs_toroidal():
    db = ObstructionDB.builtin()
    for g in all_graphs_of_order(5):
        assert is_toroidal(g, db)


def test_toroidal_unsupported_order():
    db = ObstructionDB.builtin()
    with pytest.raises(UnsupportedOrderError):
        is_toroidal(complete_graph(9), db)


def test_toroidality_minor_closed_random_order8():
    db = ObstructionDB.builtin()
    rng = random.Random(73)
    for _ in range(15):
        g = random_graph(rng, 8, rng.uniform(0.6, 1.0))
        if not is_toroidal(g, db) or not g.edges:
            continue
        e = rng.choice(g.edges)
        assert is_toroidal(g.delete_edge(e), db)
        assert is_toroidal(g.contract_edge(e), db)


def test_db_supported_order_bookkeeping():
    assert ObstructionDB({}).max_supported_order == 7
    assert ObstructionDB.builtin().max_supported_order == 8
    with_gap = ObstructionDB({8: order8_obstructions(), 10: (complete_graph(10),)})
    assert with_gap.max_supported_order == 8
    both = ObstructionDB({8: order8_obstructions(), 9: ()})
    assert both.max_supported_order == 9


def test_db_rejects_bad_orders():
    with pytest.raises(DataValidationError):
        ObstructionDB({7: (complete_graph(7),)})
    with pytest.raises(DataValidationError):
        ObstructionDB({8: (complete_graph(7),)})


def test_db_from_dir(tmp_path):
    (tmp_path / "obstructions_order9.g6").write_text(
        encode_graph6(complete_graph(9)) + "\n"
    )
    db = ObstructionDB.from_dir(tmp_path)
    assert db.max_supported_order == 9
    assert len(db.by_order[8]) == 3


def test_db_from_dir_checks_order8_agreement(tmp_path):
    (tmp_path / "obstructions_order8.g6").write_text(
        encode_graph6(complete_graph(8)) + "\n"
    )
    with pytest.raises(DataValidationError):
        ObstructionDB.from_dir(tmp_path)
    good = tmp_path / "sub"
    good.mkdir()
    (good / "obstructions_order8.g6").write_text(
        "".join(encode_graph6(g) + "\n" for g in order8_obstructions())
    )
    assert ObstructionDB.from_dir(good).max_supported_order == 8


# -- TN and maximality ----------------------------------------------------------


def test_is_tn_examples():
    db = ObstructionDB.builtin()
    assert is_tn(k6_minus_e(), db)
    assert not is_tn(complete_graph(6), db)
    assert not is_tn(order8_obstructions()[2], db)


def test_is_maxnil_examples():
    assert is_maxnil(k6_minus_e())
    assert not is_maxnil(complete_graph(6))
    assert is_maxnil(complete_graph(3))
    assert is_maxnil(complete_graph(5))
    assert not is_maxnil(complete_graph(4).delete_edge((1, 2)))


def test_is_mtn_examples():
    db = ObstructionDB.builtin()
    assert is_mtn(k6_minus_e(), db)
    assert not is_mtn(complete_graph(6), db)
    for obs in order8_obstructions():
        assert not is_mtn(obs, db)


def test_maximality_implies_membership():
    db = ObstructionDB.builtin()
    rng = random.Random(79)
    for _ in range(40):
        g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.3, 1.0))
        if is_maxnil(g):
            assert is_nil(g)
        if g.n <= db.max_supported_order and is_mtn(g, db):
            assert is_tn(g, db)


def test_padded_small_graph_not_maxnil():
    padded = disjoint_union(k6_minus_e(), Graph(3))
    assert padded.n == 9
    assert not is_maxnil(padded)


def test_mtn_unsupported_order_raises():
    db = ObstructionDB.builtin()
    with pytest.raises(UnsupportedOrderError):
        is_mtn(complete_graph(9).delete_edge((1, 2)), db)


def test_bipartite_k44_minus_e_is_il():
    # A Petersen-family member itself: must not be nIL.
    assert not is_nil(complete_bipartite(4, 4).delete_edge((1, 5)))


def test_cycle_graphs_are_nil():
    for n in range(3, 10):
        assert is_nil(cycle_graph(n))
