import pytest

import chipfire as cf


def test_platonic_gonalities():
    expected = {"tetrahedron": 3, "octahedron": 4, "cube": 4, "dodecahedron": 6, "icosahedron": 9}
    for name, gon in expected.items():
        r = cf.gonality(cf.Graph.family(name))
        assert r["exact"]
        assert r["gonality"] == gon
        assert sum(r["winning_divisor"]) == gon


def test_graph_construction():
    g = cf.Graph(3, [(0, 1), (1, 2), (2, 0), (0, 1)])
    assert g.vertex_count == 3
    assert g.edge_count == 4
    assert g.genus() == 2
    assert (0, 1, 2) in g.edges
    with pytest.raises(ValueError):
        cf.Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        cf.Graph.family("nosuch")


def test_dhar_and_rank():
    k4 = cf.Graph.family("complete", 4)
    assert cf.q_reduce(k4, [3, 0, 0, 0], 0) == [3, 0, 0, 0]
    assert cf.q_reduce(k4, [3, 0, 0, 0], 3) == [0, 1, 1, 1]
    burned, unburned = cf.burn(k4, [0, 1, 1, 1], 3)
    assert cf.burn(k4, [0, 1, 1, 1], 0) == ([0], [1, 2, 3])
    assert burned == [0, 1, 2, 3] and unburned == []
    assert cf.is_winnable(k4, [3, 0, 0, -1])
    assert not cf.is_winnable(k4, [2, 0, 0, -1])
    assert not cf.is_winnable(k4, [0, 0, 0, -1])
    assert cf.rank(k4, [3, 0, 0, 0]) == 1
    assert cf.rank(k4, [0, 0, 0, -1]) == -1
    assert cf.is_equivalent(k4, [3, 0, 0, 0], [0, 1, 1, 1])
    assert cf.fire_set(k4, [3, 0, 0, 0], [0]) == [0, 1, 1, 1]
    assert cf.canonical_divisor(k4) == [1, 1, 1, 1]


def test_winning_divisors_and_bounds():
    k4 = cf.Graph.family("complete", 4)
    assert len(cf.winning_divisors(k4, 3)) == 8
    b = cf.bounds(cf.Graph.family("octahedron"))
    assert max(e["value"] for e in b["lower"]) == 4
    assert min(e["value"] for e in b["upper"]) == 4
    assert cf.higher_gonality(cf.Graph.family("complete", 3), 2)["gonality"] == 3
    partial = cf.gonality(cf.Graph.family("icosahedron"), max_candidates=1)
    assert partial["gonality"] is None and partial["lower"] == 8 and partial["upper"] == 9


def test_certificates():
    ico = cf.Graph.family("icosahedron")
    o = cf.uniform_scramble_order(ico, 2)
    assert (o["hitting_number"], o["egg_cut_number"], o["order"]) == (9, 8, 8)
    cube = cf.Graph.family("cube")
    assert cf.scramble_order(cube, [[0, 4], [1, 5], [2, 6], [3, 7]])["order"] == 4
    oct_ = cf.Graph.family("octahedron")
    assert cf.bramble_order(oct_, [[0], [1], [2], [3, 4], [3, 5], [4, 5]]) == 5
    with pytest.raises(ValueError):
        cf.bramble_order(cf.Graph.family("path", 5), [[0], [4]])
    placement = [1, 1] + [0] * 7 + [2, 2, 0]
    assert cf.treecut_width(ico, 3, [(0, 1), (0, 2)], placement) == 8
    holds, witness = cf.verify_outdegree_bounds(cf.Graph.family("dodecahedron"), 6, 10, 7)
    assert not holds and len(witness) == 6


def test_parking():
    assert len(cf.unwinnable_placements(4)) == 16
    assert cf.unwinnable_placements(4)[10] == [2, 1, 0]
    assert cf.verify_parking_bijection(5)
    assert cf.is_parking_function([3, 2, 1])
    assert not cf.is_parking_function([2, 2, 2])
    assert len(cf.parking_functions(3)) == 16


def test_spread():
    ico = cf.Graph.family("icosahedron")
    s = cf.spread_representative(ico, [8] + [0] * 11)
    assert s is not None and sum(s) == 8
    assert all(c <= 4 for c in s)
