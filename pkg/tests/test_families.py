import pytest

from steinerk import FamilySpec, cartesian_product, diameter, generate
from steinerk.families import (
    complete,
    cycle,
    grid,
    hamming,
    hyper_petersen,
    hyper_petersen_lex,
    hypercube,
    mesh,
    path,
    petersen,
    spider,
    star,
    torus,
)
from steinerk import Graph
from steinerk.graphs import bfs_distances, is_connected


def _girth(g):
    # shortest cycle through each edge: remove it and measure the detour
    best = float("inf")
    for drop in g.edges:
        rest = Graph(g.order, [e for e in g.edges if e != drop])
        best = min(best, bfs_distances(rest, drop[0])[drop[1]] + 1)
    return best


def test_basic_shapes():
    assert path(5).edges == ((0, 1), (1, 2), (2, 3), (3, 4))
    assert cycle(4).size() == 4
    assert complete(5).size() == 10
    assert star(5).degree(4) == 4
    assert star(5).degree(0) == 1


def test_hypercube():
    q3 = hypercube(3)
    assert q3.order == 8 and q3.size() == 12
    assert all(q3.degree(v) == 3 for v in range(8))
    q0 = hypercube(0)
    assert q0.order == 1 and q0.size() == 0


def test_petersen_invariants():
    g = petersen()
    assert g.order == 10 and g.size() == 15
    assert all(g.degree(v) == 3 for v in range(10))
    assert diameter(g) == 2
    assert _girth(g) == 5


def test_grid_is_a_path_product():
    assert grid(3, 4) == cartesian_product(path(3), path(4)).graph
    assert mesh(3, 4) == grid(3, 4)
    assert mesh(2, 3, 4).order == 24


def test_torus_shape():
    t = torus(3, 3)
    assert t.order == 9 and t.size() == 18
    assert all(t.degree(v) == 4 for v in range(9))
    with pytest.raises(ValueError):
        torus(2, 3)


def test_hamming_generalizes_hypercube():
    assert hamming(2, 2, 2) == hypercube(3)
    h = hamming(3, 4)
    assert h.order == 12
    assert all(h.degree(v) == 2 + 3 for v in range(12))


def test_hyper_petersen_small_cases():
    assert hyper_petersen(3) == petersen()
    assert hyper_petersen_lex(3) == petersen()
    hp4 = hyper_petersen(4)
    assert hp4.order == 20 and hp4.size() == 40
    assert all(hp4.degree(v) == 4 for v in range(20))
    hl4 = hyper_petersen_lex(4)
    assert hl4.order == 20 and hl4.size() == 130
    assert is_connected(hp4) and is_connected(hl4)
    with pytest.raises(ValueError):
        hyper_petersen(2)


def test_spider_remark_shape():
    g = spider(3, 2, 1, 1, 1)
    assert g.order == 5 and g.size() == 4
    assert sorted(g.degree(v) for v in range(5)) == [1, 1, 1, 2, 3]
    assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 4))
    with pytest.raises(ValueError):
        spider(3, 3, 1, 1)  # degree sum is off by two


def test_generate_dispatch_and_errors():
    assert generate(FamilySpec("cycle", (7,))) == cycle(7)
    assert generate(FamilySpec("torus", (3, 4))) == torus(3, 4)
    assert generate(FamilySpec("petersen", ())) == petersen()
    with pytest.raises(ValueError, match="unknown family"):
        generate(FamilySpec("bogus", (3,)))
    with pytest.raises(ValueError, match="parameter"):
        generate(FamilySpec("cycle", (3, 4)))
    with pytest.raises(ValueError):
        generate(FamilySpec("cycle", (2,)))


def test_generators_are_deterministic():
    for spec in (
        FamilySpec("petersen", ()),
        FamilySpec("hamming", (3, 3)),
        FamilySpec("spider", (3, 2, 1, 1, 1)),
        FamilySpec("hyper_petersen", (4,)),
    ):
        assert generate(spec) == generate(spec)
        assert generate(spec).name == generate(spec).name
