import random
from fractions import Fraction as F

import networkx as nx
import pytest

from pathcomp.approx import (
    H,
    V,
    CubicalModel,
    UnionFind,
    build_k_n,
    closed_form_counts,
    gap_census,
    hausdorff_bound,
    homology,
    model_report,
    sampled_hausdorff,
    trace_cells,
    trace_of_k,
)
from pathcomp.errors import ResolutionTooLarge
from pathcomp.sampling import random_point_k, random_rational
from pathcomp.space_k import member_k


def test_union_find():
    uf = UnionFind(5)
    assert uf.union(0, 1) and uf.union(3, 4)
    assert not uf.union(1, 0)
    assert uf.count == 3
    assert uf.find(0) == uf.find(1) != uf.find(3)


def test_k0_is_unit_square():
    m = build_k_n(0)
    assert m.counts() == (4, 4, 1)
    assert m.squares == {(0, 0)}


def test_k1_structure():
    m = build_k_n(1)
    assert m.squares == {(0, r) for r in range(3)} | {(2, r) for r in range(3)}
    # the gap column keeps only its top edge
    assert (H, 1, 3) in m.edges and (H, 1, 0) not in m.edges
    assert not any((1, r) in m.squares for r in range(3))


def test_k2_bottom_bridges():
    m = build_k_n(2)
    assert (H, 1, 0) in m.edges and (H, 7, 0) in m.edges
    assert (H, 1, 9) not in m.edges
    assert all((H, c, 9) in m.edges for c in (3, 4, 5))


@pytest.mark.parametrize("n", range(6))
def test_counts_match_closed_forms(n):
    m = build_k_n(n)
    assert m.is_closed()
    assert m.counts() == closed_form_counts(n)
    census = gap_census(m)
    assert sorted(census) == list(range(1, n + 1))
    for j, gaps in census.items():
        assert len(gaps) == 2 ** (j - 1)
        assert set(gaps.values()) == {3 ** (n - j)}


@pytest.mark.parametrize("n", range(6))
def test_homology_contractible(n):
    rep = homology(build_k_n(n))
    assert (rep.beta0, rep.beta1, rep.euler) == (1, 0, 1)


def test_homology_matches_networkx():
    for n in range(4):
        m = build_k_n(n)
        g = nx.Graph()
        g.add_nodes_from(m.vertices)
        for kind, i, j in m.edges:
            g.add_edge((i, j), (i + 1, j) if kind == H else (i, j + 1))
        assert nx.number_connected_components(g) == homology(m).beta0
        # cycle rank of the 1-skeleton minus filled squares
        assert g.number_of_edges() - g.number_of_nodes() + 1 - len(m.squares) == homology(m).beta1


def test_strip_complement_has_two_pieces():
    rep = homology(build_k_n(1, bridges=False))
    assert (rep.beta0, rep.beta1) == (2, 0)


def test_annulus_has_one_hole():
    squares = [(c, r) for c in range(3) for r in range(3) if (c, r) != (1, 1)]
    rep = homology(CubicalModel.from_cells(1, squares))
    assert (rep.beta0, rep.beta1) == (1, 1)


@pytest.mark.parametrize("n", range(5))
def test_monotone_nesting(n):
    assert build_k_n(n + 1).is_subcomplex_of(build_k_n(n).subdivide())


def test_membership_consistency():
    rng = random.Random(1)
    models = [build_k_n(n) for n in range(6)]
    hits = 0
    for _ in range(1000):
        if rng.random() < 0.5:
            p = random_point_k(rng)
            x, y = p.x, p.y
        else:
            x, y = random_rational(rng), random_rational(rng)
        if member_k(x, y):
            hits += 1
            assert all(m.contains_point(x, y) for m in models)
    assert hits > 400


def test_contains_point_edges():
    m = build_k_n(1)
    assert m.contains_point(F(1, 2), 1)
    assert not m.contains_point(F(1, 2), F(99, 100))
    assert m.contains_point(F(1, 3), F(1, 2))
    assert not m.contains_point(F(1, 2), 0)


def test_resolution_cap():
    with pytest.raises(ResolutionTooLarge):
        build_k_n(8)
    with pytest.raises(ResolutionTooLarge):
        build_k_n(3, max_level=2)


def test_hausdorff_bound():
    assert hausdorff_bound(0) == F(1, 3)
    assert hausdorff_bound(2) == F(1, 27)
    assert sampled_hausdorff(3) <= F(1, 81)
    assert sampled_hausdorff(2) <= hausdorff_bound(2)


def test_trace_level_one():
    cells = trace_cells(1)
    assert {(0, r) for r in range(3)} <= cells and {(2, r) for r in range(3)} <= cells
    assert (1, 2) in cells
    rep = trace_of_k(1)
    assert rep.connected


def test_trace_level_zero():
    rep = trace_of_k(0)
    assert rep.cells == {(0, 0)} and rep.connected


@pytest.mark.parametrize("n", range(1, 5))
def test_trace_connected_but_many_components(n):
    rep = trace_of_k(n)
    assert rep.connected
    assert rep.distinct_components >= 2**n


def test_trace_cells_meet_k():
    # every listed cell contains a point of K on a fine grid; unlisted cells contain none
    n = 2
    size = 3**n
    cells = trace_cells(n)
    fine = 3 ** (n + 2)
    hit = set()
    for i in range(fine + 1):
        for j in range(fine + 1):
            x, y = F(i, fine), F(j, fine)
            if member_k(x, y):
                cx, cy = x * size, y * size
                for c in {int(cx) - (cx.denominator == 1), int(cx)}:
                    for r in {int(cy) - (cy.denominator == 1), int(cy)}:
                        if 0 <= c < size and 0 <= r < size:
                            hit.add((c, r))
    assert hit == cells


def test_model_report():
    rep = model_report(2)
    assert rep["beta0"] == 1 and rep["beta1"] == 0 and rep["hausdorffBound"] == "1/27"
    assert rep["cellCounts"] == {"vertices": 82, "edges": 117, "squares": 36}


def test_vertical_edge_membership():
    m = CubicalModel.from_cells(1, edges=[(V, 1, 0)])
    assert m.contains_point(F(1, 3), F(1, 6))
    assert not m.contains_point(F(1, 3), F(1, 2))
