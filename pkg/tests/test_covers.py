import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from asdim_covers import (
    Graph, InputError, Subspace, annulus_cover, cactus_cover, chain_partition, coarse_cactus_cover,
    components, lemma0_cover, planar_cover, separation_check, verify_cover,
)
from asdim_covers.decomposition import band
from asdim_covers.generators import cactus_random, cycle, grid, path, random_planar, theta
from oracles import bfs, closure_classes, floyd_warshall


def vsets(cover):
    return sorted(tuple(s.vertices.tolist()) for s in cover.sets)


def is_partition(cover, vertices):
    allv = np.concatenate([s.vertices for s in cover.sets]) if cover.sets else np.array([], dtype=int)
    return sorted(allv.tolist()) == sorted(np.asarray(vertices).tolist())


# cactus


def test_cactus_single_vertex():
    assert vsets(cactus_cover(Graph(1), 0, 1)) == [(0,)]


def test_cactus_path_intervals():
    c = cactus_cover(path(500), 0, 1)
    assert vsets(c) == [tuple(range(k, k + 100)) for k in range(0, 500, 100)]
    assert c.params["N"] == 100 and c.params["gap"] == 10


def test_cactus_cycle_class_counts():
    g = cycle(1000)
    c = cactus_cover(g, 0, 1)
    counts = [sum(1 for s in c.sets if s.annulus == k) for k in range(6)]
    assert counts == [1, 2, 2, 2, 1, 1]
    dist = lambda u, v: min(abs(u - v), 1000 - abs(u - v))
    for k in range(6):
        ring = [v for v in range(1000) if k * 100 <= dist(0, v) < (k + 1) * 100]
        got = sorted(tuple(s.vertices.tolist()) for s in c.sets if s.annulus == k)
        assert got == closure_classes(ring, dist, 10)


def test_cactus_bad_scale():
    with pytest.raises(InputError):
        cactus_cover(path(3), 0, 0)


def test_cactus_labels_and_order():
    c = cactus_cover(cycle(1000), 0, 1)
    assert [s.label for s in c.sets][:3] == ["A0.K0", "A1.K0", "A2.K0"]
    mins = [int(s.vertices[0]) for s in c.sets]
    assert mins == sorted(mins)


def test_disconnected_graph_is_covered_per_component():
    g = Graph(7, [(0, 1), (1, 2), (3, 4), (5, 6)])
    c = cactus_cover(g, 4, 1)
    assert is_partition(c, range(7))
    assert {s.label.split(".")[0] for s in c.sets} == {"G0", "G1", "G2"}
    assert verify_cover(g, c).passed


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 30), st.integers(3, 12), st.integers(0, 4), st.integers(0, 3), st.integers(0, 10**6),
       st.sampled_from([0.2, 0.5, 1, 2]))
def test_cactus_guarantee_small(c, ell, bridge, window, seed, m):
    g = cactus_random(c, ell, seed, bridge, window)
    base = seed % g.n
    rep = verify_cover(g, cactus_cover(g, base, m))
    assert rep.passed, rep.violations[:3]
    assert rep.diameter_bound == 1000 * m and rep.multiplicity_bound == 2


# coarse cactus


def test_coarse_parameters_collapse():
    g = random_planar(15, 15, 0.4, 3)
    a = coarse_cactus_cover(g, 0, 1, 5)
    b = coarse_cactus_cover(g, 0, 5, 5)
    assert vsets(a) == vsets(b)
    assert a.params["scale"] == 5 and a.params["N"] == 500 and a.params["gap"] == 50


def test_coarse_theta_matches_closure():
    g = theta(12, 12, 12)
    c = coarse_cactus_cover(g, 0, 1, 1)
    D = floyd_warshall(g.n, g.edges)
    assert {s.annulus for s in c.sets} == {0}
    assert vsets(c) == closure_classes(range(g.n), lambda u, v: D[u][v], 10)


def test_coarse_cycle_verifies():
    g = cycle(2000)
    c = coarse_cactus_cover(g, 0, 2, 2)
    rep = verify_cover(g, c)
    assert rep.passed and rep.diameter_bound == 2 * 10**5
    assert rep.max_set_diameter <= 2 * 10**5


def test_coarse_on_induced_subspace_uses_path_metric():
    g = grid(30, 3)
    # a U-shaped subset: its two arms are close in the grid but far along the subset
    keep = [y * 30 + x for y in (0, 2) for x in range(30)] + [1 * 30 + 29]
    sub = Subspace(g, keep)
    c = coarse_cactus_cover(sub, 0, 0.1, 0.1)  # gap 1
    assert is_partition(c, keep)
    assert verify_cover(sub, c).passed


# lemma0


def test_lemma0_path_segment():
    g = path(3000)
    comp = np.arange(100, 1300)
    c = lemma0_cover(g, comp, 1, 1)
    assert vsets(c) == [tuple(range(100, 600)), tuple(range(600, 1100)), tuple(range(1100, 1300))]
    assert c.params["diameter_bound"] == 5 * 10**5


def test_lemma0_cycle_arc_matches_closure():
    n = 4000
    g = cycle(n)
    arc = [v for v in range(n) if 1000 <= v < 2600]
    c = lemma0_cover(g, arc, 1, 1)
    d = bfs(n, g.edges, arc[0], allowed=set(arc))  # path metric of the arc
    dist = lambda u, v: abs(d[u] - d[v])
    got = sorted(tuple(s.vertices.tolist()) for s in c.sets)
    want = []
    for k in range(4):
        ring = [v for v in arc if k * 500 <= d[v] < (k + 1) * 500]
        want += closure_classes(ring, dist, 50)
    assert got == sorted(want)


def test_lemma0_small_component_is_one_set():
    g = grid(20, 20)
    comp = [v for v in range(400) if v % 20 < 10]
    assert len(lemma0_cover(g, comp, 1, 1).sets) == 1


def test_lemma0_empty():
    assert lemma0_cover(path(4), [], 1, 1).sets == []


# annulus cover


def test_annulus_small_radius_is_one_set():
    g = grid(21, 21)
    c = annulus_cover(g, 220, 0, 3)
    assert vsets(c) == [tuple(band(g.distances(220), g.vertices, 0, 3).tolist())]
    c = annulus_cover(g, 220, 6, 3)
    assert len(c.sets) == 1


def test_annulus_grid_verifies():
    g = grid(101, 101)
    base = 50 * 101 + 50
    c = annulus_cover(g, base, 30, 3)
    ring = band(g.distances(base), g.vertices, 30, 33)
    space = Subspace(g, ring, "ambient")
    rep = verify_cover(space, c, 10**6 * 3, 3, 2)
    assert rep.passed and rep.partition_ok and rep.coverage_ok


def test_annulus_cycle_two_arcs_separated():
    g = cycle(10000)
    c = annulus_cover(g, 0, 1000, 5)
    assert len(c.sets) == 2
    ok, gap = separation_check(g, [s.vertices for s in c.sets], 10)
    assert ok and gap > 10


def test_annulus_components_are_separated():
    g = random_planar(40, 40, 0.3, 9)
    s, m = 24, 2
    dist = g.distances(0)
    inner = band(dist, g.vertices, s - m, s + 2 * m)
    comps = components(Subspace(g, inner))
    target = band(dist, g.vertices, s, s + m)
    pieces = [np.intersect1d(C, target) for C in comps]
    pieces = [p for p in pieces if p.size]
    if len(pieces) > 1:
        ok, gap = separation_check(g, pieces, 2 * m)
        assert ok


def test_annulus_sets_refine_lemma0_classes():
    g = random_planar(30, 30, 0.35, 2)
    s, m = 20, 2
    c = annulus_cover(g, 0, s, m)
    dist = g.distances(0)
    outer = band(dist, g.vertices, s - 2 * m, s + 3 * m)
    for cs in c.sets:
        Cplus = next(C for C in components(Subspace(g, outer)) if np.isin(cs.vertices, C).all())
        inner = lemma0_cover(g, Cplus, m, m)
        hits = [k for k in inner.sets if np.isin(cs.vertices, k.vertices).all()]
        assert len(hits) == 1


def test_annulus_bad_params():
    with pytest.raises(InputError):
        annulus_cover(path(5), 0, -1, 1)
    with pytest.raises(InputError):
        annulus_cover(path(5), 0, 1, 0)


# planar pipeline


def test_planar_single_vertex():
    assert vsets(planar_cover(Graph(1), 0, 1)) == [(0,)]


def test_planar_long_path():
    g = path(10000)
    c = planar_cover(g, 0, 1)
    assert is_partition(c, range(10000))
    for s in c.sets:
        v = s.vertices
        assert v[-1] - v[0] + 1 == v.size  # an interval
    rep = verify_cover(g, c, 3 * 10**6, 1, 4)
    assert rep.passed


def test_planar_params():
    c = planar_cover(grid(10, 10), 0, 2)
    assert c.params["m"] == 6 and c.params["diameter_bound"] == 6 * 10**6
    assert c.params["radius"] == 2 and c.params["multiplicity_bound"] == 4
    assert c.algorithm == "planar-pipeline"


def test_planar_sets_stay_in_one_annulus():
    g = random_planar(50, 50, 0.3, 5)
    rho = 2
    c = planar_cover(g, 7, rho)
    k = np.floor(g.distances(7) / (3 * rho))
    for s in c.sets:
        assert len(set(k[s.vertices].tolist())) == 1
        assert set(k[s.vertices].tolist()) == {s.annulus}


def test_planar_disconnected():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    c = planar_cover(g, 3, 1)
    assert is_partition(c, range(5))
    assert all(s.label.startswith(("G0.", "G1.")) for s in c.sets)


def test_planar_bad_rho():
    with pytest.raises(InputError):
        planar_cover(path(3), 0, 0)


def test_planar_workers_do_not_change_output():
    g = random_planar(40, 40, 0.4, 1)
    a = planar_cover(g, 0, 1, workers=1)
    b = planar_cover(g, 0, 1, workers=4)
    assert [(s.label, s.vertices.tolist()) for s in a.sets] == [(s.label, s.vertices.tolist()) for s in b.sets]


@settings(max_examples=15, deadline=None)
@given(st.integers(3, 25), st.integers(3, 25), st.floats(0, 0.8), st.integers(0, 10**6), st.sampled_from([1, 2, 3]))
def test_planar_guarantee_small(w, h, p, seed, rho):
    g = random_planar(w, h, p, seed)
    base = seed % g.n
    c = planar_cover(g, base, rho)
    rep = verify_cover(g, c)
    assert rep.passed and rep.partition_ok
    assert rep.max_multiplicity <= 4


def test_unknown_algorithm_and_duplicate_labels():
    from asdim_covers import Cover, CoverSet

    with pytest.raises(InputError):
        Cover("magic", {}, 0, [])
    with pytest.raises(InputError):
        Cover("cactus", {}, 0, [CoverSet("x", np.array([0])), CoverSet("x", np.array([1]))])
