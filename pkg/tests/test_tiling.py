import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from fftile.errors import (
    IncompleteDomain,
    NotATiling,
    UnsupportedDim,
    UnsupportedSize,
)
from fftile.ffvec import PointSet, all_points, rank
from fftile.tiling import (
    AXIS,
    ISOTROPIC,
    ORTHOGONAL,
    GraphWitness,
    classify_1_tiling,
    decompose_k_tiling,
    eval_poly,
    graph_tiling_partner,
    graphical_check,
    interpolate_poly,
    is_graph,
    random_graph_tiling,
    search_tilings,
    tiling_direct_check,
    tiling_level,
    tiling_partners,
    verify_witness,
)

PARABOLA = PointSet(5, 2, [(t, t * t % 5) for t in range(5)])
NONGRAPH = PointSet(5, 2, [(0, 0), (1, 1), (2, 3), (3, 1), (2, 4)])
COLUMN5 = PointSet(5, 2, [(0, t) for t in range(5)])


def _brute_graph(E: PointSet) -> bool:
    """One point per hyperplane for some direction, by enumeration of all normals."""
    p, d = E.p, E.d
    for m in all_points(p, d):
        if any(m):
            hits = sorted(sum(a * b for a, b in zip(x, m)) % p for x in E)
            if hits == list(range(p)):
                return True
    return False


def test_direct_examples():
    E = PointSet(5, 1, [(0,), (1,), (2,)])
    assert tiling_direct_check(E, PointSet.full(5, 1), 3).holds
    r = tiling_direct_check(E, PointSet.full(5, 1), 2)
    assert not r.holds and r.histogram == {3: 5}
    assert tiling_direct_check(PointSet.full(3, 2), PointSet(3, 2, [(0, 0)]), 1).holds


@settings(max_examples=60, deadline=None)
@given(
    st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=9),
    st.sets(st.tuples(st.integers(0, 2), st.integers(0, 2)), max_size=9),
)
def test_direct_duality_and_divisibility(e, a):
    E, A = PointSet.of(3, 2, e), PointSet.of(3, 2, a)
    k = tiling_level(E, A)
    for j in range(0, 6):
        assert tiling_direct_check(E, A, j).holds == tiling_direct_check(A, E, j).holds
    if k is not None:
        assert len(E) * len(A) == k * 9


def test_is_graph_examples():
    w = is_graph(PARABOLA)
    assert w is not None and w.kind == AXIS and w.direction == (1, 0)
    assert w.polynomial == (0, 0, 1, 0, 0)
    assert w.function()[(2,)] == (4,)
    assert is_graph(NONGRAPH) is None
    for m in [(1, 0), (0, 1), (1, 1), (1, 4)]:
        L = PointSet.span(5, 2, [m])
        w = is_graph(L)
        assert w is not None and verify_witness(w, L)
        # a subspace is the graph of a linear map
        assert w.polynomial[0] == 0 and not any(w.polynomial[2:])
        if m in [(1, 0), (0, 1)]:
            assert all(y == (0,) for _, y in w.values)


def test_is_graph_unsupported():
    with pytest.raises(UnsupportedSize):
        is_graph(PointSet(5, 2, [(0, 0), (1, 1)]))
    # |E| = 3^2 in dimension 4 is a middle size
    E = PointSet.span(3, 4, [(1, 0, 0, 0), (0, 1, 0, 0)])
    with pytest.raises(UnsupportedSize):
        is_graph(E)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_is_graph_agrees_with_brute_force(p):
    rng = random.Random(p)
    pts = all_points(p, 2)
    for _ in range(200):
        E = PointSet(p, 2, tuple(rng.sample(pts, p)))
        w = is_graph(E)
        assert (w is not None) == _brute_graph(E)
        if w is not None:
            assert verify_witness(w, E)


def test_isotropic_witness():
    # (1,3) is isotropic in F_5^2 and E = span(1,2) meets each of its hyperplanes once
    E = PointSet.span(5, 2, [(1, 2)])
    w = is_graph(E, direction=(1, 3))
    assert w.kind == ISOTROPIC
    assert rank(list(w.basis), 5) == 2
    u = w.domain_basis[0]
    assert (u[0] * 1 + u[1] * 3) % 5 == 1 and (u[0] ** 2 + u[1] ** 2) % 5 == 0
    A = graph_tiling_partner(w)
    assert A == PointSet.span(5, 2, [(3, 4)]) == PointSet(5, 2, [(t, 3 * t % 5) for t in range(5)])
    assert verify_witness(w, E)


def test_orthogonal_witness():
    E = PointSet(5, 2, [(t, (2 * t + 1) % 5) for t in range(5)])
    w = is_graph(E, direction=(1, 1))
    assert w.kind == ORTHOGONAL and verify_witness(w, E)


def test_partner_examples():
    assert graph_tiling_partner(is_graph(PARABOLA)) == COLUMN5
    full = is_graph(PointSet.full(3, 2))
    assert full.s == 2 and graph_tiling_partner(full) == PointSet(3, 2, [(0, 0)])


def test_witness_json_roundtrip():
    w = is_graph(PARABOLA)
    assert GraphWitness.from_json(w.to_json()) == w


def test_classify_examples():
    c = classify_1_tiling(PARABOLA, COLUMN5)
    assert c.case == "graph" and c.witness.direction == (1, 0)
    assert c.witness.polynomial == (0, 0, 1, 0, 0)
    assert classify_1_tiling(PointSet(3, 2, [(2, 0)]), PointSet.full(3, 2)).case == "singleton"
    assert classify_1_tiling(PointSet.full(3, 2), PointSet(3, 2, [(0, 0)])).case == "full"
    E = PointSet.span(5, 2, [(1, 2)])
    A = PointSet.span(5, 2, [(1, 3)])
    assert tiling_direct_check(E, A, 1).holds
    c = classify_1_tiling(E, A)
    assert c.case == "graph" and verify_witness(c.witness, E)
    with pytest.raises(NotATiling):
        classify_1_tiling(NONGRAPH, COLUMN5)


def test_decompose_examples():
    E = PointSet(5, 2, [(t, y) for t in range(5) for y in (0, 1)])
    assert tiling_direct_check(E, COLUMN5, 2).holds
    dec = decompose_k_tiling(E, COLUMN5, 2)
    assert dec.case == "graphs" and dec.s == 2
    assert [sorted(set(y for _, y in w.values)) for w in dec.parts] == [[(0,)], [(1,)]]
    assert decompose_k_tiling(PointSet.full(3, 2), PointSet(3, 2, [(0, 0), (1, 1)]), 2).case == "full-plane"
    assert decompose_k_tiling(PointSet(3, 2, [(0, 0), (1, 2)]), PointSet.full(3, 2), 2).case == "k-points"
    with pytest.raises(UnsupportedDim):
        decompose_k_tiling(PointSet(5, 1, [(0,), (1,)]), PointSet.full(5, 1), 2)


def _pairs_p3():
    pts = all_points(3, 2)
    sets = [PointSet(3, 2, c) for r in range(1, 10) for c in combinations(pts, r)]
    by_size: dict = {}
    for S in sets:
        by_size.setdefault(len(S), []).append(S)
    return by_size


@pytest.mark.slow
def test_plane_theorems_exhaustive_p3():
    by_size = _pairs_p3()
    seen = 0
    for a in by_size:
        for b in by_size:
            if (a * b) % 9:
                continue
            k = a * b // 9
            for E in by_size[a]:
                for A in by_size[b]:
                    if not tiling_direct_check(E, A, k).holds:
                        continue
                    seen += 1
                    if k == 1:
                        c = classify_1_tiling(E, A)
                        assert verify_witness(c.witness, E)
                    dec = decompose_k_tiling(E, A, k)
                    if dec.case == "graphs":
                        assert k % dec.s == 0
                        union = set()
                        for w in dec.parts:
                            pts = set(w.points())
                            assert not (pts & union)
                            union |= pts
                            assert w.direction == dec.direction
                        assert PointSet(3, 2, tuple(union)) == E
    assert seen > 0


def test_graphical_examples():
    L = PointSet(3, 3, [(t, 0, 0) for t in range(3)])
    A = PointSet(3, 3, [(0, y, z) for y in range(3) for z in range(3)])
    r = graphical_check(L, A)
    assert r.which == "E" and r.guaranteed
    C = PointSet(3, 3, [(t, t * t % 3, (t ** 3 + 1) % 3) for t in range(3)])
    assert tiling_direct_check(C, A, 1).holds
    r = graphical_check(C, A)
    assert r.which == "E" and r.witness.s == 1 and verify_witness(r.witness, C)


@pytest.mark.slow
def test_graphical_size_p_in_3_space():
    count = 0
    for E, A in search_tilings(3, 3, 3, per_set=1):
        r = graphical_check(E, A)
        assert r.which is not None
        count += 1
    # size-3 tiles of F_3^3 containing 0 that tile: every one is a graph
    assert count > 0


def test_random_graph_tilings_verify():
    rng = random.Random(1)
    for s in (0, 1, 2, 3):
        for _ in range(5):
            E, A = random_graph_tiling(3, 3, s, rng)
            assert tiling_direct_check(E, A, 1).holds
            assert graphical_check(E, A).which is not None


def test_interpolate_examples():
    assert interpolate_poly([0, 1, 2, 3, 4], 5) == (0, 1, 0, 0, 0)
    assert interpolate_poly([3] * 7, 7) == (3, 0, 0, 0, 0, 0, 0)
    assert interpolate_poly({0: 0, 1: 1, 2: 4, 3: 4, 4: 1}, 5) == (0, 0, 1, 0, 0)
    with pytest.raises(IncompleteDomain):
        interpolate_poly({0: 1, 1: 2}, 5)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3, 5, 7, 11]), st.data())
def test_interpolate_property(p, data):
    vals = data.draw(st.lists(st.integers(0, p - 1), min_size=p, max_size=p))
    cs = interpolate_poly(vals, p)
    assert len(cs) == p
    assert [eval_poly(cs, x, p) for x in range(p)] == vals


def test_tiling_partners_exact():
    E = PointSet(3, 1, [(0,)])
    assert [A.points for A in tiling_partners(E)] == [tuple((a,) for a in range(3))]
    E = PointSet(3, 2, [(0, 0), (1, 0), (2, 0)])
    got = list(tiling_partners(E))
    for A in got:
        assert tiling_direct_check(E, A, 1).holds and (0, 0) in A
    # brute force over all 3-sets containing the origin
    ref = []
    rest = [x for x in product(range(3), repeat=2) if x != (0, 0)]
    for c in combinations(rest, 2):
        A = PointSet(3, 2, ((0, 0),) + c)
        if tiling_direct_check(E, A, 1).holds:
            ref.append(A)
    assert sorted(x.points for x in got) == sorted(x.points for x in ref)
