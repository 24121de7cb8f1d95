import itertools

import pytest

from xgcrit.alternator import (
    Alternator,
    find_standard_alternator,
    is_admissible,
    is_alternator,
    is_weakly_admissible,
    switch,
    switch_along,
)
from xgcrit.coloring import chromatic_number
from xgcrit.cyclic import GroundSet, alternate_on, closed, interval_mask, restrict, to_mask
from xgcrit.graphs import complete_graph, from_edges, xg_graph
from xgcrit.mycielski import (
    APEX,
    MycielskiVertex,
    homomorphism_f,
    homomorphism_source,
    lambda_set,
    lemma_image,
    lift_homomorphism,
    mycielski,
    mycielski_edge_kind,
    mycielski_tower,
    prefix_set,
    verify_homomorphism,
)

from conftest import family_graph


def cycle_graph(n):
    return from_edges([(i,) for i in range(n)], [(i, (i + 1) % n) for i in range(n)])


def test_small_mycielskians():
    K3 = mycielski(complete_graph(2), 1)
    assert (K3.n_vertices, K3.n_edges) == (3, 3)
    C5 = mycielski(complete_graph(2), 2)
    assert (C5.n_vertices, C5.n_edges) == (5, 5)
    assert all(len(C5.neighbors(v)) == 2 for v in range(5))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_mycielski_shape(r):
    G = cycle_graph(7)
    M = mycielski(G, r)
    assert M.n_vertices == r * 7 + 1
    assert M.labels[-1] == APEX
    assert len(M.neighbors(M.n_vertices - 1)) == 7
    # base edges, plus two per edge between consecutive levels, plus the apex
    assert M.n_edges == 7 + 2 * 7 * (r - 1) + 7
    assert all(mycielski_edge_kind(M.labels[i], M.labels[j]) in ("base", "level", "apex") for i, j in M.edges())


def test_m3_c7_size():
    assert mycielski(cycle_graph(7), 3).n_vertices == 22


def test_grotzsch():
    G = mycielski(mycielski(complete_graph(2), 2), 2)
    assert (G.n_vertices, G.n_edges) == (11, 20)
    assert chromatic_number(G).chi == 4


def test_mycielski_rejects_bad_radius():
    with pytest.raises(ValueError):
        mycielski(complete_graph(2), 0)
    with pytest.raises(ValueError):
        mycielski_tower(4, [2])
    with pytest.raises(ValueError):
        mycielski_tower(1, [])


@pytest.mark.parametrize("t,radii", [(2, []), (3, [2]), (4, [1, 3]), (5, [2, 1, 1])])
def test_tower_chromatic_number(t, radii):
    assert chromatic_number(mycielski_tower(t, radii)).chi == t


def test_lift_is_a_homomorphism():
    # C5 -> K3 lifts to M_2(C5) -> M_2(K3)
    C5, K3 = cycle_graph(5), complete_graph(3)
    f = {lab: (i % 2 + 1 if i < 4 else 3,) for i, lab in enumerate(C5.labels)}
    assert verify_homomorphism(C5, K3, f).ok
    lifted = lift_homomorphism(f.__getitem__, 2)
    rep = verify_homomorphism(mycielski(C5, 2), mycielski(K3, 2), lifted)
    assert rep.ok and rep.checked == mycielski(C5, 2).n_edges


def test_lambda_sets():
    assert lambda_set(16, 3) == {2, 14, 16}
    assert lambda_set(16, 4) == {1, 3, 13, 15}
    assert lambda_set(9, 0) == frozenset()
    for n in range(4, 13):
        for i in range(n // 2 + 1):
            lam = to_mask(lambda_set(n, i))
            rot = ((lam << 1) | (lam >> (n - 1))) & ((1 << n) - 1)
            assert lam.bit_count() == i and not lam & rot
    with pytest.raises(ValueError):
        lambda_set(6, 4)


def test_prefix_set():
    g = GroundSet(16, 4)
    A = {4, 9, 12, 15}
    assert prefix_set(A, 0, g) == frozenset()
    assert prefix_set(A, 1, g) == {15}
    assert prefix_set(A, 2, g) == {12, 15}
    assert prefix_set(A, 4, g) == A
    with pytest.raises(ValueError):
        prefix_set(A, 5, g)


@pytest.mark.parametrize("n,k", [(7, 2), (8, 2), (8, 3), (9, 3), (9, 4), (10, 3)])
def test_homomorphism_images_are_vertices(n, k):
    g = GroundSet(n, k)
    target = family_graph("xg", n, k)
    for lab, img in homomorphism_f(g).items():
        assert img in target
        if lab == APEX:
            assert set(img) == lambda_set(n, k)


@pytest.mark.parametrize("n,k", [(7, 2), (8, 2), (8, 3), (9, 3), (9, 4)])
def test_homomorphism_by_edge_kind(n, k):
    g = GroundSet(n, k)
    src = homomorphism_source(g)
    rep = verify_homomorphism(src, family_graph("xg", n, k), homomorphism_f(g, src), mycielski_edge_kind)
    assert rep.ok, rep.violations[:3]
    assert rep.checked == src.n_edges
    assert set(rep.by_kind) == {"base", "level", "apex"}


def test_homomorphism_negative_controls():
    g = GroundSet(8, 2)
    src = homomorphism_source(g)
    target = family_graph("xg", 8, 2)
    # collapsing an edge to a single vertex can never be an edge
    i, j = next(iter(src.edges()))
    f = homomorphism_f(g, src)
    f[src.labels[j]] = f[src.labels[i]]
    assert not verify_homomorphism(src, target, f).ok
    # the identity on labels is not even a map into XG(8, 2)
    with pytest.raises(ValueError):
        verify_homomorphism(src, target, lambda lab: lab)


def test_homomorphism_needs_room():
    with pytest.raises(ValueError):
        homomorphism_source(GroundSet(6, 3))


# The level edges (A, j)(B, j+1) of the source are the interesting case.
# Below, (A', B') is the image pair, the standard AB-alternator lives in
# C_{n-1}, and I = [d, j+1] is the widest weakly admissible interval for
# the pair obtained by switching along the whole alternator.

def _nice(X, Y, A, B, I, n):
    """XY agrees with AB off I, alternates on I, and starts on I the same side."""
    im = interval_mask(I, n)
    x, y, a, b = map(to_mask, (X, Y, A, B))
    if x & ~im != a & ~im or y & ~im != b & ~im:
        return False
    if not alternate_on(X, Y, I, n):
        return False
    return (restrict(I, x | y, n)[0] in X) == (restrict(I, a | b, n)[0] in A)


def _level_cases(n, k):
    g = GroundSet(n, k)
    small = GroundSet(n - 1, k)
    H = xg_graph(small)
    for u, v in H.edges():
        for A, B in ((H.labels[u], H.labels[v]), (H.labels[v], H.labels[u])):
            alt = find_standard_alternator(A, B, small)
            Am, Bm = switch_along(A, B, [closed(d, c) for c, d in alt.pairs], n)
            for j in range(k):
                d = max(d for d in range(k + 1, n + 1) if is_weakly_admissible(Am, Bm, closed(d, j + 1), n))
                t = sum(1 for c, _ in alt.pairs if c < j + 1)
                A2 = lemma_image(MycielskiVertex(A, j), g)
                B2 = lemma_image(MycielskiVertex(B, j + 1), g)
                yield g, A, B, alt, j, d, t, A2, B2


def check_level_edges(n, k):
    """Assert the repaired alternator for every level edge; return the cases met."""
    seen = set()
    for g, A, B, alt, j, d, t, A2, B2 in _level_cases(n, k):
        I = closed(d, j + 1)
        tail = Alternator(alt.pairs[t:])
        if _nice(A2, B2, A, B, I, n):
            seen.add("nice")
            assert is_alternator(A2, B2, tail, g)
            continue
        # otherwise switching on I must repair it
        assert is_admissible(A2, B2, I, n)
        A3, B3 = switch(A2, B2, I, n)
        assert _nice(A3, B3, A, B, I, n)
        assert is_alternator(A3, B3, tail, g)
        if j == k - 1:
            # I covers A' ∪ B', so the switch only swaps sides
            seen.add("swap")
            cert = tail
        elif j + 1 in alt.C:
            # <j+1, d> replaces the pair that already uses j+1
            seen.add("replace")
            cert = Alternator(alt.pairs[t + 1:])
        else:
            seen.add("extend")
            cert = Alternator(tuple(sorted(alt.pairs[t:] + ((j + 1, d),))))
        assert is_alternator(A2, B2, cert, g), (A, B, j, alt.pairs, d)
    return seen


@pytest.mark.parametrize("n,k,cases", [
    (7, 2, "extend nice replace swap"),
    (8, 3, "extend nice swap"),
    (9, 3, "extend nice replace swap"),
    (10, 3, "extend nice replace swap"),
    (9, 4, "nice"),
])
def test_level_edge_alternators(n, k, cases):
    assert check_level_edges(n, k) == set(cases.split())
