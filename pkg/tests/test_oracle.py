import random

import pytest

from turanlab.cycles import BudgetExceeded, find_cycle_of_length
from turanlab.oracle import (
    automorphisms,
    canonical_form,
    enumerate_hypothesis_graphs,
    enumerate_relaxed_embeddings,
    isomorphism_classes,
    max_edges_c6free_planar,
    plane_embeddings,
    planarity_test,
)
from turanlab.planar_core import Graph


def test_planarity_rejects_kuratowski_graphs():
    k5 = Graph(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
    k33 = Graph(6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert planarity_test(k5) == (False, None)
    assert planarity_test(k33) == (False, None)


def test_planarity_returns_validated_embedding(octahedron_graph):
    ok, emb = planarity_test(octahedron_graph)
    assert ok
    assert emb.n == 6 and emb.num_edges == 12
    assert emb.n - emb.num_edges + emb.num_faces == 2


def test_sparse_graphs_are_planar():
    # e <= n + 2 always admits an embedding
    rng = random.Random(42)
    for _ in range(60):
        n = rng.randint(3, 10)
        pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
        rng.shuffle(pool)
        g = Graph(n, pool[: min(len(pool), n + 2)])
        ok, emb = planarity_test(g)
        assert ok and emb is not None


def test_isomorphism_class_counts():
    # numbers of graphs on n unlabeled vertices
    expected = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
    for n, count in expected.items():
        assert len(isomorphism_classes(n)) == count


def test_canonical_form_invariant_under_relabeling():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)])
    mask = 0
    slots = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    index = {e: i for i, e in enumerate(slots)}
    for e in g.edges:
        mask |= 1 << index[e]
    relabeled = 0
    perm = [2, 0, 4, 1, 3]
    for u, v in g.edges:
        relabeled |= 1 << index[tuple(sorted((perm[u], perm[v])))]
    assert canonical_form(5, mask) == canonical_form(5, relabeled)


@pytest.mark.parametrize("n,expected", [(3, 3), (4, 6), (5, 9)])
def test_max_edges_small_is_triangulation(n, expected):
    for method in ("edge-subsets", "iso-classes"):
        assert max_edges_c6free_planar(n, method=method).max_edges == expected


def test_max_edges_n6_both_paths():
    a = max_edges_c6free_planar(6, method="edge-subsets")
    b = max_edges_c6free_planar(6, method="iso-classes")
    assert a.max_edges == b.max_edges == 10
    assert a.max_edges <= 18 * 4 // 7
    assert len(a.witnesses) == len(b.witnesses) == 3


def test_max_edges_rejects_out_of_range():
    with pytest.raises(BudgetExceeded):
        max_edges_c6free_planar(2)
    with pytest.raises(BudgetExceeded):
        max_edges_c6free_planar(11)


def test_witnesses_qualify():
    result = max_edges_c6free_planar(6, method="iso-classes")
    for w in result.witnesses:
        assert w.num_edges == result.max_edges
        assert find_cycle_of_length(w, 6) is None
        assert planarity_test(w)[0]


def test_automorphisms_k4():
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert len(automorphisms(k4)) == 24


def test_plane_embeddings_unique_for_k4_and_cycle():
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert len(plane_embeddings(k4)) == 1
    c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    assert len(plane_embeddings(c5)) == 1


def test_plane_embeddings_reject_torus_rotations():
    # bowtie: interleaving the two triangles at the cut vertex costs genus
    bowtie = Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    assert len(plane_embeddings(bowtie)) == 1


def test_plane_embeddings_budget():
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    with pytest.raises(BudgetExceeded):
        plane_embeddings(k4, budget=1)


def test_hypothesis_stream_needs_order_6():
    with pytest.raises(ValueError):
        list(enumerate_hypothesis_graphs(5))


def test_hypothesis_stream_is_empty_at_6_and_7():
    # n=6: min degree 3 on 6 vertices forces a Hamiltonian (6-)cycle.
    # n=7: min degree 3 forces e >= 11 > (5/2)*7 - 7.
    assert list(enumerate_hypothesis_graphs(6)) == []
    assert list(enumerate_hypothesis_graphs(7)) == []


def test_biconnected_min_degree_3_on_7_vertices_always_has_c6():
    # the emptiness above, cross-checked directly against the detector
    from turanlab.oracle import _graph_from_mask
    from turanlab.planar_core import is_biconnected

    found = 0
    for mask in isomorphism_classes(7):
        g = _graph_from_mask(7, mask)
        if min(g.degrees(), default=0) < 3 or not is_biconnected(g):
            continue
        if not planarity_test(g)[0]:
            continue
        found += 1
        assert find_cycle_of_length(g, 6) is not None
    assert found > 0


def test_relaxed_corpus_nonempty():
    relaxed = list(enumerate_relaxed_embeddings(6))
    assert len(relaxed) == 8
    for emb in relaxed:
        assert find_cycle_of_length(emb.graph(), 6) is None


def test_order_cap_env_override(monkeypatch):
    monkeypatch.setenv("TURAN_LAB_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        max_edges_c6free_planar(6)
    assert max_edges_c6free_planar(5).max_edges == 9
    monkeypatch.setenv("TURAN_LAB_BUDGET", "6")
    assert max_edges_c6free_planar(6, method="iso-classes").max_edges == 10
