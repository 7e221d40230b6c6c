"""Acceptance criteria, one test per criterion, each printing a verdict line.

Criterion 5's strict corpus (2-connected, minimum degree 3, no 6-cycle, on 6
or 7 vertices) is provably empty: at n=6 minimum degree 3 forces a spanning
6-cycle, and at n=7 it forces 11 edges where the bound allows 10.  The sweep
runs anyway and proves emptiness by exhaustion; the same certificates are
then exercised non-vacuously on hypothesis-satisfying graphs of larger order
(the extremal family and a hand-built 16-vertex host).
"""

import random
import time
from fractions import Fraction

from turanlab.blocks import (
    TYPE_B2,
    TYPE_B4B,
    TYPE_B5A,
    decompose_triangular_blocks,
    junction_map,
)
from turanlab.construct import (
    assemble_extremal,
    chain_of_k5minus,
    construct_from_base,
    cycle_base,
)
from turanlab.cycles import cycle_oracle_subsets, find_cycle_of_length
from turanlab.discharge import (
    certify_bound,
    compute_ledger,
    partition_and_certify,
    vertex_contributions,
)
from turanlab.oracle import (
    enumerate_hypothesis_graphs,
    enumerate_relaxed_embeddings,
    max_edges_c6free_planar,
    planarity_test,
)
from turanlab.planar_core import Graph


def _verdict(num: int, detail: str, started: float) -> None:
    print(f"ACCEPTANCE {num}: PASS - {detail} ({time.perf_counter() - started:.2f}s)")


def test_acceptance_01_extremal_family_exact():
    started = time.perf_counter()
    for k in range(4):
        t0 = time.perf_counter()
        report = assemble_extremal(k, "g0")
        v, e = report.num_vertices, report.num_edges
        assert v == 36 * k + 28
        assert e == 90 * k + 63
        assert 2 * e == 5 * v - 14  # e = (5/2)v - 7 exactly
        assert report.forbidden_cycle_absent
        assert time.perf_counter() - t0 < 5.0
    _verdict(1, "g0 family k=0..3 exact counts, C6-free", started)


def test_acceptance_02_reduced_family_exact():
    started = time.perf_counter()
    for k in (1, 2, 3):
        t0 = time.perf_counter()
        report = assemble_extremal(k, "h0")
        v, e = report.num_vertices, report.num_edges
        assert v == 36 * k + 10
        assert e == 9 * (10 * k + 2)
        assert 2 * e == 5 * v - 14
        assert report.forbidden_cycle_absent
        assert time.perf_counter() - t0 < 5.0
    _verdict(2, "h0 family k=1..3 exact counts, C6-free", started)


def test_acceptance_03_seventeen_vertex_exception():
    started = time.perf_counter()
    emb = chain_of_k5minus(4)
    assert (emb.n, emb.num_edges) == (17, 36)
    assert find_cycle_of_length(emb.graph(), 6) is None
    cert = certify_bound(emb)
    assert cert.five_v_minus_two_e == 13
    assert not cert.bound_holds and cert.small_exception
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    _verdict(3, "17-vertex 36-edge graph flagged as small exception", started)


def test_acceptance_04_nine_vertex_equality_witness():
    started = time.perf_counter()
    emb = chain_of_k5minus(2)
    assert (emb.n, emb.num_edges) == (9, 18)
    assert emb.num_edges == 18 * (emb.n - 2) // 7
    assert find_cycle_of_length(emb.graph(), 6) is None
    ok, _ = planarity_test(emb.graph())
    assert ok
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0
    _verdict(4, "9-vertex 18-edge equality witness", started)


def test_acceptance_05_discharging_soundness_sweep():
    started = time.perf_counter()
    strict = 0
    for n in (6, 7):
        for emb in enumerate_hypothesis_graphs(n):
            strict += 1
            cert = partition_and_certify(emb)
            assert cert.ledger.totals_exact()
            assert cert.all_classes_nonpositive
            assert Fraction(emb.num_edges) <= Fraction(5, 2) * emb.n - 7
    assert strict == 0  # provably empty; see module docstring

    # Ledger identities hold on every 2-connected C6-free plane graph, so
    # sweep those to exercise the machinery the strict corpus cannot.
    relaxed = 0
    for n in (6, 7):
        for emb in enumerate_relaxed_embeddings(n):
            relaxed += 1
            ledger = compute_ledger(emb)
            assert ledger.totals_exact()
    assert relaxed >= 20

    # Full certificates on hypothesis-satisfying graphs of larger order.
    certified = 0
    for builder in (
        lambda: assemble_extremal(0, "g0").embedding,
        lambda: assemble_extremal(1, "g0").embedding,
        lambda: assemble_extremal(1, "h0").embedding,
    ):
        cert = partition_and_certify(builder())
        assert cert.all_classes_nonpositive and cert.edge_bound_holds
        assert cert.total_score == 0
        certified += 1
    _verdict(
        5,
        f"strict corpus empty as proved ({relaxed} relaxed ledgers exact, "
        f"{certified} tight certificates)",
        started,
    )


def test_acceptance_06_block_order_sweep():
    started = time.perf_counter()
    oversized = 0
    swept = 0
    for n in (6, 7):
        for emb in enumerate_relaxed_embeddings(n, require_biconnected=False):
            swept += 1
            for b in decompose_triangular_blocks(emb):
                if b.num_vertices >= 6:
                    oversized += 1
    assert oversized == 0 and swept > 100

    # any oversized block must come with a 6-cycle witness
    from turanlab.planar_core import embedding_from_faces

    stacked = embedding_from_faces(
        6,
        [[0, 1, 5], [1, 4, 5], [0, 5, 4], [1, 2, 4], [0, 4, 2], [0, 2, 3],
         [0, 3, 1], [1, 3, 2]],
    )
    tags = [b.type_tag for b in decompose_triangular_blocks(stacked)]
    assert tags == ["Oversized"]
    witness = find_cycle_of_length(stacked.graph(), 6)
    assert witness is not None and witness.is_valid_in(stacked.graph())
    _verdict(6, f"no oversized block over {swept} embeddings; synthetic one has C6", started)


def test_acceptance_07_table_bound_spot_checks(b4b_two_four_faces, c7):
    started = time.perf_counter()
    # five-vertex block with three junction vertices, inside the k=1 extremal graph
    emb = assemble_extremal(1, "g0").embedding
    blocks = decompose_triangular_blocks(emb)
    jm = junction_map(blocks)
    n_of = vertex_contributions(blocks, jm)
    ledger = compute_ledger(emb)
    three_junction = [
        i
        for i, b in enumerate(blocks)
        if b.type_tag == TYPE_B5A
        and sum(1 for v in b.vertices if jm.is_junction(v)) == 3
    ]
    assert three_junction
    for i in three_junction:
        assert n_of[i] == 2 + Fraction(3, 2)
        assert ledger.score(i) <= 0

    # four-vertex chorded block flanked by two 4-faces
    toy = compute_ledger(b4b_two_four_faces)
    (i,) = [j for j, b in enumerate(toy.blocks) if b.type_tag == TYPE_B4B]
    assert toy.score(i) == Fraction(4, 3) <= Fraction(4, 3)

    # trivial block with both endpoints in exactly two blocks
    ring = compute_ledger(c7)
    jm7 = ring.junctions
    for j, b in enumerate(ring.blocks):
        assert b.type_tag == TYPE_B2
        assert all(jm7.count(v) == 2 for v in b.vertices)
        assert ring.score(j) == Fraction(-1) <= Fraction(-1, 4)
    _verdict(7, "B5a<=0, B4b=4/3, B2=-1 as exact rationals", started)


def test_acceptance_08_oracle_consistency():
    started = time.perf_counter()
    for n in (3, 4, 5):
        assert max_edges_c6free_planar(n, method="edge-subsets").max_edges == 3 * n - 6
    for n in (6, 7):
        t0 = time.perf_counter()
        primary = max_edges_c6free_planar(n, method="edge-subsets")
        second = max_edges_c6free_planar(n, method="iso-classes")
        assert primary.max_edges == second.max_edges
        assert primary.max_edges <= (18 * (n - 2)) // 7
        assert len(primary.witnesses) == len(second.witnesses)
        assert time.perf_counter() - t0 < 1200.0
    _verdict(8, "both enumeration paths agree: max edges 3,6,9,10,12", started)


def test_acceptance_09_general_length_families():
    started = time.perf_counter()
    for ell in (7, 8):
        t0 = time.perf_counter()
        report = construct_from_base(cycle_base(ell), ell)
        v, e = report.num_vertices, report.num_edges
        assert e == (3 * ell - 9) * (ell + 1)
        assert Fraction(e) == Fraction(3 * (ell - 1), ell) * v - Fraction(6 * (ell + 1), ell)
        assert report.forbidden_cycle_absent  # verified by full search in the builder
        assert time.perf_counter() - t0 < 60.0
    _verdict(9, "ell=7,8 constructions meet the edge identity, C_ell-free", started)


def test_acceptance_10_cycle_detector_equivalence():
    started = time.perf_counter()
    rng = random.Random(1729)
    checked = 0
    for _ in range(1000):
        n = rng.randint(3, 8)
        p = rng.uniform(0.15, 0.85)
        g = Graph(
            n,
            [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p],
        )
        for k in range(3, 9):
            assert (find_cycle_of_length(g, k) is not None) == cycle_oracle_subsets(g, k)
            checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _verdict(10, f"detector == subsets oracle on {checked} (graph, k) pairs", started)
