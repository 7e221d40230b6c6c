"""Exact-rational contribution ledgers and edge-bound certificates.

Every vertex of the host graph splits its unit weight evenly over the
triangular-blocks containing it, and every non-triangular face splits its
unit weight over its boundary edges (with a shortened effective length when
chains of K5-minus blocks sit on the face).  Each block then carries the
score 7*f(B) + 2*n(B) - 5*e(B).  For a 2-connected host with minimum degree
3, no 6-cycle and order at least 6, the blocks can be grouped so that every
group has nonpositive score, which pins the global count 7f + 2n - 5e below
zero and hence the edge bound e <= (5/2)n - 7.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .blocks import (
    TYPE_B2,
    TYPE_B4A,
    TYPE_B4B,
    TYPE_B5A,
    TYPE_B5B,
    TYPE_B5C,
    TYPE_B5D,
    JunctionMap,
    TriangularBlock,
    decompose_triangular_blocks,
    junction_map,
)
from .cycles import find_cycle_of_length
from .planar_core import (
    Graph,
    GraphError,
    PlanarEmbedding,
    biconnected_blocks,
    is_biconnected,
    norm_edge,
    peel_min_degree,
)


class NotTwoConnected(GraphError):
    pass


class HypothesisViolated(GraphError):
    def __init__(self, which: str, detail: str = ""):
        self.which = which
        super().__init__(f"hypothesis violated: {which}" + (f" ({detail})" if detail else ""))


class GroupingFailed(GraphError):
    pass


class PropositionViolated(GraphError):
    def __init__(self, which: str, witness):
        self.which = which
        self.witness = witness
        super().__init__(f"face proposition {which} violated: {witness}")


class NotC6Free(GraphError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"graph contains a 6-cycle: {witness.vertices}")


class NotPlanar(GraphError):
    pass


@dataclass(frozen=True)
class FaceAdjustment:
    face_index: int
    walk_length: int
    num_collapsed: int
    paired_edges: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def effective_length(self) -> int:
        return self.walk_length - self.num_collapsed


@dataclass(frozen=True)
class ContributionLedger:
    blocks: tuple[TriangularBlock, ...]
    junctions: JunctionMap
    n_of: tuple[Fraction, ...]
    f_of: tuple[Fraction, ...]
    e_of: tuple[int, ...]
    adjustments: tuple[FaceAdjustment, ...]
    num_vertices: int
    num_edges: int
    num_faces: int

    def score(self, i: int) -> Fraction:
        return 7 * self.f_of[i] + 2 * self.n_of[i] - 5 * self.e_of[i]

    def scores(self) -> tuple[Fraction, ...]:
        return tuple(self.score(i) for i in range(len(self.blocks)))

    def totals_exact(self) -> bool:
        return (
            sum(self.n_of) == self.num_vertices
            and sum(self.f_of) == self.num_faces
            and sum(self.e_of) == self.num_edges
        )

    def to_json(self) -> str:
        payload = {
            "v": self.num_vertices,
            "e": self.num_edges,
            "f": self.num_faces,
            "blocks": [
                {
                    "type": b.type_tag,
                    "vertices": list(b.vertices),
                    "n": str(self.n_of[i]),
                    "f": str(self.f_of[i]),
                    "e": self.e_of[i],
                    "score": str(self.score(i)),
                }
                for i, b in enumerate(self.blocks)
            ],
            "adjustments": [
                {
                    "face": a.face_index,
                    "walk_length": a.walk_length,
                    "collapsed": a.num_collapsed,
                    "effective_length": a.effective_length,
                }
                for a in self.adjustments
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def vertex_contributions(
    blocks: Sequence[TriangularBlock], junctions: JunctionMap
) -> tuple[Fraction, ...]:
    """n(B) per block: each vertex spreads weight 1 over its blocks."""
    out = []
    for b in blocks:
        total = Fraction(0)
        for v in b.vertices:
            c = junctions.count(v)
            if c < 1:
                raise GraphError(f"vertex {v} lies in no block")
            total += Fraction(1, c)
        out.append(total)
    return tuple(out)


def _block_of_edge(blocks: Sequence[TriangularBlock]) -> dict[tuple[int, int], int]:
    owner: dict[tuple[int, int], int] = {}
    for i, b in enumerate(blocks):
        for e in b.edges:
            owner[e] = i
    return owner


def _detect_adjustments(
    emb: PlanarEmbedding,
    blocks: Sequence[TriangularBlock],
    junctions: JunctionMap,
    owner: dict[tuple[int, int], int],
) -> tuple[FaceAdjustment, ...]:
    """Collapsed-corner count per face, from K5-minus blocks sitting on it.

    A block of type B5a shortens a face walk by one when all three of its
    exterior vertices lie consecutively on the walk with the two junction
    vertices at the ends.
    """
    ext_vertices_of: dict[int, frozenset[int]] = {}
    for i, b in enumerate(blocks):
        if b.type_tag == TYPE_B5A:
            ext_vertices_of[i] = frozenset(v for e in b.exterior_edges for v in e)
    out = []
    for fi, face in enumerate(emb.faces):
        length = face.length
        if length <= 3 or not ext_vertices_of:
            continue
        walk = face.vertices
        matched: set[int] = set()
        pairs = []
        for pos in range(length):
            a = walk[pos - 1]
            mid = walk[pos]
            c = walk[(pos + 1) % length]
            e1 = norm_edge(a, mid)
            e2 = norm_edge(mid, c)
            bi = owner.get(e1)
            if bi is None or bi != owner.get(e2) or bi in matched:
                continue
            if blocks[bi].type_tag != TYPE_B5A:
                continue
            if ext_vertices_of[bi] != frozenset((a, mid, c)):
                continue
            if junctions.is_junction(mid):
                continue
            if not (junctions.is_junction(a) and junctions.is_junction(c)):
                continue
            matched.add(bi)
            pairs.append((e1, e2))
        if matched:
            adj = FaceAdjustment(fi, length, len(matched), tuple(pairs))
            if adj.effective_length < 3:
                raise GraphError(f"face {fi} collapses below length 3")
            out.append(adj)
    return tuple(out)


def face_contributions(
    emb: PlanarEmbedding, blocks: Sequence[TriangularBlock] | None = None
) -> tuple[tuple[Fraction, ...], tuple[FaceAdjustment, ...]]:
    """f(B) per block plus the face adjustments that were applied.

    Requires a 2-connected host so every face walk is a cycle and every edge
    borders two distinct faces.
    """
    graph = emb.graph()
    if not is_biconnected(graph):
        raise NotTwoConnected("face contributions need a 2-connected host")
    if blocks is None:
        blocks = decompose_triangular_blocks(emb)
    junctions = junction_map(blocks)
    owner = _block_of_edge(blocks)
    adjustments = _detect_adjustments(emb, blocks, junctions, owner)
    adj_by_face = {a.face_index: a for a in adjustments}

    # Per-face edge weights.
    weight: dict[tuple[int, tuple[int, int]], Fraction] = {}
    for fi, face in enumerate(emb.faces):
        if face.length <= 3:
            continue
        adj = adj_by_face.get(fi)
        eff = face.length - (adj.num_collapsed if adj else 0)
        halved: set[tuple[int, int]] = set()
        if adj:
            for e1, e2 in adj.paired_edges:
                halved.add(e1)
                halved.add(e2)
        edge_list = face.edge_multiset()
        if len(set(edge_list)) != len(edge_list):
            raise NotTwoConnected(f"face {fi} repeats an edge")
        for e in edge_list:
            weight[(fi, e)] = Fraction(1, 2 * eff) if e in halved else Fraction(1, eff)
        if sum(weight[(fi, e)] for e in edge_list) != 1:
            raise GraphError(f"face {fi} weights do not sum to 1")

    interior_faces = [0] * len(blocks)
    for face in emb.faces:
        if face.length == 3:
            interior_faces[owner[face.edge_multiset()[0]]] += 1

    f_of = []
    for i, b in enumerate(blocks):
        total = Fraction(interior_faces[i])
        for u, v in b.exterior_edges:
            e = norm_edge(u, v)
            for fi in emb.faces_of_edge(u, v):
                if emb.faces[fi].length > 3:
                    total += weight[(fi, e)]
        f_of.append(total)
    return tuple(f_of), adjustments


def compute_ledger(
    emb: PlanarEmbedding, blocks: Sequence[TriangularBlock] | None = None
) -> ContributionLedger:
    if blocks is None:
        blocks = decompose_triangular_blocks(emb)
    junctions = junction_map(blocks)
    n_of = vertex_contributions(blocks, junctions)
    f_of, adjustments = face_contributions(emb, blocks)
    ledger = ContributionLedger(
        blocks=tuple(blocks),
        junctions=junctions,
        n_of=n_of,
        f_of=f_of,
        e_of=tuple(b.num_edges for b in blocks),
        adjustments=adjustments,
        num_vertices=emb.n,
        num_edges=emb.num_edges,
        num_faces=emb.num_faces,
    )
    if not ledger.totals_exact():
        raise GraphError("ledger totals do not reproduce v, e, f")
    return ledger


def block_score(ledger: ContributionLedger, block_index: int) -> Fraction:
    return ledger.score(block_index)


# -- grouping and certification -------------------------------------------------


# Ends and midpoint of the one 2-path a 4-face may share, by block degree:
# B5d between its two degree-4 vertices, B4b between its two degree-2 corners,
# both through a degree-3 vertex.
_DESIGNATED_END_DEGREE = {TYPE_B5D: 4, TYPE_B4B: 2}
_DESIGNATED_MID_DEGREE = {TYPE_B5D: 3, TYPE_B4B: 3}


def _block_degrees(b: TriangularBlock) -> dict[int, int]:
    deg = {v: 0 for v in b.vertices}
    for u, v in b.edges:
        deg[u] += 1
        deg[v] += 1
    return deg


def _shared_two_path(
    face_edges: list[tuple[int, int]], block: TriangularBlock
) -> tuple[tuple[int, int, int], list[tuple[int, int]]] | None:
    """(end, mid, end) of the shared 2-path plus the remaining face edges."""
    block_edge_set = set(block.edges)
    shared = [e for e in face_edges if e in block_edge_set]
    if len(shared) != 2:
        return None
    (a1, b1), (a2, b2) = shared
    common = {a1, b1} & {a2, b2}
    if len(common) != 1:
        return None
    mid = common.pop()
    ends = ({a1, b1} | {a2, b2}) - {mid}
    end1, end2 = sorted(ends)
    deg = _block_degrees(block)
    want_end = _DESIGNATED_END_DEGREE[block.type_tag]
    want_mid = _DESIGNATED_MID_DEGREE[block.type_tag]
    if deg[end1] != want_end or deg[end2] != want_end or deg[mid] != want_mid:
        return None
    rest = [e for e in face_edges if e not in block_edge_set]
    return (end1, mid, end2), rest


def check_hypotheses(
    graph: Graph, *, require_c6_free: bool = True
) -> None:
    if graph.n < 6:
        raise HypothesisViolated("order", f"n={graph.n} < 6")
    if not is_biconnected(graph):
        raise HypothesisViolated("two-connected")
    degs = graph.degrees()
    if min(degs) < 3:
        worst = degs.index(min(degs))
        raise HypothesisViolated("min-degree", f"vertex {worst} has degree {degs[worst]}")
    if require_c6_free:
        witness = find_cycle_of_length(graph, 6)
        if witness is not None:
            raise HypothesisViolated("c6-free", f"cycle {witness.vertices}")


@dataclass(frozen=True)
class DischargeCertificate:
    ledger: ContributionLedger
    classes: tuple[tuple[int, ...], ...]
    class_sums: tuple[Fraction, ...]
    total_score: Fraction
    all_classes_nonpositive: bool
    edge_bound_holds: bool

    @property
    def num_vertices(self) -> int:
        return self.ledger.num_vertices

    @property
    def num_edges(self) -> int:
        return self.ledger.num_edges

    def to_json(self) -> str:
        payload = {
            "v": self.ledger.num_vertices,
            "e": self.ledger.num_edges,
            "f": self.ledger.num_faces,
            "blocks": [
                {
                    "type": b.type_tag,
                    "vertices": list(b.vertices),
                    "n": str(self.ledger.n_of[i]),
                    "f": str(self.ledger.f_of[i]),
                    "e": self.ledger.e_of[i],
                    "score": str(self.ledger.score(i)),
                }
                for i, b in enumerate(self.ledger.blocks)
            ],
            "classes": [list(c) for c in self.classes],
            "class_sums": [str(s) for s in self.class_sums],
            "total_score": str(self.total_score),
            "all_classes_nonpositive": self.all_classes_nonpositive,
            "edge_bound_holds": self.edge_bound_holds,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def partition_and_certify(emb: PlanarEmbedding) -> DischargeCertificate:
    """Group blocks so every group has nonpositive score; certify the bound.

    Positive-score blocks can only be a B5d or B4b whose designated 2-path
    borders a 4-face; the other two edges of such a face are trivial blocks
    and join the group.  Anything else is a GroupingFailed, which indicates
    an upstream bug rather than a property of valid inputs.
    """
    graph = emb.graph()
    check_hypotheses(graph)
    ledger = compute_ledger(emb)
    blocks = ledger.blocks
    owner = _block_of_edge(blocks)
    scores = ledger.scores()

    claimed: dict[int, int] = {}
    classes: list[list[int]] = []
    for i, b in enumerate(blocks):
        if scores[i] <= 0:
            continue
        if b.type_tag not in (TYPE_B5D, TYPE_B4B):
            raise GroupingFailed(
                f"block {i} of type {b.type_tag} has positive score {scores[i]}"
            )
        group = [i]
        four_faces = 0
        seen_faces: set[int] = set()
        for u, v in b.exterior_edges:
            for fi in emb.faces_of_edge(u, v):
                if emb.faces[fi].length != 4 or fi in seen_faces:
                    continue
                seen_faces.add(fi)
                shape = _shared_two_path(emb.faces[fi].edge_multiset(), b)
                if shape is None:
                    raise GroupingFailed(
                        f"4-face {fi} does not meet block {i} on its designated 2-path"
                    )
                _, rest = shape
                four_faces += 1
                for e in rest:
                    j = owner[e]
                    if blocks[j].type_tag != TYPE_B2:
                        raise GroupingFailed(
                            f"edge {e} of 4-face {fi} lies in nontrivial block {j}"
                        )
                    if claimed.get(j, i) != i:
                        raise GroupingFailed(f"trivial block {j} claimed twice")
                    claimed[j] = i
                    group.append(j)
        if four_faces == 0:
            raise GroupingFailed(
                f"block {i} has positive score {scores[i]} but no incident 4-face"
            )
        classes.append(sorted(set(group)))

    grouped = {i for cls in classes for i in cls}
    residual = [i for i in range(len(blocks)) if i not in grouped]
    if residual:
        classes.append(residual)

    class_sums = tuple(sum(scores[i] for i in cls) for cls in classes)
    total = sum(scores, Fraction(0))
    # Euler consistency: with f = e - n + 2 the total must equal 2e - 5n + 14.
    n, e = ledger.num_vertices, ledger.num_edges
    if ledger.num_faces != e - n + 2:
        raise GraphError("Euler count mismatch on a certified input")
    if total != 2 * e - 5 * n + 14:
        raise GraphError("ledger total disagrees with the Euler identity")
    return DischargeCertificate(
        ledger=ledger,
        classes=tuple(tuple(c) for c in classes),
        class_sums=class_sums,
        total_score=total,
        all_classes_nonpositive=all(s <= 0 for s in class_sums),
        edge_bound_holds=Fraction(e) <= Fraction(5, 2) * n - 7,
    )


@dataclass(frozen=True)
class PropositionReport:
    checked_blocks: int
    checked_faces: int


def check_face_propositions(emb: PlanarEmbedding) -> PropositionReport:
    """Structural face checks for hosts meeting the degree/connectivity bar.

    Deliberately does not run the cycle detector first: a violated
    proposition is how a hidden 6-cycle shows up, and callers cross-check
    with the detector.  An oversized triangular-block already proves such a
    cycle, so that much is rejected up front.
    """
    graph = emb.graph()
    check_hypotheses(graph, require_c6_free=False)
    blocks = decompose_triangular_blocks(emb)
    for i, b in enumerate(blocks):
        if b.num_vertices >= 6:
            raise HypothesisViolated(
                "c6-free", f"block {i} on {b.num_vertices} vertices implies a 6-cycle"
            )

    for u, v in graph.edges:
        fa, fb = emb.faces_of_edge(u, v)
        if fa != fb and emb.faces[fa].length == 4 and emb.faces[fb].length == 4:
            raise PropositionViolated("adjacent-4-faces", norm_edge(u, v))

    for i, b in enumerate(blocks):
        if b.type_tag == TYPE_B2:
            continue
        ext_faces = set()
        for u, v in b.exterior_edges:
            for fi in emb.faces_of_edge(u, v):
                if emb.faces[fi].length > 3:
                    ext_faces.add(fi)
        for fi in ext_faces:
            length = emb.faces[fi].length
            if length == 5:
                raise PropositionViolated("no-5-face", (i, fi))
            if length == 4:
                if b.type_tag in (TYPE_B5A, TYPE_B5B, TYPE_B5C, TYPE_B4A):
                    raise PropositionViolated("no-4-face-on-rigid-block", (i, fi))
                if b.type_tag in (TYPE_B5D, TYPE_B4B):
                    shape = _shared_two_path(emb.faces[fi].edge_multiset(), b)
                    if shape is None:
                        raise PropositionViolated("4-face-off-designated-path", (i, fi))
                    owner = _block_of_edge(blocks)
                    _, rest = shape
                    for e in rest:
                        if blocks[owner[e]].type_tag != TYPE_B2:
                            raise PropositionViolated("4-face-partner-not-trivial", (i, fi, e))
    return PropositionReport(checked_blocks=len(blocks), checked_faces=emb.num_faces)


# -- global edge bound via peeling and biconnected blocks -----------------------


_BLOCK_MARGIN = {2: 3, 3: 4, 4: 3, 5: 2}
_BIG_BLOCK_MARGIN = 9


@dataclass(frozen=True)
class BoundCertificate:
    num_vertices: int
    num_edges: int
    five_v_minus_two_e: int
    bound_holds: bool
    small_exception: bool
    peel_trace: tuple[tuple[int, int], ...]
    core_vertices: int
    core_edges: int
    block_orders: tuple[int, ...]
    block_margins: tuple[int, ...]
    blocks_meet_margins: bool
    chain_lower_bound: int
    chain_holds: bool

    def to_json(self) -> str:
        payload = {
            "v": self.num_vertices,
            "e": self.num_edges,
            "5v-2e": self.five_v_minus_two_e,
            "bound_holds": self.bound_holds,
            "small_exception": self.small_exception,
            "peeled_vertices": len(self.peel_trace),
            "core": {"v": self.core_vertices, "e": self.core_edges},
            "block_orders": list(self.block_orders),
            "block_margins": list(self.block_margins),
            "blocks_meet_margins": self.blocks_meet_margins,
            "chain_lower_bound": self.chain_lower_bound,
            "chain_holds": self.chain_holds,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def certify_bound(graph_or_emb: Graph | PlanarEmbedding) -> BoundCertificate:
    """Check 5v - 2e >= 14 (i.e. e <= (5/2)v - 7) for a C6-free planar graph.

    Runs the peel-then-blocks accounting chain and reports each margin; small
    graphs (v <= 17) may genuinely fail the bound and are flagged instead of
    rejected.
    """
    if isinstance(graph_or_emb, PlanarEmbedding):
        graph = graph_or_emb.graph()
    else:
        graph = graph_or_emb
        from .oracle import planarity_test

        ok, _ = planarity_test(graph)
        if not ok:
            raise NotPlanar("input graph is not planar")
    witness = find_cycle_of_length(graph, 6)
    if witness is not None:
        raise NotC6Free(witness)

    v, e = graph.n, graph.num_edges
    lhs = 5 * v - 2 * e
    core, trace = peel_min_degree(graph, 3)
    # Per-step accounting: deleting a degree-d vertex lowers 5v - 2e by 5 - 2d.
    if lhs != (5 * core.n - 2 * core.num_edges) + sum(5 - 2 * d for _, d in trace):
        raise GraphError("peeling trace does not balance")

    dec = biconnected_blocks(core)
    orders = tuple(b.num_vertices for b in dec.blocks)
    margins = tuple(
        5 * b.num_vertices - 2 * b.num_edges - 5 for b in dec.blocks
    )
    needed = tuple(
        _BLOCK_MARGIN.get(k, _BIG_BLOCK_MARGIN) for k in orders
    )
    blocks_ok = all(m >= need for m, need in zip(margins, needed))
    chain_lower = sum(needed) + 5 * dec.num_components + (v - core.n)
    return BoundCertificate(
        num_vertices=v,
        num_edges=e,
        five_v_minus_two_e=lhs,
        bound_holds=lhs >= 14,
        small_exception=lhs < 14 and v <= 17,
        peel_trace=trace,
        core_vertices=core.n,
        core_edges=core.num_edges,
        block_orders=orders,
        block_margins=margins,
        blocks_meet_margins=blocks_ok,
        chain_lower_bound=chain_lower,
        chain_holds=lhs >= chain_lower,
    )
