"""Triangular-block decomposition of plane graphs.

Two edges belong to the same triangular-block when they are linked by a chain
of triangular faces; an edge lying in no triangular face forms a trivial
block by itself.  Blocks partition the edge set and are classified by
(order, size, degree multiset), which separates the eight legal shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .planar_core import (
    FaceWalk,
    GraphError,
    PlanarEmbedding,
    norm_edge,
)


class UnclassifiableBlock(GraphError):
    pass


TYPE_B2 = "B2"
TYPE_B3 = "B3"
TYPE_B4A = "B4a"
TYPE_B4B = "B4b"
TYPE_B5A = "B5a"
TYPE_B5B = "B5b"
TYPE_B5C = "B5c"
TYPE_B5D = "B5d"
TYPE_OVERSIZED = "Oversized"


@dataclass(frozen=True)
class TriangularBlock:
    edges: tuple[tuple[int, int], ...]
    vertices: tuple[int, ...]
    type_tag: str
    exterior_edges: tuple[tuple[int, int], ...]
    interior_edges: tuple[tuple[int, int], ...]
    exterior_paths: tuple[tuple[int, ...], ...]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def is_trivial(self) -> bool:
        return self.type_tag == TYPE_B2

    def degree_multiset(self) -> tuple[int, ...]:
        deg: dict[int, int] = {v: 0 for v in self.vertices}
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(sorted(deg.values(), reverse=True))


class _DSU:
    def __init__(self, items: Iterable):
        self.parent = {x: x for x in items}

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _classify(num_vertices: int, num_edges: int, multiset: tuple[int, ...]) -> str:
    if num_vertices >= 6:
        return TYPE_OVERSIZED
    key = (num_vertices, num_edges)
    if key == (2, 1):
        return TYPE_B2
    if key == (3, 3):
        return TYPE_B3
    if key == (4, 6):
        return TYPE_B4A
    if key == (4, 5):
        return TYPE_B4B
    if key == (5, 9):
        return TYPE_B5A
    if key == (5, 7):
        return TYPE_B5C
    if key == (5, 8):
        if multiset == (4, 3, 3, 3, 3):
            return TYPE_B5B
        if multiset == (4, 4, 3, 3, 2):
            return TYPE_B5D
    raise UnclassifiableBlock(
        f"no block shape has {num_vertices} vertices, {num_edges} edges, "
        f"degrees {multiset}"
    )


def classify_block(block: TriangularBlock, emb: PlanarEmbedding | None = None) -> str:
    return _classify(block.num_vertices, block.num_edges, block.degree_multiset())


def decompose_triangular_blocks(
    emb: PlanarEmbedding, edge_order: Sequence[tuple[int, int]] | None = None
) -> tuple[TriangularBlock, ...]:
    """Partition the edges of `emb` into triangular-blocks.

    `edge_order` only permutes internal union ordering; the result is
    order-invariant and that is what tests shuffle it for.
    """
    graph = emb.graph()
    edges = list(graph.edges) if edge_order is None else [
        norm_edge(u, v) for u, v in edge_order
    ]
    if sorted(edges) != list(graph.edges):
        raise GraphError("edge_order must enumerate every edge exactly once")
    dsu = _DSU(edges)
    for face in emb.faces:
        if face.length != 3:
            continue
        e0, e1, e2 = face.edge_multiset()
        dsu.union(e0, e1)
        dsu.union(e1, e2)

    grouped: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for e in edges:
        grouped.setdefault(dsu.find(e), []).append(e)

    raw_groups = sorted(sorted(g) for g in grouped.values())
    junction_count: dict[int, int] = {}
    for g in raw_groups:
        for v in sorted({x for e in g for x in e}):
            junction_count[v] = junction_count.get(v, 0) + 1

    blocks = []
    for g in raw_groups:
        blocks.append(_finish_block(g, emb, junction_count))
    return tuple(blocks)


def _finish_block(
    edges: list[tuple[int, int]],
    emb: PlanarEmbedding,
    junction_count: dict[int, int],
) -> TriangularBlock:
    vertices = tuple(sorted({v for e in edges for v in e}))
    exterior = []
    interior = []
    for u, v in edges:
        fa, fb = emb.faces_of_edge(u, v)
        if emb.faces[fa].length > 3 or emb.faces[fb].length > 3:
            exterior.append((u, v))
        else:
            interior.append((u, v))
    deg: dict[int, int] = {v: 0 for v in vertices}
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    multiset = tuple(sorted(deg.values(), reverse=True))
    tag = _classify(len(vertices), len(edges), multiset)
    paths = ()
    if tag != TYPE_B2:
        paths = _exterior_paths(exterior, junction_count)
    return TriangularBlock(
        edges=tuple(edges),
        vertices=vertices,
        type_tag=tag,
        exterior_edges=tuple(sorted(exterior)),
        interior_edges=tuple(sorted(interior)),
        exterior_paths=paths,
    )


def _exterior_paths(
    exterior: list[tuple[int, int]], junction_count: dict[int, int]
) -> tuple[tuple[int, ...], ...]:
    """Maximal runs of exterior edges between junction vertices."""
    adj: dict[int, list[int]] = {}
    for u, v in exterior:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    for nbrs in adj.values():
        nbrs.sort()
    is_junction = {v: junction_count.get(v, 0) >= 2 for v in adj}
    paths = []
    used: set[tuple[int, int]] = set()
    for start in sorted(adj):
        if not is_junction[start]:
            continue
        for first in adj[start]:
            if (start, first) in used:
                continue
            walk = [start, first]
            used.add((start, first))
            used.add((first, start))
            while not is_junction[walk[-1]] and len(adj[walk[-1]]) == 2:
                a, b = adj[walk[-1]]
                nxt = b if a == walk[-2] else a
                used.add((walk[-1], nxt))
                used.add((nxt, walk[-1]))
                walk.append(nxt)
            if is_junction[walk[-1]]:
                paths.append(tuple(walk))
    # a path and its reverse are the same object; keep the lexicographic one
    canon = set()
    out = []
    for p in paths:
        key = min(p, p[::-1])
        if key not in canon:
            canon.add(key)
            out.append(key)
    return tuple(sorted(out))


@dataclass(frozen=True)
class JunctionMap:
    counts: dict[int, int]

    def count(self, v: int) -> int:
        return self.counts.get(v, 0)

    def is_junction(self, v: int) -> bool:
        return self.counts.get(v, 0) >= 2

    def junction_vertices(self) -> tuple[int, ...]:
        return tuple(sorted(v for v, c in self.counts.items() if c >= 2))


def junction_map(blocks: Sequence[TriangularBlock]) -> JunctionMap:
    counts: dict[int, int] = {}
    for b in blocks:
        for v in b.vertices:
            counts[v] = counts.get(v, 0) + 1
    return JunctionMap(counts)


def exterior_structure(
    block: TriangularBlock,
    emb: PlanarEmbedding,
    blocks: Sequence[TriangularBlock] | None = None,
) -> tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...], tuple[tuple[int, ...], ...]]:
    """(exterior edges, interior edges, exterior paths) for one block."""
    if blocks is None:
        blocks = decompose_triangular_blocks(emb)
    jm = junction_map(blocks)
    exterior = []
    interior = []
    for u, v in block.edges:
        fa, fb = emb.faces_of_edge(u, v)
        if emb.faces[fa].length > 3 or emb.faces[fb].length > 3:
            exterior.append((u, v))
        else:
            interior.append((u, v))
    paths = ()
    if block.type_tag != TYPE_B2:
        paths = _exterior_paths(exterior, jm.counts)
    return tuple(sorted(exterior)), tuple(sorted(interior)), paths


def block_from_edge(emb: PlanarEmbedding, edge: tuple[int, int]) -> frozenset[tuple[int, int]]:
    """Literal recursive closure of one edge under shared triangular faces.

    Independent of the DSU decomposition; used to cross-check it.
    """
    start = norm_edge(*edge)
    if start not in set(emb.graph().edges):
        raise GraphError(f"edge {start} not in graph")
    tri_of_edge: dict[tuple[int, int], list[FaceWalk]] = {}
    for face in emb.faces:
        if face.length != 3:
            continue
        for e in face.edge_multiset():
            tri_of_edge.setdefault(e, []).append(face)
    closure = {start}
    frontier = [start]
    while frontier:
        e = frontier.pop()
        for face in tri_of_edge.get(e, ()):
            for other in face.edge_multiset():
                if other not in closure:
                    closure.add(other)
                    frontier.append(other)
    return frozenset(closure)


def blocks_report_json(blocks: Sequence[TriangularBlock]) -> list[dict]:
    return [
        {
            "type": b.type_tag,
            "vertices": list(b.vertices),
            "edges": [list(e) for e in b.edges],
            "exterior_edges": [list(e) for e in b.exterior_edges],
            "interior_edges": [list(e) for e in b.interior_edges],
            "exterior_paths": [list(p) for p in b.exterior_paths],
        }
        for b in blocks
    ]
