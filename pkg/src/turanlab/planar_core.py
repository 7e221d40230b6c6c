"""Plane graphs as combinatorial embeddings (rotation systems).

A rotation system stores, for every vertex, the cyclic counterclockwise order
of its neighbors.  Faces are traced with the usual rule: the dart following
(u, v) on its face is the rotation successor of (v, u) at v.  A rotation
system describes a plane (sphere) embedding exactly when every connected
component satisfies v - e + f = 2; construction rejects anything else, so an
accepted embedding is always a certificate of planarity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(Exception):
    """Base class for structural errors raised by this package."""


class AsymmetricAdjacency(GraphError):
    pass


class MultiEdgeOrLoop(GraphError):
    pass


class NonPlanarRotation(GraphError):
    pass


def norm_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "adj", "_adjsets")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        seen = set()
        for u, v in edges:
            if u == v:
                raise MultiEdgeOrLoop(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            e = norm_edge(u, v)
            if e in seen:
                raise MultiEdgeOrLoop(f"duplicate edge {e}")
            seen.add(e)
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(a)) for a in adj)
        self._adjsets = tuple(frozenset(a) for a in self.adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjsets[u]

    def adjacent(self, v: int) -> frozenset[int]:
        return self._adjsets[v]

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of `drop`, relabeled compactly."""
        dropset = set(drop)
        keep = [v for v in range(self.n) if v not in dropset]
        relabel = {v: i for i, v in enumerate(keep)}
        edges = [
            (relabel[u], relabel[v])
            for u, v in self.edges
            if u not in dropset and v not in dropset
        ]
        return Graph(len(keep), edges)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.num_edges})"


@dataclass(frozen=True)
class FaceWalk:
    """One face boundary as the cyclic dart sequence traced around it."""

    darts: tuple[tuple[int, int], ...]

    @property
    def length(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d[0] for d in self.darts)

    def edge_multiset(self) -> list[tuple[int, int]]:
        return [norm_edge(u, v) for u, v in self.darts]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edge_multiset())


class PlanarEmbedding:
    """Validated plane rotation system.  Immutable after construction."""

    __slots__ = ("rotations", "faces", "_face_of_dart", "_graph")

    def __init__(self, rotation_spec: Sequence[Sequence[int]]):
        n = len(rotation_spec)
        rotations = tuple(tuple(nbrs) for nbrs in rotation_spec)
        darts = set()
        for u, nbrs in enumerate(rotations):
            if len(set(nbrs)) != len(nbrs):
                raise MultiEdgeOrLoop(f"repeated neighbor in rotation of {u}")
            for v in nbrs:
                if v == u:
                    raise MultiEdgeOrLoop(f"loop at vertex {u}")
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} out of range at vertex {u}")
                darts.add((u, v))
        for u, v in darts:
            if (v, u) not in darts:
                raise AsymmetricAdjacency(f"{u} lists {v} but not conversely")
        self.rotations = rotations
        self.faces = self._trace_faces()
        face_of = {}
        for i, face in enumerate(self.faces):
            for d in face.darts:
                face_of[d] = i
        self._face_of_dart = face_of
        self._graph: Graph | None = None
        self._check_genus()

    # -- construction helpers -------------------------------------------------

    def _trace_faces(self) -> tuple[FaceWalk, ...]:
        succ = {}
        for u, nbrs in enumerate(self.rotations):
            deg = len(nbrs)
            for i, v in enumerate(nbrs):
                succ[(u, v)] = (u, nbrs[(i + 1) % deg])
        faces = []
        seen = set()
        for start in sorted(succ):
            if start in seen:
                continue
            walk = []
            d = start
            while True:
                walk.append(d)
                seen.add(d)
                u, v = d
                d = succ[(v, u)]
                if d == start:
                    break
            faces.append(FaceWalk(tuple(walk)))
        return tuple(faces)

    def _check_genus(self) -> None:
        # Per connected component with at least one edge: v - e + f must be 2.
        n = self.n
        comp = [-1] * n
        cid = 0
        for s in range(n):
            if comp[s] != -1:
                continue
            stack = [s]
            comp[s] = cid
            while stack:
                u = stack.pop()
                for v in self.rotations[u]:
                    if comp[v] == -1:
                        comp[v] = cid
                        stack.append(v)
            cid += 1
        v_of = [0] * cid
        e_of = [0] * cid
        f_of = [0] * cid
        has_edge = [False] * cid
        for u in range(n):
            v_of[comp[u]] += 1
            e_of[comp[u]] += len(self.rotations[u])
            if self.rotations[u]:
                has_edge[comp[u]] = True
        for face in self.faces:
            f_of[comp[face.darts[0][0]]] += 1
        for c in range(cid):
            if not has_edge[c]:
                continue
            euler = v_of[c] - e_of[c] // 2 + f_of[c]
            if euler != 2:
                raise NonPlanarRotation(
                    f"component has Euler characteristic {euler}, expected 2"
                )

    # -- queries ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotations)

    @property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    @property
    def num_faces(self) -> int:
        return len(self.faces)

    def graph(self) -> Graph:
        if self._graph is None:
            edges = {norm_edge(u, v) for u, nbrs in enumerate(self.rotations) for v in nbrs}
            self._graph = Graph(self.n, edges)
        return self._graph

    def face_of_dart(self, dart: tuple[int, int]) -> int:
        return self._face_of_dart[dart]

    def faces_of_edge(self, u: int, v: int) -> tuple[int, int]:
        """Indices of the two face walks bordering edge uv (equal for bridges)."""
        return (self._face_of_dart[(u, v)], self._face_of_dart[(v, u)])

    def face_length_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for f in self.faces:
            census[f.length] = census.get(f.length, 0) + 1
        return census

    def __eq__(self, other) -> bool:
        return isinstance(other, PlanarEmbedding) and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash(self.rotations)

    def __repr__(self) -> str:
        return f"PlanarEmbedding(n={self.n}, e={self.num_edges}, f={self.num_faces})"


def build_embedding(rotation_spec: Sequence[Sequence[int]]) -> PlanarEmbedding:
    """Validate a per-vertex ccw neighbor listing as a plane embedding."""
    return PlanarEmbedding(rotation_spec)


def trace_faces(emb: PlanarEmbedding) -> tuple[FaceWalk, ...]:
    return emb.faces


def embedding_from_faces(
    n: int, faces: Sequence[Sequence[int]]
) -> PlanarEmbedding:
    """Build an embedding from a closed-walk list covering every edge twice.

    Each face is a cyclic vertex walk; orientations are reconciled
    automatically (the complex must be a sphere).  Used by the builders that
    specify graphs cell-by-cell rather than vertex-by-vertex.
    """
    face_darts: list[list[tuple[int, int]]] = []
    for walk in faces:
        if len(walk) < 3:
            raise GraphError("face walks need at least 3 darts")
        ds = [(walk[i], walk[(i + 1) % len(walk)]) for i in range(len(walk))]
        face_darts.append(ds)

    # Orient faces so every dart is used exactly once overall.
    dart_owner: dict[tuple[int, int], list[int]] = {}
    for i, ds in enumerate(face_darts):
        for u, v in ds:
            dart_owner.setdefault(norm_edge(u, v), []).append(i)
    for e, owners in dart_owner.items():
        if len(owners) != 2:
            raise GraphError(f"edge {e} appears {len(owners)} times, expected 2")

    flipped = [None] * len(face_darts)  # type: list[bool | None]
    for start in range(len(face_darts)):
        if flipped[start] is not None:
            continue
        flipped[start] = False
        queue = [start]
        while queue:
            i = queue.pop()
            ds = face_darts[i] if not flipped[i] else [(v, u) for u, v in reversed(face_darts[i])]
            for u, v in ds:
                for j in dart_owner[norm_edge(u, v)]:
                    if j == i:
                        continue
                    ds_j = face_darts[j]
                    # j must traverse the edge as (v, u)
                    uses_forward = (v, u) in ds_j
                    uses_backward = (u, v) in ds_j
                    if uses_forward and uses_backward:
                        raise GraphError(f"edge {norm_edge(u, v)} doubled within one face")
                    want_flip = not uses_forward
                    if flipped[j] is None:
                        flipped[j] = want_flip
                        queue.append(j)
                    elif flipped[j] != want_flip:
                        raise GraphError("face orientations cannot be reconciled")

    succ_at: list[dict[int, int]] = [dict() for _ in range(n)]
    for i, ds in enumerate(face_darts):
        oriented = ds if not flipped[i] else [(v, u) for u, v in reversed(ds)]
        m = len(oriented)
        for idx in range(m):
            a, b = oriented[idx]
            _, c = oriented[(idx + 1) % m]
            if a in succ_at[b]:
                raise GraphError(f"conflicting corners at vertex {b}")
            succ_at[b][a] = c

    rotations: list[list[int]] = []
    for v in range(n):
        mapping = succ_at[v]
        if not mapping:
            rotations.append([])
            continue
        start = min(mapping)
        order = [start]
        while True:
            nxt = mapping[order[-1]]
            if nxt == start:
                break
            if nxt in order:
                raise GraphError(f"rotation at vertex {v} is not a single cycle")
            order.append(nxt)
        if len(order) != len(mapping):
            raise GraphError(f"rotation at vertex {v} is not a single cycle")
        rotations.append(order)
    return PlanarEmbedding(rotations)


@dataclass(frozen=True)
class DegreeProfile:
    degrees: tuple[int, ...]
    min_degree: int

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for d in self.degrees:
            out[d] = out.get(d, 0) + 1
        return out


def degree_profile(emb: PlanarEmbedding) -> DegreeProfile:
    degs = tuple(len(r) for r in emb.rotations)
    return DegreeProfile(degs, min(degs) if degs else 0)


# -- biconnected decomposition ------------------------------------------------


@dataclass(frozen=True)
class BiconnectedBlock:
    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class BlockCutDecomposition:
    blocks: tuple[BiconnectedBlock, ...]
    cut_vertices: frozenset[int]
    block_tree: dict[str, tuple[str, ...]]
    num_components: int

    def size_counts(self) -> dict[str, int]:
        """Block counts keyed by order: '2'..'5' exact, '6+' for the rest."""
        counts = {"2": 0, "3": 0, "4": 0, "5": 0, "6+": 0}
        for b in self.blocks:
            k = b.num_vertices
            counts[str(k) if k <= 5 else "6+"] += 1
        return counts


def biconnected_blocks(graph: Graph) -> BlockCutDecomposition:
    """Maximal 2-connected subgraphs via iterative lowpoint search."""
    n = graph.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    raw_blocks: list[list[tuple[int, int]]] = []
    cuts: set[int] = set()
    components = 0

    for root in range(n):
        if disc[root] != -1 or not graph.adj[root]:
            continue
        components += 1
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            u, i = stack.pop()
            if i < len(graph.adj[u]):
                stack.append((u, i + 1))
                v = graph.adj[u][i]
                if disc[v] == -1:
                    parent[v] = u
                    if u == root:
                        root_children += 1
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, 0))
                elif v != parent[u] and disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    low[u] = min(low[u], disc[v])
            else:
                if parent[u] != -1:
                    p = parent[u]
                    low[p] = min(low[p], low[u])
                    if low[u] >= disc[p]:
                        if p != root or root_children > 0:
                            block = []
                            while True:
                                e = edge_stack.pop()
                                block.append(e)
                                if e == (p, u):
                                    break
                            raw_blocks.append(block)
                            if p != root:
                                cuts.add(p)
        if root_children > 1:
            cuts.add(root)

    blocks = []
    for raw in raw_blocks:
        vs = frozenset(v for e in raw for v in e)
        es = frozenset(norm_edge(*e) for e in raw)
        blocks.append(BiconnectedBlock(vs, es))
    blocks.sort(key=lambda b: (min(b.vertices), sorted(b.edges)))

    tree: dict[str, set[str]] = {}
    for i, b in enumerate(blocks):
        bid = f"B{i}"
        tree.setdefault(bid, set())
        for c in b.vertices & cuts:
            cidlbl = f"c{c}"
            tree.setdefault(cidlbl, set())
            tree[bid].add(cidlbl)
            tree[cidlbl].add(bid)
    frozen_tree = {k: tuple(sorted(v)) for k, v in tree.items()}

    # Components counted over vertices with edges plus isolated vertices.
    isolated = sum(1 for v in range(n) if not graph.adj[v])
    return BlockCutDecomposition(
        tuple(blocks), frozenset(cuts), frozen_tree, components + isolated
    )


def is_biconnected(graph: Graph) -> bool:
    if graph.n < 3:
        return False
    dec = biconnected_blocks(graph)
    return len(dec.blocks) == 1 and dec.blocks[0].num_vertices == graph.n


# -- degree peeling -----------------------------------------------------------


def peel_min_degree(
    graph: Graph, threshold: int = 3
) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Repeatedly delete a vertex of degree below `threshold`.

    Always removes the lowest-id vertex among those of minimum degree, so the
    trace is deterministic.  Returns the peeled graph on the surviving
    vertices (original labels are not preserved; the subgraph is relabeled)
    together with a (vertex, degree-at-deletion) trace in original labels.
    """
    alive = set(range(graph.n))
    deg = {v: graph.degree(v) for v in alive}
    adj = {v: set(graph.adj[v]) for v in alive}
    trace: list[tuple[int, int]] = []
    while True:
        candidates = [v for v in alive if deg[v] < threshold]
        if not candidates:
            break
        v = min(candidates, key=lambda x: (deg[x], x))
        trace.append((v, deg[v]))
        alive.remove(v)
        for w in adj[v]:
            adj[w].discard(v)
            deg[w] -= 1
        del adj[v], deg[v]
    dropped = [v for v in range(graph.n) if v not in alive]
    return graph.without_vertices(dropped), tuple(trace)


# -- serialization ------------------------------------------------------------


def embedding_to_json(emb: PlanarEmbedding) -> str:
    payload = {"n": emb.n, "rotation": [list(r) for r in emb.rotations]}
    return json.dumps(payload, sort_keys=True) + "\n"


def embedding_from_json(text: str) -> PlanarEmbedding:
    payload = json.loads(text)
    try:
        n = payload["n"]
        rotation = payload["rotation"]
    except (TypeError, KeyError) as exc:
        raise GraphError("graph JSON needs keys 'n' and 'rotation'") from exc
    if len(rotation) != n:
        raise GraphError(f"rotation lists {len(rotation)} vertices, n={n}")
    return build_embedding(rotation)


def graph_to_dot(graph: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        lines.append(f"  {v};")
    for u, v in graph.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
