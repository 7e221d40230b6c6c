"""Builders for the extremal families and small exceptional graphs.

The pipeline: start from a validated base (plane, every face of length l+1,
all degrees 2 or 3), halve every edge, link halving vertices around each
original vertex, then grow each original vertex's triangle or K4 into a book
block on l-1 vertices.  The result is C_l-free with e = (3l-9) * v(base),
which meets e = 3(l-1)/l * v - 6(l+1)/l exactly.

Base graphs ship in three validated families: the heptagonal grid g0(k), its
reduced variant h0(k), and plain cycles for general l.  Every builder is
deterministic: identical parameters give identical embeddings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .cycles import find_cycle_of_length
from .planar_core import (
    GraphError,
    PlanarEmbedding,
    build_embedding,
    degree_profile,
    embedding_from_faces,
    is_biconnected,
    norm_edge,
)


class InvalidK(GraphError):
    pass


class InvalidL(GraphError):
    pass


class InvalidM(GraphError):
    pass


class UnvalidatedBase(GraphError):
    pass


@dataclass(frozen=True)
class BaseGraph:
    """A validated construction base; see validate_base for the contract."""

    embedding: PlanarEmbedding
    family: str
    ell: int
    k: int | None
    degree2_count: int
    degree3_count: int

    @property
    def n(self) -> int:
        return self.embedding.n

    @property
    def num_edges(self) -> int:
        return self.embedding.num_edges


def validate_base(
    emb: PlanarEmbedding, ell: int, family: str = "user", k: int | None = None
) -> BaseGraph:
    """Admit an embedding as a construction base.

    Every face must have length ell+1 and every vertex degree 2 or 3; the
    named families additionally must match their order/size/census formulas.
    """
    if ell < 6:
        raise InvalidL(f"ell must be at least 6, got {ell}")
    bad = [f.length for f in emb.faces if f.length != ell + 1]
    if bad:
        raise UnvalidatedBase(f"faces of length {sorted(set(bad))} present, need all {ell + 1}")
    profile = degree_profile(emb)
    census = profile.census()
    if set(census) - {2, 3}:
        raise UnvalidatedBase(f"degrees {sorted(census)} outside {{2, 3}}")
    d2, d3 = census.get(2, 0), census.get(3, 0)
    if family == "g0":
        assert k is not None
        expect = (10 * k + 7, 14 * k + 7, 2 * k + 7, 8 * k)
        if (emb.n, emb.num_edges, d2, d3) != expect:
            raise UnvalidatedBase(f"g0({k}) census mismatch: {(emb.n, emb.num_edges, d2, d3)} != {expect}")
    elif family == "h0":
        assert k is not None
        expect = (10 * k + 2, 14 * k, 2 * k + 6, 8 * k - 4)
        if (emb.n, emb.num_edges, d2, d3) != expect:
            raise UnvalidatedBase(f"h0({k}) census mismatch: {(emb.n, emb.num_edges, d2, d3)} != {expect}")
    return BaseGraph(emb, family, ell, k, d2, d3)


def cycle_base(ell: int) -> BaseGraph:
    """The (ell+1)-cycle: the minimal base for a given forbidden length."""
    if ell < 6:
        raise InvalidL(f"ell must be at least 6, got {ell}")
    n = ell + 1
    rotations = [[(i - 1) % n, (i + 1) % n] for i in range(n)]
    return validate_base(build_embedding(rotations), ell, family="cycle")


def _grid_faces(k: int) -> tuple[int, list[list[int]]]:
    """Vertex ids and face walks of the heptagonal grid with k columns.

    Three brick layers of k heptagonal cells each, wrapped by nested
    top-to-bottom chords so that the sliced outer region is heptagonal too.
    """
    ids: dict[tuple[str, int], int] = {}

    def make(tag: str, lo: int, hi: int) -> None:
        for i in range(lo, hi + 1):
            ids[(tag, i)] = len(ids)

    make("SH", 0, k)      # top shoulders
    make("PK", 1, k)      # top peaks
    make("CC", 0, k)      # top-layer lower corners
    make("SB", 1, k)      # subdivision vertices on top cells
    make("DP", 1, k + 1)  # middle-layer upper corners
    make("DN", 1, k + 1)  # middle-layer lower corners
    make("BT", 1, k + 1)  # bottom-layer upper corners
    make("BB", 1, k + 1)  # bottom-layer lower corners
    make("BP", 1, k)      # bottom-layer roof dips
    make("SBB", 1, k)     # subdivision vertices on bottom cells
    make("V", 0, 0)       # apex

    def g(tag: str, i: int = 0) -> int:
        return ids[(tag, i)]

    faces: list[list[int]] = []
    for i in range(1, k + 1):
        faces.append([g("SH", i - 1), g("PK", i), g("SH", i), g("CC", i),
                      g("SB", i), g("DP", i), g("CC", i - 1)])
        faces.append([g("DP", i), g("SB", i), g("CC", i), g("DP", i + 1),
                      g("DN", i + 1), g("BT", i), g("DN", i)])
        faces.append([g("BT", i), g("DN", i + 1), g("BT", i + 1), g("BB", i + 1),
                      g("SBB", i), g("BP", i), g("BB", i)])
    faces.append([g("V"), g("SH", 0), g("CC", 0), g("DP", 1), g("DN", 1),
                  g("BT", 1), g("BB", 1)])
    if k == 1:
        faces.append([g("V"), g("BB", 1), g("BP", 1), g("SBB", 1), g("SH", 1),
                      g("PK", 1), g("SH", 0)])
    else:
        faces.append([g("V"), g("BB", 1), g("BP", 1), g("PK", 2), g("SH", 1),
                      g("PK", 1), g("SH", 0)])
        for i in range(1, k - 1):
            faces.append([g("BP", i), g("SBB", i), g("BB", i + 1), g("BP", i + 1),
                          g("PK", i + 2), g("SH", i + 1), g("PK", i + 1)])
        faces.append([g("BP", k - 1), g("SBB", k - 1), g("BB", k), g("BP", k),
                      g("SBB", k), g("SH", k), g("PK", k)])
    faces.append([g("SH", k), g("SBB", k), g("BB", k + 1), g("BT", k + 1),
                  g("DN", k + 1), g("DP", k + 1), g("CC", k)])
    return len(ids), faces


def heptagonal_base(k: int) -> BaseGraph:
    """The grid family g0(k): 10k+7 vertices, 14k+7 edges, all faces 7."""
    if k < 0:
        raise InvalidK(f"k must be nonnegative, got {k}")
    if k == 0:
        emb = cycle_base(6).embedding
        return validate_base(emb, 6, family="g0", k=0)
    n, faces = _grid_faces(k)
    return validate_base(embedding_from_faces(n, faces), 6, family="g0", k=k)


def reduced_base(k: int) -> BaseGraph:
    """The reduced family h0(k): 10k+2 vertices, 14k edges, all faces 7."""
    if k < 1:
        raise InvalidK(f"k must be at least 1, got {k}")
    if k == 1:
        # K4 with opposite edges subdivided (2,2,1,1,1,1) times: 12 vertices,
        # 14 edges, four 7-faces, degree census (8, 4).
        faces = [
            [0, 4, 5, 1, 10, 2, 8],
            [0, 9, 3, 11, 1, 5, 4],
            [0, 8, 2, 6, 7, 3, 9],
            [1, 11, 3, 7, 6, 2, 10],
        ]
        return validate_base(embedding_from_faces(12, faces), 6, family="h0", k=1)

    n, faces = _grid_faces(k)
    ids: dict[tuple[str, int], int] = {}
    pos = 0
    for tag, lo, hi in (
        ("SH", 0, k), ("PK", 1, k), ("CC", 0, k), ("SB", 1, k),
        ("DP", 1, k + 1), ("DN", 1, k + 1), ("BT", 1, k + 1),
        ("BB", 1, k + 1), ("BP", 1, k), ("SBB", 1, k), ("V", 0, 0),
    ):
        for i in range(lo, hi + 1):
            ids[(tag, i)] = pos
            pos += 1

    def g(tag: str, i: int = 0) -> int:
        return ids[(tag, i)]

    drop = {g("CC", 0), g("DP", 1), g("DN", 1), g("SB", 1), g("CC", 1)}
    dead = []
    for fi, walk in enumerate(faces):
        if drop & set(walk):
            dead.append(fi)
    if len(dead) != 4:
        raise GraphError(f"expected 4 faces to merge, found {len(dead)}")
    kept = [walk for fi, walk in enumerate(faces) if fi not in dead]
    kept.append([g("SH", 0), g("V"), g("BB", 1), g("BT", 1), g("DN", 2),
                 g("DP", 2), g("SB", 2)])
    kept.append([g("SH", 0), g("SB", 2), g("CC", 2), g("SH", 2), g("PK", 2),
                 g("SH", 1), g("PK", 1)])

    survivors = sorted(set(range(n)) - drop)
    relabel = {v: i for i, v in enumerate(survivors)}
    relabeled = [[relabel[v] for v in walk] for walk in kept]
    return validate_base(
        embedding_from_faces(len(survivors), relabeled), 6, family="h0", k=k
    )


# -- halving and expansion ------------------------------------------------------


@dataclass(frozen=True)
class HalvedGraph:
    """Intermediate stage: base with halving vertices linked at each corner."""

    embedding: PlanarEmbedding
    base: BaseGraph
    halver_of_edge: dict[tuple[int, int], int]
    expansion_corner: dict[int, tuple[int, int]]


def halve_and_link(base: BaseGraph) -> HalvedGraph:
    """Subdivide every base edge and link halving vertices around corners.

    A degree-2 vertex gets one linking edge (closing a triangle); a degree-3
    vertex gets all three (closing a K4).  Linking edges are embedded inside
    the corner so each closed triangle is a face.
    """
    if not isinstance(base, BaseGraph):
        raise UnvalidatedBase("halve_and_link requires a validated BaseGraph")
    emb = base.embedding
    n0 = emb.n
    edges = list(emb.graph().edges)
    halver = {e: n0 + i for i, e in enumerate(edges)}

    rot: list[list[int]] = [
        [halver[norm_edge(u, v)] for v in emb.rotations[u]] for u in range(n0)
    ]
    for (u, v), h in halver.items():
        rot.append([u, v])

    corner_of: dict[int, tuple[int, int]] = {}
    for u in range(n0):
        hs = rot[u]
        if len(hs) == 2:
            corners = [(hs[0], hs[1])]
        elif len(hs) == 3:
            corners = [(hs[0], hs[1]), (hs[1], hs[2]), (hs[2], hs[0])]
        else:
            raise UnvalidatedBase(f"base vertex {u} has degree {len(hs)}")
        corner_of[u] = (hs[0], hs[1])
        for a, b in corners:
            # new edge a-b drawn inside the corner (a, u, b):
            # at a it precedes u, at b it follows u
            rot[a].insert(rot[a].index(u), b)
            rot[b].insert(rot[b].index(u) + 1, a)
    return HalvedGraph(build_embedding(rot), base, halver, corner_of)


def expand_vertices(halved: HalvedGraph, ell: int) -> PlanarEmbedding:
    """Grow each original vertex's corner triangle into a book on ell-1 vertices.

    Degree-2 vertices gain ell-4 new path vertices, degree-3 vertices ell-5,
    every new vertex adjacent to both linked halving vertices of the corner.
    """
    if ell < 6:
        raise InvalidL(f"ell must be at least 6, got {ell}")
    if not isinstance(halved, HalvedGraph):
        raise UnvalidatedBase("expand_vertices requires halve_and_link output")
    base = halved.base
    rot = [list(r) for r in halved.embedding.rotations]
    next_id = len(rot)
    for u in range(base.n):
        h1, h2 = halved.expansion_corner[u]
        deg = len(base.embedding.rotations[u])
        m = (ell - 4) if deg == 2 else (ell - 5)
        path = list(range(next_id, next_id + m))
        next_id += m
        rot[u].insert(rot[u].index(h1) + 1, path[0])
        for j in range(m):
            prev = u if j == 0 else path[j - 1]
            if j < m - 1:
                rot.append([prev, h1, path[j + 1], h2])
            else:
                rot.append([prev, h1, h2])
        i1 = rot[h1].index(u)
        if rot[h1][i1 - 1] != h2:
            raise GraphError(f"corner of vertex {u} lost at halver {h1}")
        rot[h1][i1:i1] = list(reversed(path))
        i2 = rot[h2].index(u)
        if rot[h2][(i2 + 1) % len(rot[h2])] != h1:
            raise GraphError(f"corner of vertex {u} lost at halver {h2}")
        rot[h2][i2 + 1 : i2 + 1] = path
    return build_embedding(rot)


# -- reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class ConstructionReport:
    """A built graph together with re-verified postconditions."""

    embedding: PlanarEmbedding
    family: str
    params: tuple[tuple[str, int], ...]
    num_vertices: int
    num_edges: int
    min_degree: int
    forbidden_length: int
    forbidden_cycle_absent: bool
    two_connected: bool
    identity_residual: Fraction
    face_census: tuple[tuple[int, int], ...]
    degree_census: tuple[tuple[int, int], ...]

    def to_json(self) -> str:
        payload = {
            "family": self.family,
            "params": dict(self.params),
            "v": self.num_vertices,
            "e": self.num_edges,
            "min_degree": self.min_degree,
            "forbidden_length": self.forbidden_length,
            "forbidden_cycle_absent": self.forbidden_cycle_absent,
            "two_connected": self.two_connected,
            "identity_residual": str(self.identity_residual),
            "face_census": {str(k): v for k, v in self.face_census},
            "degree_census": {str(k): v for k, v in self.degree_census},
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _make_report(
    emb: PlanarEmbedding,
    family: str,
    params: dict[str, int],
    ell: int,
    expect_v: int | None = None,
    expect_e: int | None = None,
    check_identity: bool = True,
) -> ConstructionReport:
    v, e = emb.n, emb.num_edges
    if expect_v is not None and v != expect_v:
        raise GraphError(f"{family}: built {v} vertices, expected {expect_v}")
    if expect_e is not None and e != expect_e:
        raise GraphError(f"{family}: built {e} edges, expected {expect_e}")
    graph = emb.graph()
    witness = find_cycle_of_length(graph, ell)
    if witness is not None:
        raise GraphError(f"{family}: contains a {ell}-cycle {witness.vertices}")
    profile = degree_profile(emb)
    residual = Fraction(0)
    if check_identity:
        residual = Fraction(e) - (Fraction(3 * (ell - 1), ell) * v - Fraction(6 * (ell + 1), ell))
        if residual != 0:
            raise GraphError(f"{family}: edge-count identity residual {residual}")
    return ConstructionReport(
        embedding=emb,
        family=family,
        params=tuple(sorted(params.items())),
        num_vertices=v,
        num_edges=e,
        min_degree=profile.min_degree,
        forbidden_length=ell,
        forbidden_cycle_absent=True,
        two_connected=is_biconnected(graph),
        identity_residual=residual,
        face_census=tuple(sorted(emb.face_length_census().items())),
        degree_census=tuple(sorted(profile.census().items())),
    )


def construct_from_base(base: BaseGraph, ell: int) -> ConstructionReport:
    """Full pipeline on a validated base: halve, link, expand, verify."""
    if ell != base.ell:
        raise InvalidL(f"base was validated for ell={base.ell}, got {ell}")
    emb = expand_vertices(halve_and_link(base), ell)
    expect_e = (3 * ell - 9) * base.n
    return _make_report(
        emb,
        family=f"expanded-{base.family}",
        params={"ell": ell, "base_n": base.n, **({"k": base.k} if base.k is not None else {})},
        ell=ell,
        expect_e=expect_e,
    )


def assemble_extremal(k: int, variant: str = "g0") -> ConstructionReport:
    """Extremal family member with e = (5/2)v - 7 exactly."""
    variant = variant.lower()
    if variant == "g0":
        if k < 0:
            raise InvalidK(f"k must be nonnegative for g0, got {k}")
        base = heptagonal_base(k)
        expect_v, expect_e = 36 * k + 28, 90 * k + 63
    elif variant == "h0":
        if k < 1:
            raise InvalidK(f"k must be at least 1 for h0, got {k}")
        base = reduced_base(k)
        expect_v, expect_e = 36 * k + 10, 90 * k + 18
    else:
        raise GraphError(f"unknown variant {variant!r}, expected 'g0' or 'h0'")
    emb = expand_vertices(halve_and_link(base), 6)
    report = _make_report(
        emb,
        family=f"extremal-{variant}",
        params={"k": k, "ell": 6},
        ell=6,
        expect_v=expect_v,
        expect_e=expect_e,
    )
    if 2 * report.num_edges != 5 * report.num_vertices - 14:
        raise GraphError("extremal identity e = (5/2)v - 7 failed")
    return report


# -- small explicit graphs -------------------------------------------------------


def gadget_block(m: int) -> PlanarEmbedding:
    """Book block on m vertices: base edge plus an (m-2)-vertex path, every
    path vertex adjacent to both base endpoints; 3m - 6 edges."""
    if m < 4:
        raise InvalidM(f"gadget needs at least 4 vertices, got {m}")
    x1, x2 = 0, 1
    path = list(range(2, m))
    faces: list[list[int]] = [[x1, x2, path[-1]]]
    for i in range(len(path) - 1):
        faces.append([x1, path[i + 1], path[i]])
        faces.append([x2, path[i], path[i + 1]])
    faces.append([x1, path[0], x2])
    emb = embedding_from_faces(m, faces)
    if emb.num_edges != 3 * m - 6:
        raise GraphError("gadget edge count mismatch")
    return emb


def chain_of_k5minus(t: int) -> PlanarEmbedding:
    """t copies of the 9-edge five-vertex block glued corner to corner."""
    if t < 1:
        raise InvalidK(f"chain needs at least one copy, got {t}")
    corners = list(range(t + 1))

    def top(i: int) -> int:
        return t + 1 + 3 * i

    def mid(i: int) -> int:
        return t + 1 + 3 * i + 1

    def low(i: int) -> int:
        return t + 1 + 3 * i + 2

    faces: list[list[int]] = []
    for i in range(t):
        w1, w2, w3 = corners[i], top(i), corners[i + 1]
        w4, w5 = low(i), mid(i)
        faces.append([w1, w2, w5])
        faces.append([w2, w3, w5])
        faces.append([w5, w3, w4])
        faces.append([w1, w5, w4])
        faces.append([w1, w4, w3])
    outer: list[int] = []
    for i in range(t):
        outer.extend([corners[i], top(i)])
    outer.append(corners[t])
    outer.extend(corners[t - 1 : 0 : -1])
    faces.append(outer)
    emb = embedding_from_faces(4 * t + 1, faces)
    if (emb.n, emb.num_edges) != (4 * t + 1, 9 * t):
        raise GraphError("chain counts mismatch")
    return emb


def chain_report(t: int) -> ConstructionReport:
    emb = chain_of_k5minus(t)
    return _make_report(
        emb,
        family="chain",
        params={"t": t},
        ell=6,
        expect_v=4 * t + 1,
        expect_e=9 * t,
        check_identity=False,
    )
