"""Brute-force ground truth for small orders.

Two independent enumeration routes back every reported extremal value:

* edge-subset scan over all labeled graphs, walking edge counts downward
  until a qualifying graph appears (filters: no 6-cycle via the subsets
  oracle, planarity via the library test);
* isomorphism-class registry grown one vertex at a time with canonical-form
  deduplication, then filtered per class (no 6-cycle via the path detector).

Planarity testing delegates to networkx; every embedding handed back is
rebuilt through the rotation-system validator, so a returned embedding is
always independently certified genus 0.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial

import networkx as nx
import numpy as np

from .cycles import BudgetExceeded, cycle_oracle_subsets, find_cycle_of_length
from .planar_core import Graph, PlanarEmbedding, build_embedding, is_biconnected

DEFAULT_ORDER_CAP = 7
DEFAULT_EMBEDDING_BUDGET = 10_000_000


def _order_cap() -> int:
    raw = os.environ.get("TURAN_LAB_BUDGET")
    if raw:
        try:
            return max(3, int(raw))
        except ValueError:
            pass
    return DEFAULT_ORDER_CAP


def planarity_test(graph: Graph) -> tuple[bool, PlanarEmbedding | None]:
    """Planarity verdict plus a validated embedding when planar."""
    G = nx.Graph()
    G.add_nodes_from(range(graph.n))
    G.add_edges_from(graph.edges)
    ok, emb = nx.check_planarity(G, counterexample=False)
    if not ok:
        return False, None
    data = emb.get_data()
    rotations = [data.get(v, []) for v in range(graph.n)]
    return True, build_embedding(rotations)


# -- labeled edge-subset machinery ----------------------------------------------


def _edge_slots(n: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def _graph_from_mask(n: int, mask: int) -> Graph:
    slots = _edge_slots(n)
    return Graph(n, [slots[i] for i in range(len(slots)) if mask >> i & 1])


def _mask_from_graph(graph: Graph) -> int:
    index = {e: i for i, e in enumerate(_edge_slots(graph.n))}
    mask = 0
    for e in graph.edges:
        mask |= 1 << index[e]
    return mask


@lru_cache(maxsize=None)
def _perm_gather(n: int) -> np.ndarray:
    """Edge-slot gather maps for all n! relabelings, shape (n!, C(n,2))."""
    slots = _edge_slots(n)
    index = {e: i for i, e in enumerate(slots)}
    rows = []
    for perm in permutations(range(n)):
        rows.append([index[tuple(sorted((perm[i], perm[j])))] for i, j in slots])
    return np.array(rows, dtype=np.int16)


def canonical_form(n: int, mask: int) -> int:
    """Minimum edge mask over all vertex relabelings."""
    num_slots = n * (n - 1) // 2
    bits = np.array([mask >> i & 1 for i in range(num_slots)], dtype=np.int64)
    gathered = bits[_perm_gather(n)]
    weights = np.left_shift(np.int64(1), np.arange(num_slots, dtype=np.int64))
    return int((gathered @ weights).min())


@lru_cache(maxsize=None)
def isomorphism_classes(n: int) -> tuple[int, ...]:
    """Canonical masks of all isomorphism classes of graphs on n vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (0,)
    prev_slots = _edge_slots(n - 1)
    slots = _edge_slots(n)
    index = {e: i for i, e in enumerate(slots)}
    lift = [index[e] for e in prev_slots]
    new_vertex_bits = [index[(i, n - 1)] for i in range(n - 1)]

    candidates: set[int] = set()
    for base in isomorphism_classes(n - 1):
        lifted = 0
        for i, slot in enumerate(lift):
            if base >> i & 1:
                lifted |= 1 << slot
        for nbhd in range(1 << (n - 1)):
            mask = lifted
            for i in range(n - 1):
                if nbhd >> i & 1:
                    mask |= 1 << new_vertex_bits[i]
            candidates.add(mask)
    return tuple(sorted({canonical_form(n, m) for m in candidates}))


# -- extremal values --------------------------------------------------------------


@dataclass(frozen=True)
class EnumerationResult:
    n: int
    max_edges: int
    witnesses: tuple[Graph, ...]
    examined: int
    passed_cycle_filter: int
    passed_planar_filter: int
    method: str

    @property
    def reference_bound(self) -> int:
        return int(Fraction(18 * (self.n - 2), 7))

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "max_edges": self.max_edges,
            "reference_bound": self.reference_bound,
            "witnesses": [[list(e) for e in w.edges] for w in self.witnesses],
            "examined": self.examined,
            "passed_cycle_filter": self.passed_cycle_filter,
            "passed_planar_filter": self.passed_planar_filter,
            "method": self.method,
        }


def _max_edges_by_subsets(n: int) -> EnumerationResult:
    slots = _edge_slots(n)
    examined = c6free = planar = 0
    best = -1
    witnesses: list[Graph] = []
    witness_canon: set[int] = set()
    for m in range(min(3 * n - 6, len(slots)), -1, -1):
        found_here = False
        for chosen in combinations(range(len(slots)), m):
            examined += 1
            g = Graph(n, [slots[i] for i in chosen])
            if n >= 6 and cycle_oracle_subsets(g, 6):
                continue
            c6free += 1
            ok, _ = planarity_test(g)
            if not ok:
                continue
            planar += 1
            found_here = True
            if best < m:
                best = m
            mask = 0
            for i in chosen:
                mask |= 1 << i
            canon = canonical_form(n, mask)
            if canon not in witness_canon:
                witness_canon.add(canon)
                witnesses.append(_graph_from_mask(n, canon))
        if found_here:
            break
    return EnumerationResult(
        n=n,
        max_edges=best,
        witnesses=tuple(witnesses),
        examined=examined,
        passed_cycle_filter=c6free,
        passed_planar_filter=planar,
        method="edge-subsets",
    )


def _max_edges_by_classes(n: int) -> EnumerationResult:
    best = -1
    witnesses: list[Graph] = []
    examined = c6free = planar = 0
    for mask in isomorphism_classes(n):
        examined += 1
        g = _graph_from_mask(n, mask)
        if n >= 6 and find_cycle_of_length(g, 6) is not None:
            continue
        c6free += 1
        ok, _ = planarity_test(g)
        if not ok:
            continue
        planar += 1
        if g.num_edges > best:
            best = g.num_edges
            witnesses = [g]
        elif g.num_edges == best:
            witnesses.append(g)
    return EnumerationResult(
        n=n,
        max_edges=best,
        witnesses=tuple(witnesses),
        examined=examined,
        passed_cycle_filter=c6free,
        passed_planar_filter=planar,
        method="iso-classes",
    )


def max_edges_c6free_planar(n: int, method: str = "edge-subsets") -> EnumerationResult:
    """Exact maximum edge count of a planar graph on n vertices with no 6-cycle."""
    cap = _order_cap()
    if not 3 <= n <= cap:
        raise BudgetExceeded(f"n={n} outside enumerable range 3..{cap}")
    if method == "edge-subsets":
        return _max_edges_by_subsets(n)
    if method == "iso-classes":
        return _max_edges_by_classes(n)
    raise ValueError(f"unknown method {method!r}")


# -- embedding enumeration ---------------------------------------------------------


def automorphisms(graph: Graph) -> list[tuple[int, ...]]:
    """All adjacency-preserving vertex relabelings (brute force, small n)."""
    n = graph.n
    degs = graph.degrees()
    edges = set(graph.edges)
    auts = []
    for perm in permutations(range(n)):
        if any(degs[v] != degs[perm[v]] for v in range(n)):
            continue
        if all(tuple(sorted((perm[u], perm[v]))) in edges for u, v in graph.edges):
            auts.append(perm)
    return auts


def _embedding_key(rotations: tuple[tuple[int, ...], ...]) -> tuple:
    """Canonicalize each rotation cycle to start at its smallest neighbor."""
    out = []
    for r in rotations:
        if not r:
            out.append(())
            continue
        i = r.index(min(r))
        out.append(tuple(r[i:] + r[:i]))
    return tuple(out)


def plane_embeddings(
    graph: Graph, budget: int = DEFAULT_EMBEDDING_BUDGET
) -> list[PlanarEmbedding]:
    """Every sphere embedding of `graph`, up to relabeling and reflection.

    Enumerates all rotation systems (one cyclic representative per vertex),
    keeps the genus-0 ones and dedups under the automorphism group extended
    by mirror reversal.
    """
    total = 1
    for v in range(graph.n):
        total *= max(1, factorial(graph.degree(v) - 1))
        if total > budget:
            raise BudgetExceeded(f"{total}+ rotation systems exceed budget {budget}")
    auts = automorphisms(graph)

    per_vertex: list[list[tuple[int, ...]]] = []
    for v in range(graph.n):
        nbrs = graph.adj[v]
        if len(nbrs) <= 2:
            per_vertex.append([tuple(nbrs)])
        else:
            first, rest = nbrs[0], nbrs[1:]
            per_vertex.append([(first, *p) for p in permutations(rest)])

    found: list[PlanarEmbedding] = []
    seen: set[tuple] = set()
    for combo in product(*per_vertex):
        try:
            emb = build_embedding(combo)
        except Exception:
            continue
        variants = []
        for perm in auts:
            relabeled = [None] * graph.n
            for v in range(graph.n):
                relabeled[perm[v]] = tuple(perm[w] for w in combo[v])
            fwd = tuple(relabeled)
            variants.append(_embedding_key(fwd))
            variants.append(_embedding_key(tuple(tuple(reversed(r)) for r in fwd)))
        key = min(variants)
        if key not in seen:
            seen.add(key)
            found.append(emb)
    return found


def enumerate_hypothesis_graphs(n: int, budget: int = DEFAULT_EMBEDDING_BUDGET):
    """All plane embeddings of 2-connected, min-degree-3, C6-free graphs on n
    vertices, one isomorphism class at a time.

    Note: no such graph exists for n < 8.  At n = 6 minimum degree 3 makes
    the graph Hamiltonian (a spanning 6-cycle); at n = 7 it forces 11 edges
    while the certified bound caps 2-connected instances at 10.  The stream
    is therefore provably empty at the default caps; the machinery still
    runs and re-proves that emptiness by exhaustion.
    """
    cap = _order_cap()
    if n < 6:
        raise ValueError(f"hypothesis corpus needs n >= 6, got {n}")
    if n > cap:
        raise BudgetExceeded(f"n={n} above enumerable cap {cap}")
    for mask in isomorphism_classes(n):
        g = _graph_from_mask(n, mask)
        if min(g.degrees(), default=0) < 3:
            continue
        if not is_biconnected(g):
            continue
        if find_cycle_of_length(g, 6) is not None:
            continue
        ok, _ = planarity_test(g)
        if not ok:
            continue
        yield from plane_embeddings(g, budget=budget)


def enumerate_relaxed_embeddings(
    n: int,
    forbidden: int = 6,
    require_biconnected: bool = True,
    budget: int = DEFAULT_EMBEDDING_BUDGET,
):
    """Plane embeddings of C_forbidden-free graphs, without the degree bar.

    One embedding per isomorphism class; the broad corpus used to sweep the
    ledger identities and the block-size bound, both of which hold without
    minimum-degree hypotheses.
    """
    cap = _order_cap()
    if n > cap:
        raise BudgetExceeded(f"n={n} above enumerable cap {cap}")
    for mask in isomorphism_classes(n):
        g = _graph_from_mask(n, mask)
        if require_biconnected and not is_biconnected(g):
            continue
        if g.n >= forbidden and find_cycle_of_length(g, forbidden) is not None:
            continue
        ok, emb = planarity_test(g)
        if not ok:
            continue
        yield emb
