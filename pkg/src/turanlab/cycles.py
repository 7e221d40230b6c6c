"""Fixed-length cycle detection and a brute-force subsets oracle.

The detector extends simple paths from each anchor vertex, visiting only
vertices with larger ids, so every cycle is discovered exactly once from its
smallest vertex.  The subsets oracle answers the same question by testing
every k-subset of vertices for a Hamiltonian cycle on the induced subgraph;
it exists purely to cross-check the detector.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb

from .planar_core import Graph, GraphError


class InvalidK(GraphError):
    pass


class BudgetExceeded(GraphError):
    pass


DEFAULT_SUBSET_BUDGET = 10_000_000


@dataclass(frozen=True)
class CycleWitness:
    vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)

    def is_valid_in(self, graph: Graph) -> bool:
        """Independent edge-membership check of the witness."""
        vs = self.vertices
        if len(set(vs)) != len(vs) or len(vs) < 3:
            return False
        return all(
            graph.has_edge(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))
        )


def find_cycle_of_length(graph: Graph, k: int) -> CycleWitness | None:
    """First k-cycle in anchor-then-neighbor order, or None.

    Deterministic for a fixed input: anchors ascend, neighbors are scanned in
    ascending order, and each cycle is closed only in the direction where the
    second vertex is smaller than the last.
    """
    if k < 3:
        raise InvalidK(f"cycle length must be at least 3, got {k}")
    adj = graph.adj
    adjsets = graph._adjsets
    for anchor in range(graph.n):
        anchor_adj = adjsets[anchor]
        on_path = {anchor}
        path = [anchor]

        def extend(u: int) -> tuple[int, ...] | None:
            depth = len(path)
            if depth == k:
                return tuple(path) if anchor in adjsets[u] and path[1] < u else None
            last = depth == k - 1
            for w in adj[u]:
                if w <= anchor or w in on_path:
                    continue
                if last and w not in anchor_adj:
                    continue
                on_path.add(w)
                path.append(w)
                found = extend(w)
                path.pop()
                on_path.remove(w)
                if found:
                    return found
            return None

        if len(anchor_adj) >= 2:
            hit = extend(anchor)
            if hit:
                witness = CycleWitness(hit)
                if not witness.is_valid_in(graph):
                    raise GraphError("internal error: invalid cycle witness")
                return witness
    return None


def is_c_l_free(graph: Graph, length: int) -> tuple[bool, CycleWitness | None]:
    """True plus None when no cycle of the given length exists."""
    witness = find_cycle_of_length(graph, length)
    return (witness is None, witness)


def _has_hamiltonian_cycle(subset: tuple[int, ...], graph: Graph) -> bool:
    k = len(subset)
    if k < 3:
        return False
    adjsets = graph._adjsets
    first = subset[0]
    rest = subset[1:]
    for perm in permutations(rest):
        if perm[0] > perm[-1]:
            continue
        if perm[0] not in adjsets[first] or perm[-1] not in adjsets[first]:
            continue
        if all(perm[i + 1] in adjsets[perm[i]] for i in range(k - 2)):
            return True
    return False


def cycle_oracle_subsets(
    graph: Graph, k: int, budget: int = DEFAULT_SUBSET_BUDGET
) -> bool:
    """True iff some k-subset of vertices carries a Hamiltonian cycle."""
    if k < 3 or k > 8:
        raise InvalidK(f"subsets oracle supports 3 <= k <= 8, got {k}")
    if graph.n >= k and comb(graph.n, k) > budget:
        raise BudgetExceeded(
            f"C({graph.n},{k}) subsets exceed budget of {budget}"
        )
    for subset in combinations(range(graph.n), k):
        if any(len(graph.adjacent(v) & set(subset)) < 2 for v in subset):
            continue
        if _has_hamiltonian_cycle(subset, graph):
            return True
    return False
