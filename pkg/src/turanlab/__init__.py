"""Toolkit for C6-free planar graphs: extremal constructions,
triangular-block decomposition, exact-rational discharge certificates and
brute-force cross-checks at small orders."""

from .planar_core import (
    Graph,
    GraphError,
    PlanarEmbedding,
    build_embedding,
    biconnected_blocks,
    degree_profile,
    embedding_from_faces,
    embedding_from_json,
    embedding_to_json,
    peel_min_degree,
    trace_faces,
)
from .cycles import CycleWitness, cycle_oracle_subsets, find_cycle_of_length, is_c_l_free
from .blocks import (
    TriangularBlock,
    decompose_triangular_blocks,
    classify_block,
    exterior_structure,
    junction_map,
)
from .discharge import (
    ContributionLedger,
    DischargeCertificate,
    block_score,
    certify_bound,
    check_face_propositions,
    compute_ledger,
    face_contributions,
    partition_and_certify,
    vertex_contributions,
)
from .construct import (
    BaseGraph,
    ConstructionReport,
    assemble_extremal,
    chain_of_k5minus,
    construct_from_base,
    cycle_base,
    expand_vertices,
    gadget_block,
    halve_and_link,
    heptagonal_base,
    reduced_base,
    validate_base,
)
from .oracle import (
    EnumerationResult,
    enumerate_hypothesis_graphs,
    max_edges_c6free_planar,
    planarity_test,
)

__version__ = "0.1.0"
