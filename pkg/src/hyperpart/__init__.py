"""Acyclic d-partitions of complete uniform hypergraphs: construction, homology, collapse."""

from hyperpart.collapse import (
    PeelSequence,
    PeelStep,
    find_leaf,
    greedy_collapse,
    je_faces,
    structured_collapse_omega1,
    validate_peel,
    weight,
    weight_report,
)
from hyperpart.construct import (
    GammaKey,
    block,
    build_omega,
    build_partition,
    decompose_omega1,
    gamma_abstract,
    gamma_sub,
    homogeneity_report,
    omega_contains,
    phi_map,
    psi_map,
    shift_permutation,
)
from hyperpart.fileio import parse_hypergraph, serialize
from hyperpart.homology import betti, boundary_matrix, chain_complex, euler_characteristic
from hyperpart.hypercore import (
    Hypergraph,
    HypergraphError,
    Partition,
    VertexPermutation,
    are_isomorphic,
    complete_hypergraph,
    faces,
    make_hypergraph,
    verify_partition,
)
from hyperpart.linalg import SparseMatrix, matrix_rank

__version__ = "0.1.0"
