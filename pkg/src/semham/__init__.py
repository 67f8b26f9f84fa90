"""Hamiltonian-style analysis of L2-normalized embedding spaces."""

from .embedding import (
    EmbeddingVector,
    cosine_similarity,
    maximally_dissimilar,
    normalize,
    transform_similarity,
)
from .perturbation import (
    PerturbationProfile,
    PerturbationResult,
    chain_perturbations,
    constraint_residual,
    general_similarity,
    similarity_from_delta,
    smallest_perturbation,
    solve_two_dim,
)
from .transitions import (
    TransitionOperator,
    TransitionReport,
    apply,
    change_of_basis,
    compose_indirect,
    hamiltonian_constraint,
    householder_transition,
    quadratic_similarity,
    run_indirect_experiment,
    symmetrize,
)
from .spectral import (
    RankOneHamiltonian,
    SpectralDecomposition,
    build_rank_one,
    diagonalize,
    first_perturbation_matrix,
    h_prime_from_h,
    project_state,
    second_perturbation_matrix,
)
from .dynamics import (
    QuantumState,
    ZeroPointResult,
    evolve,
    expectation,
    rank_one_state,
    schrodinger_residual,
    trajectory,
    zero_point,
)
from .symmetry import (
    ParityOperator,
    RotationOperator,
    apply_parity,
    apply_rotation,
    expectation_shift,
    verify_swap_decomposition,
)
from .config import RunConfig
from .fileio import EmbeddingFile, load_embeddings, save_embeddings

__version__ = "0.1.0"
