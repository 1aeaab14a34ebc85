"""Generalized permutahedra as signed Minkowski sums of simplices, in exact arithmetic."""
from .setfun import SetFunction, harmonic, mask, elements, mobius_transform, zeta_transform
from .genperm import (
    GenPermRep,
    InconsistencyError,
    InvalidRepresentation,
    count_lattice_points,
    dimension,
    edge_length_normalized,
    enumerate_lattice_points,
    equivalence_check,
    face_in_direction,
    validate_y,
    validate_z_supermodular,
    vertices,
)
from .functionals import (
    LinearFunctional,
    SymmetricFunctional,
    basis_matrix,
    compatible_direction,
    decompose_positive,
    decompose_symmetric,
    ehrhart_linear_functional,
    eval_functional,
    f_basis,
    inverse_basis_matrix,
    nonpositivity_witness,
    positivity_certificate,
    ray_functional,
)
from .lattice import (
    count_lattice_points_formula,
    e1,
    ehrhart_polynomial,
    enumerate_a_vectors,
    generalized_binomial,
)
from .matroid import Matroid

__version__ = "0.1.0"
