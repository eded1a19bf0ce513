"""Exact-rational deformation engine for finite-dimensional DGLAs.

The pipeline: describe a differential graded Lie algebra by structure
constants, validate the axioms, split each degree as boundaries + harmonic
representatives + complement, build the contraction h, and run the Hodge
package and the Maurer-Cartan machinery (fixed-point solver, Kuranishi map
and inverse, obstructions, gauge action) over truncated formal power series
with Fraction coefficients.  Every identity the library claims is exact;
there are no tolerances anywhere.
"""

__version__ = "0.1.0"

from .algebra import (
    DGLA,
    ValidationIssue,
    ValidationReport,
    antisymmetric_closure,
    koszul_sign,
    validate_dgla,
)
from .backend import kernel_backend
from .catalog import BUILTIN_NAMES, builtin_example
from .deform import (
    MCSolution,
    contraction_step,
    gauge_act,
    gauge_equivalent,
    gauge_fix,
    kur_membership,
    kuranishi_inverse,
    kuranishi_map,
    mc_residual,
    obstruction,
    solve_by_recursion,
    solve_mc_ivp,
    universal_solution,
)
from .formal import CoefficientRing, FormalElement
from .graded import GradedLinearMap
from .hodge import (
    HodgeData,
    check_cartan,
    codifferential,
    double_projection,
    hodge_data,
    hodge_decompose,
    laplacian,
    star_operator,
)
from .linalg import (
    Matrix,
    SubspaceBasis,
    complement_basis,
    image_basis,
    kernel_basis,
    solve_linear,
)
from .sdr import (
    HomologyData,
    SDRData,
    Splitting,
    build_contraction,
    build_splitting,
    compute_homology,
    verify_sdr,
)

__all__ = [
    "BUILTIN_NAMES",
    "CoefficientRing",
    "DGLA",
    "FormalElement",
    "GradedLinearMap",
    "HodgeData",
    "HomologyData",
    "MCSolution",
    "Matrix",
    "SDRData",
    "Splitting",
    "SubspaceBasis",
    "ValidationIssue",
    "ValidationReport",
    "antisymmetric_closure",
    "koszul_sign",
    "build_contraction",
    "build_splitting",
    "builtin_example",
    "check_cartan",
    "codifferential",
    "complement_basis",
    "compute_homology",
    "contraction_step",
    "double_projection",
    "gauge_act",
    "gauge_equivalent",
    "gauge_fix",
    "hodge_data",
    "hodge_decompose",
    "image_basis",
    "kernel_backend",
    "kernel_basis",
    "kur_membership",
    "kuranishi_inverse",
    "kuranishi_map",
    "laplacian",
    "mc_residual",
    "obstruction",
    "solve_by_recursion",
    "solve_linear",
    "solve_mc_ivp",
    "star_operator",
    "universal_solution",
    "validate_dgla",
    "verify_sdr",
]
