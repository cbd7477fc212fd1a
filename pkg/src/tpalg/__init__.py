"""Exact computation of ½-derivations and transposed Poisson structures on Lie algebras."""

from .catalog import FamilySpec, build, paper_halfder_basis, paper_tp_product
from .derivations import DerivationSpace, delta_derivation_space, is_trivial_space
from .lie import BilinearMap, LieAlgebra, LinearMap, bracket, jacobi_check
from .linalg import Matrix, SubspaceBasis, kernel_basis, rref, span, span_equal
from .scalar import Scalar, parse_scalar
from .tp import TPReport, tp_candidate_space, verify_tp

__version__ = "0.1.0"

__all__ = [
    "BilinearMap",
    "DerivationSpace",
    "FamilySpec",
    "LieAlgebra",
    "LinearMap",
    "Matrix",
    "Scalar",
    "SubspaceBasis",
    "TPReport",
    "bracket",
    "build",
    "delta_derivation_space",
    "is_trivial_space",
    "jacobi_check",
    "kernel_basis",
    "paper_halfder_basis",
    "paper_tp_product",
    "parse_scalar",
    "rref",
    "span",
    "span_equal",
    "tp_candidate_space",
    "verify_tp",
]
