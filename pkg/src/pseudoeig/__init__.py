"""Defective eigenvalues computed as m x k pseudo-eigenvalues.

A regularized least-squares formulation turns an ill-conditioned
(defective) eigenvalue into a well-conditioned one, given its
multiplicity support: geometric multiplicity m and smallest Jordan
block size k.
"""

from importlib import resources

from .estimator import MultiplicitySupportIdentifier, PseudoEigenvalue
from .exceptions import (
    DimensionError,
    MatrixParseError,
    NoConvergence,
    NumericallySingular,
    PseudoEigError,
    RankDeficientJacobian,
    RankDeficientX,
    StaircaseBreakdown,
)
from .identify import AnchorDiagnostics, anchor_search, numerical_nullity
from .linalg import baseline_eigenvalues, least_squares, singular_values, svd, thin_qr
from .mapping import MultiplicitySupport, PencilParameters, assemble_jacobian, eval_g
from .refine import orthonormalize, refine
from .solver import BackwardCertificate, PseudoEigSolution, SolverConfig, certify, pseudoeig

__version__ = "0.1.0"


def fixture_path(name):
    """Path of a bundled fixture matrix ('grid20', 'jbiteA', 'jbiteA-perturbed', 'example4', 'matrixB')."""
    path = resources.files(__name__) / "fixtures" / f"{name}.mtx"
    if not path.is_file():
        raise FileNotFoundError(f"no bundled fixture named {name!r}")
    return str(path)


__all__ = [
    "PseudoEigenvalue",
    "MultiplicitySupportIdentifier",
    "pseudoeig",
    "refine",
    "orthonormalize",
    "certify",
    "numerical_nullity",
    "anchor_search",
    "baseline_eigenvalues",
    "singular_values",
    "svd",
    "thin_qr",
    "least_squares",
    "eval_g",
    "assemble_jacobian",
    "SolverConfig",
    "PseudoEigSolution",
    "BackwardCertificate",
    "AnchorDiagnostics",
    "MultiplicitySupport",
    "PencilParameters",
    "fixture_path",
    "PseudoEigError",
    "DimensionError",
    "MatrixParseError",
    "NoConvergence",
    "NumericallySingular",
    "RankDeficientJacobian",
    "RankDeficientX",
    "StaircaseBreakdown",
]
