"""Re-parameterize a converged solve so X has orthonormal columns, then iterate again.

With orthonormal X, ||X^+||_2 = 1 and minimizing the residual minimizes
the backward error bound directly.
"""

from dataclasses import replace

import numpy as np

from .exceptions import RankDeficientX
from .linalg import EPS, singular_values, solve_upper_adjoint, thin_qr
from .mapping import PencilParameters
from .solver import SolverConfig, gauss_newton
from .validation import check_matrix


def orthonormalize(A, sol):
    """Return ``(params, lam0, X0)`` with X0 orthonormal and g(A, lam0, X0) ~ g at ``sol``."""
    A = check_matrix(A, square=True)
    X = np.array(sol.X_hat, dtype=complex)
    S = np.array(sol.params.S, dtype=complex)
    C = np.array(sol.params.C, dtype=complex)
    k = X.shape[1]

    x1 = X[:, 0]
    pivot = x1[np.argmax(np.abs(x1))]
    beta = np.linalg.norm(x1) * pivot / abs(pivot)
    x1 = x1 / beta
    X[:, 0] = x1
    S[0, :] *= beta
    C[:, 0] = x1

    w = x1.conj() @ X[:, 1:]
    X[:, 1:] -= np.outer(x1, w)
    S[0, :] += w @ S[1:, :]

    Q, R = thin_qr(X)
    d = np.abs(np.diag(R))
    if d.min() < EPS * k:
        raise RankDeficientX(f"X is rank deficient after projection (min |r_ii| = {d.min():.2e})")
    # S <- R S R^{-1}, via R^H Z = (R S)^H
    S_new = solve_upper_adjoint(R, (R @ S).conj().T, check=False).conj().T
    S_new = np.triu(S_new, 1)
    params = PencilParameters(C, S_new, sol.params.T)
    return params, sol.lambda_hat, Q


def refine(A, sol, cfg=None):
    """Orthonormalize ``sol`` and rerun Gauss-Newton under the new parameters."""
    cfg = cfg or SolverConfig()
    A = check_matrix(A, square=True)
    params, lam0, X0 = orthonormalize(A, sol)
    out = gauss_newton(A, params, lam0, X0, cfg)
    return replace(out, message=f"refined: {out.message}")


def pinv_norm(X):
    """||X^+||_2 = 1 / sigma_min(X) for full column rank X."""
    return 1.0 / singular_values(X)[-1]
