"""Gauss-Newton computation of an m x k pseudo-eigenvalue, plus the backward certificate."""

import logging
from dataclasses import dataclass, field, replace

import numpy as np

from .exceptions import (
    NumericallySingular,
    RankDeficientJacobian,
    RankDeficientX,
    StaircaseBreakdown,
)
from .linalg import (
    EPS,
    least_squares,
    singular_values,
    smallest_sv_inverse_iteration,
    solve_upper,
    thin_qr,
)
from .mapping import (
    PencilParameters,
    assemble_jacobian,
    eval_g,
    make_T,
    pack,
    pack_residual,
    random_C,
    residual_norm,
    unpack,
)
from .validation import check_matrix, check_support

logger = logging.getLogger(__name__)


@dataclass
class SolverConfig:
    max_iter: int = 50
    seed: int = 42
    fd_check: bool = False
    theta: float = None  # nullity tolerance; None means 1e-2 * ||A||_F / n
    inverse_iteration_steps: int = 3

    def __post_init__(self):
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.theta is not None and not self.theta > 0:
            raise ValueError("theta must be positive")


@dataclass
class PseudoEigSolution:
    lambda_hat: complex
    X_hat: np.ndarray
    params: PencilParameters
    residual: float
    backward_error: float
    condition: float
    iterations: int
    converged: bool
    residual_history: list = field(default_factory=list)
    message: str = ""

    @property
    def S(self):
        return self.params.S

    @property
    def C(self):
        return self.params.C


@dataclass
class BackwardCertificate:
    E: np.ndarray
    perturbation: np.ndarray  # E X^+; the certified matrix is A - perturbation
    perturbed_matrix: np.ndarray
    perturbation_norm: float
    eigen_residual: float  # ||(M - lam I) X - X S||_F
    kernel_dims: list
    jordan_block_verified: bool


def init_staircase(A, lam0, C, m, k):
    """Chain initialization of X0 and the superdiagonal S by repeated least squares.

    Returns ``(X0, S, consistency_residual)`` where the last item is
    ||g(A, lam0, X0)|| for the returned parameters.
    """
    A = check_matrix(A, square=True)
    n = A.shape[0]
    C = np.asarray(C, dtype=complex)
    if C.shape != (n, m):
        raise ValueError(f"C must be {n}x{m}, got {C.shape}")
    stacked = np.vstack([A - lam0 * np.eye(n), C.conj().T])
    X0 = np.zeros((n, k), dtype=complex)
    S = np.zeros((k, k), dtype=complex)
    rhs = np.zeros(n + m, dtype=complex)
    rhs[n] = 1.0
    X0[:, 0] = least_squares(stacked, rhs)
    for j in range(k - 1):
        rhs = np.concatenate([X0[:, j], np.zeros(m)])
        x = least_squares(stacked, rhs)
        nx = np.linalg.norm(x)
        if nx < EPS * n:
            raise StaircaseBreakdown(f"chain vector {j + 2} vanished (norm {nx:.2e})")
        X0[:, j + 1] = x / nx
        S[j, j + 1] = 1.0 / nx
    P = PencilParameters(C, S, make_T(m, k))
    return X0, S, residual_norm(*eval_g(A, P, lam0, X0))


def _factor_jacobian(A, P, lam, X):
    J = assemble_jacobian(A, P, lam, X)
    Q, R = thin_qr(J)
    d = np.abs(np.diag(R))
    if d.min() < EPS * np.linalg.norm(J):
        raise RankDeficientJacobian(
            "partial Jacobian is rank deficient; the geometric multiplicity may be underestimated"
        )
    return Q, R


def _step(A, P, lam, X, Q, R):
    n, k = X.shape
    g = pack_residual(*eval_g(A, P, lam, X))
    delta = solve_upper(R, Q.conj().T @ g, check=False)
    sigma, Y = unpack(delta, n, k)
    return lam - sigma, X - Y, float(np.linalg.norm(delta))


def gauss_newton_step(A, P, lam, X):
    """One Gauss-Newton update; returns ``(lam_next, X_next, residual_at_current)``."""
    A = check_matrix(A, square=True)
    X = np.asarray(X, dtype=complex)
    Q, R = _factor_jacobian(A, P, lam, X)
    lam1, X1, _ = _step(A, P, lam, X, Q, R)
    return lam1, X1, residual_norm(*eval_g(A, P, lam, X))


def _fd_check(A, P, lam, X, h=1e-7, seed=0):
    rng = np.random.default_rng(seed)
    n, k = X.shape
    dsig = complex(rng.standard_normal(), rng.standard_normal())
    dY = rng.standard_normal((n, k)) + 1j * rng.standard_normal((n, k))
    J = assemble_jacobian(A, P, lam, X)
    base = pack_residual(*eval_g(A, P, lam, X))
    fd = (pack_residual(*eval_g(A, P, lam + h * dsig, X + h * dY)) - base) / h
    err = np.linalg.norm(J @ pack(dsig, dY) - fd)
    scale = np.linalg.norm(fd) + 1.0
    if err > 1e-4 * scale:
        raise AssertionError(f"Jacobian does not match finite differences (err {err:.2e})")


def _fix_phase(X, P):
    """Rotate X and C together so X[0, 0] is real non-negative; g is unchanged."""
    x11 = X[0, 0]
    if abs(x11) <= EPS:
        return X, P
    phase = abs(x11) / x11
    X = X * phase
    X[0, 0] = abs(x11)  # exact, not merely rounded to real
    return X, replace(P, C=P.C * phase)


def _condition(R, steps):
    try:
        return 1.0 / smallest_sv_inverse_iteration(R, steps)
    except NumericallySingular:
        return float("inf")


def gauss_newton(A, P, lam0, X0, cfg=None):
    """Gauss-Newton iteration with the first-increase stopping rule.

    Iterates until the residual of the next iterate exceeds the current
    one (the current iterate is accepted), the correction falls below
    round-off, or ``cfg.max_iter`` is reached.  The starting point is
    exempt from the increase test; if no iterate beats it, it is returned
    with ``converged=False``.
    """
    cfg = cfg or SolverConfig()
    A = check_matrix(A, square=True)
    lam = complex(lam0)
    X = np.array(X0, dtype=complex)
    n, k = X.shape
    if cfg.fd_check:
        _fd_check(A, P, lam, X)
    res = residual_norm(*eval_g(A, P, lam, X))
    history = [res]
    start = (lam, X, res)
    converged = False
    message = "max_iter reached"
    iterations = 0
    Q, R = _factor_jacobian(A, P, lam, X)
    for _ in range(cfg.max_iter):
        if res == 0.0:
            converged, message = True, "exact zero residual"
            break
        lam1, X1, step_norm = _step(A, P, lam, X, Q, R)
        if step_norm <= EPS * (abs(lam) + np.linalg.norm(X)):
            converged, message = True, "Gauss-Newton correction below round-off"
            break
        res1 = residual_norm(*eval_g(A, P, lam1, X1))
        # the starting point is exempt from the first-increase rule
        if res1 > res and iterations > 0:
            converged, message = True, "residual increased; previous iterate accepted"
            break
        lam, X, res = lam1, X1, res1
        history.append(res)
        iterations += 1
        logger.debug("iteration %d: residual %.3e", iterations, res)
        Q, R = _factor_jacobian(A, P, lam, X)
    if start[2] < res:
        lam, X, res = start
        iterations = 0
        converged = False
        message = "iterations never improved on the starting residual; starting point returned"
        Q, R = _factor_jacobian(A, P, lam, X)
    X, P = _fix_phase(X, P)
    # the rotation rounds X; report the residual of the pair actually returned
    res = residual_norm(*eval_g(A, P, lam, X))
    sx = singular_values(X)[-1]
    return PseudoEigSolution(
        lambda_hat=lam,
        X_hat=X,
        params=P,
        residual=res,
        backward_error=res / sx if sx > 0 else float("inf"),
        condition=_condition(R, cfg.inverse_iteration_steps),
        iterations=iterations,
        converged=converged,
        residual_history=history,
        message=message,
    )


def pseudoeig(A, lam0, m, k, cfg=None):
    """Compute the m x k pseudo-eigenvalue of ``A`` nearest the estimate ``lam0``.

    Random C (seeded by ``cfg.seed``), staircase initialization, then
    Gauss-Newton.  The returned condition is 1 / sigma_min of the partial
    Jacobian at the accepted iterate, estimated by inverse iteration on
    its R factor.
    """
    cfg = cfg or SolverConfig()
    A = check_matrix(A, square=True)
    n = A.shape[0]
    m, k = check_support(n, m, k)
    C = random_C(n, m, cfg.seed)
    X0, S, res0 = init_staircase(A, lam0, C, m, k)
    logger.debug("staircase residual %.3e", res0)
    return gauss_newton(A, PencilParameters(C, S, make_T(m, k)), lam0, X0, cfg)


def _pinv_full_column(X):
    return least_squares(X, np.eye(X.shape[0], dtype=complex))


def _kernel_dims(N, k):
    """dim ker N^j for j = 1..k, with the round-off bound j n eps ||N||^j of a computed power as rank tolerance."""
    n = N.shape[0]
    s1 = singular_values(N)[0]
    dims = []
    P = np.eye(n, dtype=complex)
    for j in range(1, k + 1):
        P = N @ P
        s = singular_values(P)
        dims.append(int(np.sum(s <= j * n * EPS * s1**j)))
    return dims


def certify(A, sol, max_n=30):
    """Backward-error certificate: lam_hat is an exact eigenvalue of A - E X^+.

    E = (A - lam I) X - X S.  For n <= ``max_n`` the Jordan block of size
    >= k is checked through strictly increasing kernel dimensions of
    powers of (A - E X^+ - lam I).
    """
    A = check_matrix(A, square=True)
    X = sol.X_hat
    n, k = X.shape
    sx = singular_values(X)[-1]
    if sx < EPS * n:
        raise RankDeficientX(f"X_hat is rank deficient (sigma_min = {sx:.2e})")
    lam = sol.lambda_hat
    S = sol.params.S
    E = A @ X - lam * X - X @ S
    perturbation = E @ _pinv_full_column(X)
    M = A - perturbation
    eig_res = float(np.linalg.norm(M @ X - lam * X - X @ S))
    dims = []
    verified = False
    if n <= max_n:
        N = M - lam * np.eye(n)
        dims = _kernel_dims(N, k)
        verified = all(b > a for a, b in zip([0] + dims[:-1], dims))
    return BackwardCertificate(
        E=E,
        perturbation=perturbation,
        perturbed_matrix=M,
        perturbation_norm=float(singular_values(perturbation)[0]),
        eigen_residual=eig_res,
        kernel_dims=dims,
        jordan_block_verified=verified,
    )


__all__ = [
    "SolverConfig",
    "PseudoEigSolution",
    "BackwardCertificate",
    "init_staircase",
    "gauss_newton_step",
    "gauss_newton",
    "pseudoeig",
    "certify",
]
