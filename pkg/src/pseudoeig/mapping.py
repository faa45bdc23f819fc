"""The regularizing map g(A, lam, X) and its partial Jacobian.

    g(A, lam, X) = ( (A - lam I) X - X S ,  C^H X - T )

with C (n x m) random, S (k x k) strictly upper triangular of rank k-1 and
T = e1 e1^T (m x k).  Unknowns are ordered (x_k, ..., x_1, lam) and
equations grouped per column j = k, ..., 1 as [C^H x_j - T[:, j];
(A - lam I) x_j - sum_{i<j} s_ij x_i], which makes the Jacobian block
upper triangular with diagonal blocks [C^H; A - lam I].
"""

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError


@dataclass(frozen=True)
class MultiplicitySupport:
    """Geometric multiplicity ``m`` and Segre anchor ``k`` of an eigenvalue."""

    m: int
    k: int

    def __post_init__(self):
        if self.m < 1 or self.k < 1:
            raise DimensionError(f"multiplicity support must be positive, got {self.m}x{self.k}")


@dataclass(frozen=True)
class PencilParameters:
    C: np.ndarray
    S: np.ndarray
    T: np.ndarray

    def __post_init__(self):
        n, m = self.C.shape
        k = self.S.shape[0]
        if self.S.shape != (k, k) or self.T.shape != (m, k):
            raise DimensionError(
                f"inconsistent parameter shapes C{self.C.shape} S{self.S.shape} T{self.T.shape}"
            )
        if np.any(np.tril(self.S) != 0):
            raise ValueError("S must be strictly upper triangular")
        if k > 1 and np.prod(np.diag(self.S, 1)) == 0:
            raise ValueError("S must have rank k-1 (nonzero superdiagonal)")

    @property
    def m(self):
        return self.C.shape[1]

    @property
    def k(self):
        return self.S.shape[0]


def make_T(m, k):
    T = np.zeros((m, k), dtype=complex)
    T[0, 0] = 1.0
    return T


def random_C(n, m, seed):
    """Seeded complex Gaussian n x m matrix with unit-norm columns."""
    if not n >= m >= 1:
        raise DimensionError(f"random_C needs n >= m >= 1, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    C = rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))
    return C / np.linalg.norm(C, axis=0)


def _check_shapes(A, P, X):
    n = A.shape[0]
    if A.shape != (n, n) or X.shape != (n, P.k) or P.C.shape[0] != n:
        raise DimensionError(
            f"shape mismatch: A{A.shape} X{X.shape} C{P.C.shape} S{P.S.shape}"
        )


def eval_g(A, P, lam, X):
    """Return the two residual blocks (R1, R2) of g at (lam, X)."""
    A = np.asarray(A, dtype=complex)
    X = np.asarray(X, dtype=complex)
    _check_shapes(A, P, X)
    # extended precision: near convergence R1 is a cancellation of O(||A|| ||X||) terms
    Xl = X.astype(np.clongdouble)
    R1 = A.astype(np.clongdouble) @ Xl - np.clongdouble(lam) * Xl - Xl @ P.S.astype(np.clongdouble)
    R2 = P.C.conj().T @ X - P.T
    return R1.astype(complex), R2


def residual_norm(R1, R2):
    return float(np.sqrt(np.linalg.norm(R1) ** 2 + np.linalg.norm(R2) ** 2))


def pack(sigma, Y):
    """Stack (sigma, Y) as [y_k; ...; y_1; sigma]."""
    Y = np.asarray(Y, dtype=complex)
    return np.concatenate([Y[:, ::-1].T.ravel(), [complex(sigma)]])


def unpack(vec, n, k):
    vec = np.asarray(vec, dtype=complex)
    if vec.shape != (n * k + 1,):
        raise DimensionError(f"expected vector of length {n * k + 1}, got {vec.shape}")
    Y = vec[:-1].reshape(k, n).T[:, ::-1].copy()
    return vec[-1], Y


def pack_residual(R1, R2):
    """Stack (R1, R2) in the Jacobian row order: for j = k..1, [R2[:, j]; R1[:, j]]."""
    return np.concatenate([np.concatenate([R2[:, j], R1[:, j]]) for j in range(R1.shape[1] - 1, -1, -1)])


def unpack_residual(vec, n, m, k):
    blocks = np.asarray(vec, dtype=complex).reshape(k, m + n)[::-1]
    return blocks[:, m:].T.copy(), blocks[:, :m].T.copy()


def assemble_jacobian(A, P, lam, X):
    """Dense matrix of (sigma, Y) -> (-sigma X + (A - lam I) Y - Y S, C^H Y).

    Shape (n k + m k) x (n k + 1), block upper triangular in the ordering
    described in the module docstring.
    """
    A = np.asarray(A, dtype=complex)
    X = np.asarray(X, dtype=complex)
    _check_shapes(A, P, X)
    n, m, k = A.shape[0], P.m, P.k
    rb, cb = n + m, n
    J = np.zeros((k * rb, k * cb + 1), dtype=complex)
    diag_block = np.vstack([P.C.conj().T, A - lam * np.eye(n)])
    eye = np.eye(n)
    for bi in range(k):
        j = k - 1 - bi  # equation column j (0-based)
        rows = slice(bi * rb, (bi + 1) * rb)
        J[rows, bi * cb : (bi + 1) * cb] = diag_block
        for bc in range(bi + 1, k):
            i = k - 1 - bc
            s = P.S[i, j]
            if s != 0:
                J[bi * rb + m : (bi + 1) * rb, bc * cb : (bc + 1) * cb] = -s * eye
        J[bi * rb + m : (bi + 1) * rb, -1] = -X[:, j]
    return J


def apply_jacobian(A, P, lam, X, sigma, Y):
    """Direct evaluation of the partial Jacobian's action, returned as (R1, R2) blocks."""
    A = np.asarray(A, dtype=complex)
    Y = np.asarray(Y, dtype=complex)
    return -sigma * X + A @ Y - lam * Y - Y @ P.S, P.C.conj().T @ Y
