"""Dense complex linear algebra kernels.

Householder QR, minimum-norm least squares, one-sided Jacobi SVD, inverse
iteration for the smallest singular value of a triangular factor, and a
Hessenberg / shifted-QR eigenvalue routine used only to produce starting
estimates.  Everything works on complex128 numpy arrays.
"""

from typing import NamedTuple

import numpy as np

from .exceptions import DimensionError, NoConvergence, NumericallySingular

EPS = np.finfo(float).eps


class QrFactors(NamedTuple):
    Q: np.ndarray
    R: np.ndarray


def _householder(x):
    """Unit vector v with (I - 2 v v^H) x = -phase(x0) ||x|| e1, or None if x = 0."""
    alpha = np.linalg.norm(x)
    if alpha == 0.0:
        return None
    x0 = x[0]
    phase = x0 / abs(x0) if x0 != 0 else 1.0
    v = x.copy()
    v[0] += phase * alpha
    return v / np.linalg.norm(v)


def thin_qr(M):
    """Thin Householder QR with a non-negative real diagonal in R."""
    M = np.array(M, dtype=complex)
    rows, cols = M.shape
    if rows < cols:
        raise DimensionError(f"thin_qr needs rows >= cols, got {M.shape}")
    R = M.copy()
    reflectors = []
    for j in range(cols):
        v = _householder(R[j:, j])
        reflectors.append(v)
        if v is not None:
            R[j:, j:] -= 2.0 * np.outer(v, v.conj() @ R[j:, j:])
            R[j + 1 :, j] = 0.0
    Q = np.eye(rows, cols, dtype=complex)
    for j in range(cols - 1, -1, -1):
        v = reflectors[j]
        if v is not None:
            Q[j:, :] -= 2.0 * np.outer(v, v.conj() @ Q[j:, :])
    R = np.triu(R[:cols, :])

    d = np.diag(R).copy()
    mag = np.abs(d)
    phase = np.ones(cols, dtype=complex)
    nz = mag > 0
    phase[nz] = d[nz] / mag[nz]
    R = phase.conj()[:, None] * R
    R[np.arange(cols), np.arange(cols)] = mag
    Q = Q * phase[None, :]
    return QrFactors(Q, R)


def _check_diagonal(R):
    tol = EPS * np.linalg.norm(R)
    diag = np.abs(np.diag(R))
    if R.shape[0] and diag.min() < tol:
        i = int(diag.argmin())
        raise NumericallySingular(
            f"triangular factor is numerically singular (|r[{i},{i}]| = {diag[i]:.3e})"
        )


def solve_upper(R, b, check=True):
    """Back substitution for R x = b with R upper triangular."""
    if check:
        _check_diagonal(R)
    x = np.array(b, dtype=complex)
    n = R.shape[0]
    for i in range(n - 1, -1, -1):
        if i + 1 < n:
            x[i] -= R[i, i + 1 :] @ x[i + 1 :]
        x[i] /= R[i, i]
    return x


def solve_upper_adjoint(R, b, check=True):
    """Forward substitution for R^H x = b with R upper triangular."""
    if check:
        _check_diagonal(R)
    x = np.array(b, dtype=complex)
    Rh = R.conj().T
    for i in range(R.shape[0]):
        if i:
            x[i] -= Rh[i, :i] @ x[:i]
        x[i] /= Rh[i, i]
    return x


def _round_robin(n):
    """Rounds of disjoint index pairs covering every pair (p, q) once."""
    players = list(range(n)) + ([None] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        pairs = [
            (players[i], players[size - 1 - i])
            for i in range(size // 2)
            if players[i] is not None and players[size - 1 - i] is not None
        ]
        rounds.append(
            (
                np.array([min(p) for p in pairs], dtype=int),
                np.array([max(p) for p in pairs], dtype=int),
            )
        )
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def _jacobi_columns(W, V=None, max_sweeps=60):
    """Orthogonalize the columns of W in place by one-sided (Hestenes) Jacobi."""
    cols = W.shape[1]
    if cols < 2:
        return W, V
    tol = cols * EPS
    # columns below eps * ||W||_F are round-off; their orthogonality is not attainable
    floor = (EPS * np.linalg.norm(W)) ** 2
    rounds = _round_robin(cols)
    for _ in range(max_sweeps):
        rotated = False
        for p, q in rounds:
            ap, aq = W[:, p], W[:, q]
            alpha = np.einsum("ij,ij->j", ap.conj(), ap).real
            beta = np.einsum("ij,ij->j", aq.conj(), aq).real
            gamma = np.einsum("ij,ij->j", ap.conj(), aq)
            g = np.abs(gamma)
            active = (g > tol * np.sqrt(alpha * beta)) & (np.minimum(alpha, beta) > floor)
            if not active.any():
                continue
            rotated = True
            p, q = p[active], q[active]
            alpha, beta, gamma, g = alpha[active], beta[active], gamma[active], g[active]
            phase = gamma / g
            zeta = (beta - alpha) / (2.0 * g)
            t = np.where(zeta >= 0, 1.0, -1.0) / (np.abs(zeta) + np.sqrt(1.0 + zeta**2))
            c = 1.0 / np.sqrt(1.0 + t**2)
            s = c * t
            ap = W[:, p]
            aq = W[:, q] * phase.conj()
            W[:, p] = c * ap - s * aq
            W[:, q] = s * ap + c * aq
            if V is not None:
                vp = V[:, p]
                vq = V[:, q] * phase.conj()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
        if not rotated:
            return W, V
    raise NoConvergence("Jacobi SVD did not converge")


def svd(M):
    """Thin SVD ``M = U @ diag(s) @ Vh`` via QR preconditioning plus one-sided Jacobi."""
    M = np.array(M, dtype=complex)
    rows, cols = M.shape
    if rows < cols:
        U, s, Vh = svd(M.conj().T)
        return Vh.conj().T, s, U.conj().T
    Q, R = thin_qr(M)
    W, V = _jacobi_columns(R.copy(), np.eye(cols, dtype=complex))
    s = np.linalg.norm(W, axis=0)
    order = np.argsort(-s, kind="stable")
    s, W, V = s[order], W[:, order], V[:, order]
    U = np.zeros_like(W)
    nz = s > 0
    U[:, nz] = W[:, nz] / s[nz]
    return Q @ U, s, V.conj().T


def singular_values(M):
    """Singular values in non-increasing order (length min(rows, cols))."""
    M = np.array(M, dtype=complex)
    if M.shape[0] < M.shape[1]:
        M = M.conj().T
    R = thin_qr(M).R if M.shape[0] > M.shape[1] else M.copy()
    W, _ = _jacobi_columns(R)
    return np.sort(np.linalg.norm(W, axis=0))[::-1]


def least_squares(M, B):
    """Minimum-norm least-squares solution of M X = B.

    Uses the QR factorization when M has full column rank at tolerance
    max(rows, cols) * eps * sigma_1, and an SVD pseudoinverse otherwise.
    """
    M = np.array(M, dtype=complex)
    B = np.array(B, dtype=complex)
    vector = B.ndim == 1
    if vector:
        B = B[:, None]
    if M.shape[0] != B.shape[0]:
        raise DimensionError(f"row mismatch: M is {M.shape}, B is {B.shape}")
    rows, cols = M.shape
    rank_tol = max(rows, cols) * EPS
    X = None
    if rows >= cols:
        Q, R = thin_qr(M)
        if np.abs(np.diag(R)).min() > rank_tol * np.linalg.norm(M):
            X = solve_upper(R, Q.conj().T @ B, check=False)
    if X is None:
        U, s, Vh = svd(M)
        r = int(np.sum(s > rank_tol * (s[0] if s.size else 0.0)))
        X = Vh[:r].conj().T @ ((U[:, :r].conj().T @ B) / s[:r, None])
    return X[:, 0] if vector else X


def smallest_sv_inverse_iteration(R, steps=3, seed=0):
    """Estimate sigma_min(R) by inverse iteration on R^H R.

    Returns ||R x|| for the final unit iterate x, an upper bound on
    sigma_min that tightens geometrically with the singular value gap.
    Raises NumericallySingular when R has a negligible diagonal entry.
    """
    R = np.asarray(R, dtype=complex)
    _check_diagonal(R)
    rng = np.random.default_rng(seed)
    n = R.shape[0]
    x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    x /= np.linalg.norm(x)
    for _ in range(max(int(steps), 1)):
        z = solve_upper(R, solve_upper_adjoint(R, x, check=False), check=False)
        nz = np.linalg.norm(z)
        if not np.isfinite(nz) or nz == 0.0:
            raise NumericallySingular("inverse iteration overflowed")
        x = z / nz
    return float(np.linalg.norm(R @ x))


def hessenberg(M):
    """Unitary similarity reduction to upper Hessenberg form (H only)."""
    H = np.array(M, dtype=complex)
    n = H.shape[0]
    for j in range(n - 2):
        v = _householder(H[j + 1 :, j])
        if v is None:
            continue
        H[j + 1 :, :] -= 2.0 * np.outer(v, v.conj() @ H[j + 1 :, :])
        H[:, j + 1 :] -= 2.0 * np.outer(H[:, j + 1 :] @ v, v.conj())
        H[j + 2 :, j] = 0.0
    return H


def _givens(a, b):
    r = np.hypot(abs(a), abs(b))
    if r == 0.0:
        return 1.0, 0.0
    if a == 0:
        return 0.0, np.conj(b) / abs(b)
    return abs(a) / r, (a / abs(a)) * np.conj(b) / r


def _wilkinson_shift(a, b, c, d):
    half = 0.5 * (a - d)
    disc = np.sqrt(half * half + b * c)
    mu1 = 0.5 * (a + d) + disc
    mu2 = 0.5 * (a + d) - disc
    return mu1 if abs(mu1 - d) <= abs(mu2 - d) else mu2


def baseline_eigenvalues(M):
    """All eigenvalues of a square matrix by complex shifted QR (no vectors).

    Hessenberg reduction followed by single-shift QR sweeps with Wilkinson
    shifts and deflation.  Raises NoConvergence after 30 n sweeps.
    """
    H = hessenberg(M)
    n = H.shape[0]
    if n == 1:
        return np.array([H[0, 0]])
    eigs = []
    hi = n - 1
    sweeps = 0
    since_deflation = 0
    scale = np.linalg.norm(H)
    while hi >= 0:
        if hi == 0:
            eigs.append(H[0, 0])
            break
        lo = hi
        while lo > 0:
            sub = abs(H[lo, lo - 1])
            if sub <= EPS * (abs(H[lo, lo]) + abs(H[lo - 1, lo - 1])) or sub <= EPS * EPS * scale:
                H[lo, lo - 1] = 0.0
                break
            lo -= 1
        if lo == hi:
            eigs.append(H[hi, hi])
            hi -= 1
            since_deflation = 0
            continue
        sweeps += 1
        if sweeps > 30 * n:
            raise NoConvergence(f"shifted QR did not converge in {30 * n} sweeps")
        since_deflation += 1
        if since_deflation % 11 == 0:
            mu = H[hi, hi] + 0.75 * abs(H[hi, hi - 1])
        else:
            mu = _wilkinson_shift(H[hi - 1, hi - 1], H[hi - 1, hi], H[hi, hi - 1], H[hi, hi])
        idx = np.arange(lo, hi + 1)
        H[idx, idx] -= mu
        rots = []
        for i in range(lo, hi):
            c, s = _givens(H[i, i], H[i + 1, i])
            top = H[i, lo : hi + 1].copy()
            bot = H[i + 1, lo : hi + 1]
            H[i, lo : hi + 1] = c * top + s * bot
            H[i + 1, lo : hi + 1] = -np.conj(s) * top + c * bot
            H[i + 1, i] = 0.0
            rots.append((c, s))
        for i, (c, s) in enumerate(rots, start=lo):
            last = min(i + 2, hi) + 1
            left = H[lo:last, i].copy()
            right = H[lo:last, i + 1]
            H[lo:last, i] = c * left + np.conj(s) * right
            H[lo:last, i + 1] = -s * left + c * right
        H[idx, idx] += mu
    return np.array(eigs[::-1])
