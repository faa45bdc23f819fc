"""Seeded generators of matrices with a known (planted) Jordan structure."""

from dataclasses import dataclass

import numpy as np


@dataclass
class PlantedMatrix:
    A: np.ndarray  # noisy matrix
    A_exact: np.ndarray
    eigenvalue: complex
    blocks: tuple  # Jordan block sizes at ``eigenvalue``, non-increasing
    V: np.ndarray

    @property
    def m(self):
        return len(self.blocks)

    @property
    def k(self):
        return min(self.blocks)

    @property
    def algebraic_multiplicity(self):
        return sum(self.blocks)


def jordan_block(lam, size):
    return lam * np.eye(size, dtype=complex) + np.eye(size, k=1, dtype=complex)


def _unitary(rng, n):
    Z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    Q, R = np.linalg.qr(Z)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def planted_jordan(n, blocks, eigenvalue=None, noise=0.0, seed=0, spread=3.0, separation=1.0):
    """A = V J V^{-1} + E with the given Jordan blocks at one eigenvalue.

    The remaining n - sum(blocks) eigenvalues are simple, drawn at distance
    >= ``separation`` from the planted one.  V = U diag(d) W^H with d in
    [1, spread], so cond(V) <= spread.  E is seeded Gaussian scaled to
    ||E||_F = noise.
    """
    rng = np.random.default_rng(seed)
    blocks = tuple(sorted((int(b) for b in blocks), reverse=True))
    total = sum(blocks)
    if not blocks or min(blocks) < 1 or total > n:
        raise ValueError(f"blocks {blocks} do not fit in n={n}")
    if eigenvalue is None:
        eigenvalue = complex(rng.uniform(-2, 2), rng.uniform(-1, 1))
    lam = complex(eigenvalue)
    others = []
    while len(others) < n - total:
        z = lam + complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        if abs(z - lam) >= separation and all(abs(z - w) >= 0.5 for w in others):
            others.append(z)
    J = np.zeros((n, n), dtype=complex)
    pos = 0
    for b in blocks:
        J[pos : pos + b, pos : pos + b] = jordan_block(lam, b)
        pos += b
    for z in others:
        J[pos, pos] = z
        pos += 1
    V = _unitary(rng, n) @ np.diag(rng.uniform(1.0, spread, n)) @ _unitary(rng, n).conj().T
    A_exact = V @ J @ np.linalg.inv(V)
    E = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    A = A_exact + noise * E / np.linalg.norm(E)
    return PlantedMatrix(A, A_exact, lam, blocks, V)


def random_support(seed, n_max=12):
    """Seeded (n, blocks) with 1 <= m <= 3 and anchor 1 <= k <= 4, leaving room for simple eigenvalues."""
    rng = np.random.default_rng(seed)
    while True:
        n = int(rng.integers(4, n_max + 1))
        m = int(rng.integers(1, 4))
        k = int(rng.integers(1, 5))
        blocks = [k] + [k + int(rng.integers(0, 3)) for _ in range(m - 1)]
        if sum(blocks) <= n - 1:
            return n, tuple(sorted(blocks, reverse=True))
