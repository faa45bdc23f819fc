"""Multiplicity support identification.

Geometric multiplicity m is the numerical nullity of A - lam0 I.  The
Segre anchor k is found by solving for k = 1, 2, ... and reading the
pattern of condition numbers and residuals: too small a k leaves the
Jacobian nearly singular (huge condition), too large a k makes the
residual jump from round-off level to O(distance to the next structure).
"""

from dataclasses import dataclass, field

import numpy as np

from .exceptions import PseudoEigError, RankDeficientJacobian, RankDeficientX
from .linalg import EPS, singular_values
from .refine import refine
from .solver import SolverConfig, pseudoeig
from .validation import check_matrix

VERDICTS = ("underestimated", "accepted", "overestimated", "failed")


def default_theta(A):
    """1e-2 * ||A||_F / n.  Only a starting point: theta has to sit between
    |lam0 - lam*| and the distance to the other eigenvalues."""
    A = np.asarray(A)
    return 1e-2 * float(np.linalg.norm(A)) / A.shape[0]


def numerical_nullity(A, lam0, theta):
    """Number of singular values of A - lam0 I strictly below ``theta``."""
    A = check_matrix(A, square=True)
    if not theta > 0:
        raise ValueError("theta must be positive")
    s = singular_values(A - lam0 * np.eye(A.shape[0]))
    return int(np.sum(s < theta))


@dataclass
class AnchorRow:
    k: int
    lambda_: complex
    condition: float
    residual: float
    verdict: str = "failed"
    message: str = ""


@dataclass
class AnchorDiagnostics:
    m: int
    rows: list = field(default_factory=list)

    @property
    def k_accepted(self):
        for row in self.rows:
            if row.verdict == "accepted":
                return row.k
        return None

    def table(self):
        """Rows as plain tuples (k, lambda, condition, residual, verdict)."""
        return [(r.k, r.lambda_, r.condition, r.residual, r.verdict) for r in self.rows]


@dataclass
class AnchorSearchConfig:
    cond_threshold: float = 1e5
    jump_factor: float = 1e6
    resid_floor: float = None  # None means 1e3 * eps * ||A||_F
    refine: bool = True  # classify on orthonormalized solves (less C-dependent)


def _solve_row(A, lam0, m, k, cfg, use_refine):
    try:
        sol = pseudoeig(A, lam0, m, k, cfg)
    except RankDeficientJacobian as exc:
        return AnchorRow(k, complex(lam0), float("inf"), float("nan"), "underestimated", str(exc))
    except (PseudoEigError, np.linalg.LinAlgError) as exc:
        return AnchorRow(k, complex(lam0), float("nan"), float("nan"), "failed", str(exc))
    if use_refine and sol.converged:
        try:
            sol = refine(A, sol, cfg)
        except RankDeficientJacobian as exc:
            return AnchorRow(k, sol.lambda_hat, float("inf"), sol.residual, "underestimated", str(exc))
        except (RankDeficientX, PseudoEigError):
            pass  # keep the unrefined solve
    return AnchorRow(k, sol.lambda_hat, sol.condition, sol.residual, "", sol.message)


def classify(rows, resid_floor, cond_threshold=1e5, jump_factor=1e6):
    """Assign verdicts in place; returns the accepted k or None.

    A row is overestimated when its residual exceeds ``jump_factor`` times
    the smallest residual seen at lower k (floored at ``resid_floor``);
    every later row inherits that verdict.  Among the rest, a condition
    above ``cond_threshold`` marks an underestimate.  The largest
    remaining k is accepted; underestimates above it are relabelled
    ``failed``.
    """
    best = float("inf")
    over = False
    for row in rows:
        if row.verdict == "failed":
            continue
        if over:
            row.verdict = "overestimated"
            continue
        if np.isfinite(row.residual):
            base = resid_floor if best == float("inf") else max(best, resid_floor)
            if row.residual > jump_factor * base:
                row.verdict = "overestimated"
                over = True
                continue
            best = min(best, row.residual)
        if row.verdict != "underestimated":
            row.verdict = "underestimated" if not row.condition <= cond_threshold else ""
    candidates = [r for r in rows if r.verdict == ""]
    if not candidates:
        return None
    accepted = candidates[-1]
    accepted.verdict = "accepted"
    for r in candidates[:-1]:
        r.verdict = "underestimated"
    # a near-singular Jacobian above the accepted k contradicts the acceptance
    for r in rows:
        if r.k > accepted.k and r.verdict == "underestimated":
            r.verdict = "failed"
    return accepted.k


def anchor_search(A, lam0, m, k_max, cfg=None, search=None):
    """Solve for k = 1..k_max and classify each run; returns ``(k_accepted, diagnostics)``.

    Solver errors are recorded per row (verdict ``failed``, or
    ``underestimated`` for a rank-deficient Jacobian) and never abort
    the sweep.
    """
    cfg = cfg or SolverConfig()
    search = search or AnchorSearchConfig()
    A = check_matrix(A, square=True)
    n = A.shape[0]
    if m < 1 or k_max < 1:
        raise ValueError("m and k_max must be >= 1")
    k_max = min(int(k_max), n)
    floor = search.resid_floor
    if floor is None:
        floor = 1e3 * EPS * float(np.linalg.norm(A))
    diag = AnchorDiagnostics(m=int(m))
    for k in range(1, k_max + 1):
        diag.rows.append(_solve_row(A, lam0, m, k, cfg, search.refine))
    k_acc = classify(diag.rows, floor, search.cond_threshold, search.jump_factor)
    return k_acc, diag


__all__ = [
    "numerical_nullity",
    "default_theta",
    "anchor_search",
    "classify",
    "AnchorRow",
    "AnchorDiagnostics",
    "AnchorSearchConfig",
]
