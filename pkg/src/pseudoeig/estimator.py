"""scikit-learn style estimators over the functional API.

``fit`` takes the square matrix A (there is no ``y``); fitted attributes
carry a trailing underscore.
"""

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from .identify import AnchorSearchConfig, anchor_search, default_theta, numerical_nullity
from .linalg import singular_values
from .refine import refine
from .solver import SolverConfig, certify, pseudoeig
from .validation import check_matrix


class PseudoEigenvalue(BaseEstimator):
    """m x k pseudo-eigenvalue of a square matrix near ``lambda0``.

    Parameters
    ----------
    lambda0 : complex
        Initial eigenvalue estimate, e.g. a cluster mean of computed eigenvalues.
    m, k : int
        Multiplicity support: geometric multiplicity and smallest Jordan block size.
    seed : int
        Seed of the random parameter matrix C.
    max_iter : int
    orthonormalize : bool
        Re-parameterize so X has orthonormal columns and iterate again.
    certify : bool
        Build the backward-error certificate after fitting.

    Attributes
    ----------
    lambda_, X_, S_, C_, residual_, backward_error_, condition_,
    n_iter_, converged_, solution_, certificate_ (None unless ``certify``)
    """

    def __init__(self, lambda0=0.0, m=1, k=1, seed=42, max_iter=50, orthonormalize=False, certify=False):
        self.lambda0 = lambda0
        self.m = m
        self.k = k
        self.seed = seed
        self.max_iter = max_iter
        self.orthonormalize = orthonormalize
        self.certify = certify

    def _config(self):
        return SolverConfig(max_iter=self.max_iter, seed=self.seed)

    def fit(self, A, y=None):
        A = check_matrix(A, square=True)
        cfg = self._config()
        sol = pseudoeig(A, complex(self.lambda0), self.m, self.k, cfg)
        self.unrefined_ = sol
        if self.orthonormalize:
            sol = refine(A, sol, cfg)
        self.solution_ = sol
        self.lambda_ = complex(sol.lambda_hat)
        self.X_ = sol.X_hat
        self.S_ = sol.S
        self.C_ = sol.C
        self.residual_ = sol.residual
        self.backward_error_ = sol.backward_error
        self.condition_ = sol.condition
        self.n_iter_ = sol.iterations
        self.converged_ = sol.converged
        self.certificate_ = certify(A, sol) if self.certify else None
        self.n_features_in_ = A.shape[1]
        return self

    def forward_error_bound(self, perturbation_norm):
        """First-order bound condition * ||dA|| on the eigenvalue error."""
        check_is_fitted(self, "lambda_")
        return self.condition_ * float(perturbation_norm)


class MultiplicitySupportIdentifier(BaseEstimator):
    """Identify (m, k) at ``lambda0``: numerical nullity, then the increasing-k search.

    ``theta=None`` uses 1e-2 ||A||_F / n; it has to separate |lambda0 - lambda*|
    from the distance to the other eigenvalues.  Pass ``m`` to skip the
    nullity step.
    """

    def __init__(
        self,
        lambda0=0.0,
        theta=None,
        k_max=8,
        m=None,
        seed=42,
        max_iter=50,
        cond_threshold=1e5,
        jump_factor=1e6,
        resid_floor=None,
        refine=True,
    ):
        self.lambda0 = lambda0
        self.theta = theta
        self.k_max = k_max
        self.m = m
        self.seed = seed
        self.max_iter = max_iter
        self.cond_threshold = cond_threshold
        self.jump_factor = jump_factor
        self.resid_floor = resid_floor
        self.refine = refine

    def fit(self, A, y=None):
        A = check_matrix(A, square=True)
        n = A.shape[0]
        lam0 = complex(self.lambda0)
        theta = self.theta if self.theta is not None else default_theta(A)
        self.theta_ = float(theta)
        self.singular_values_ = singular_values(A - lam0 * np.eye(n))
        self.m_ = int(self.m) if self.m is not None else numerical_nullity(A, lam0, theta)
        self.n_features_in_ = n
        if self.m_ == 0:
            self.k_, self.diagnostics_ = None, None
            return self
        search = AnchorSearchConfig(
            cond_threshold=self.cond_threshold,
            jump_factor=self.jump_factor,
            resid_floor=self.resid_floor,
            refine=self.refine,
        )
        cfg = SolverConfig(max_iter=self.max_iter, seed=self.seed)
        self.k_, self.diagnostics_ = anchor_search(A, lam0, self.m_, self.k_max, cfg, search)
        return self

    @property
    def support_(self):
        check_is_fitted(self, "m_")
        return (self.m_, self.k_)
