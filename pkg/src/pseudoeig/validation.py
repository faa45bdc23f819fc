"""Input validation helpers shared by the estimators and the functional API."""

import numpy as np

from .exceptions import DimensionError


def check_matrix(A, *, square=False, name="A"):
    """Return ``A`` as a 2-D complex128 array with finite entries.

    Complex input is accepted as is; sklearn's ``check_array`` rejects it,
    which is why this lives here.
    """
    arr = np.array(A, dtype=complex, copy=True)
    if arr.ndim != 2:
        raise DimensionError(f"{name} must be 2-D, got shape {arr.shape}")
    if arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"{name} must be non-empty, got shape {arr.shape}")
    if square and arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} contains NaN or Inf")
    return arr


def check_support(n, m, k):
    m, k = int(m), int(k)
    if not (1 <= m <= n and 1 <= k <= n):
        raise DimensionError(f"multiplicity support {m}x{k} invalid for n={n}")
    return m, k

