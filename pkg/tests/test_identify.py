import numpy as np
import pytest

from pseudoeig import _fixtures as F
from pseudoeig.identify import (
    AnchorDiagnostics,
    AnchorRow,
    AnchorSearchConfig,
    anchor_search,
    classify,
    default_theta,
    numerical_nullity,
)
from pseudoeig.linalg import EPS
from pseudoeig.solver import SolverConfig
from pseudoeig.testing import jordan_block, planted_jordan, random_support

INF = float("inf")


def test_nullity_examples():
    assert numerical_nullity(np.diag([1.0, 1.0, 5.0]), 1.0, 1e-8) == 2
    assert numerical_nullity(jordan_block(0.0, 4), 1e-9, 1e-6) == 1
    assert numerical_nullity(np.eye(3), 2.0, 0.5) == 0
    with pytest.raises(ValueError):
        numerical_nullity(np.eye(2), 0.0, 0.0)


def test_nullity_monotone_in_theta(rng):
    A = rng.standard_normal((8, 8))
    counts = [numerical_nullity(A, 0.3, t) for t in np.logspace(-6, 2, 30)]
    assert counts == sorted(counts)
    assert counts[-1] == 8


def test_default_theta():
    assert default_theta(np.eye(4)) == pytest.approx(1e-2 * 2 / 4)


def test_nullity_grid20():
    A = F.grid20()
    assert numerical_nullity(A, F.GRID20_LAMBDA_NEAR_2, 1e-2) == 3
    assert numerical_nullity(A, F.GRID20_LAMBDA_NEAR_3, 1e-2) == 2


@pytest.mark.parametrize(
    "lam0, m, k_true",
    [(F.GRID20_LAMBDA_NEAR_2, 3, 3), (F.GRID20_LAMBDA_NEAR_3, 2, 5)],
)
def test_anchor_search_grid20(lam0, m, k_true):
    A = F.grid20()
    k, diag = anchor_search(A, lam0, m, k_true + 1, SolverConfig())
    assert k == k_true == diag.k_accepted
    rows = {r.k: r for r in diag.rows}
    acc = rows[k_true]
    assert abs(acc.lambda_ - round(acc.lambda_.real)) <= 1e-12
    # the condition gap below the anchor and the residual jump above it
    below = min(rows[j].condition for j in range(1, k_true))
    assert below / acc.condition >= 1e4
    assert rows[k_true + 1].residual / max(acc.residual, 1e3 * EPS * np.linalg.norm(A)) >= 1e6
    assert rows[k_true + 1].verdict == "overestimated"
    assert all(rows[j].verdict == "underestimated" for j in range(1, k_true))


def test_anchor_search_simple_eigenvalue():
    A = np.diag([1.0, 2.0, 3.0])
    k, diag = anchor_search(A, 1.0, 1, 3)
    assert k == 1
    assert [r.verdict for r in diag.rows][0] == "accepted"
    # no verdict above the accepted k may claim underestimation
    assert all(r.verdict in ("overestimated", "failed") for r in diag.rows[1:])


def test_anchor_search_without_refinement():
    A = F.grid20()
    k, _ = anchor_search(A, F.GRID20_LAMBDA_NEAR_2, 3, 4, search=AnchorSearchConfig(refine=False))
    assert k == 3


def test_anchor_search_k_max_clamped():
    _, diag = anchor_search(np.diag([1.0, 2.0]), 1.0, 1, 10)
    assert len(diag.rows) == 2


def test_anchor_search_validation():
    with pytest.raises(ValueError):
        anchor_search(np.eye(2), 1.0, 0, 2)


@pytest.mark.parametrize("seed", range(5))
def test_anchor_search_planted(seed):
    n, blocks = random_support(seed, n_max=10)
    P = planted_jordan(n, blocks, seed=seed)
    k, diag = anchor_search(P.A, P.eigenvalue + 1e-7, P.m, P.k + 1)
    assert diag.m == P.m
    assert k == P.k


def row(k, cond, res, verdict=""):
    return AnchorRow(k, 0j, cond, res, verdict)


def test_classify_standard_pattern():
    rows = [row(1, 1e12, 1e-14), row(2, 1e9, 1e-14), row(3, 50.0, 1e-15), row(4, 40.0, 1e-3), row(5, 30.0, 1e-14)]
    assert classify(rows, resid_floor=1e-13) == 3
    assert [r.verdict for r in rows] == ["underestimated", "underestimated", "accepted", "overestimated", "overestimated"]


def test_classify_rank_deficient_rows():
    rows = [row(1, INF, float("nan"), "underestimated"), row(2, 20.0, 1e-15), row(3, 20.0, 1e-2)]
    assert classify(rows, 1e-13) == 2
    assert [r.verdict for r in rows] == ["underestimated", "accepted", "overestimated"]


def test_classify_relabels_contradictions():
    rows = [row(1, 10.0, 1e-15), row(2, INF, float("nan"), "underestimated")]
    assert classify(rows, 1e-13) == 1
    assert [r.verdict for r in rows] == ["accepted", "failed"]


def test_classify_nothing_accepted():
    rows = [row(1, 1e9, 1e-14), row(2, 1e8, 1e-14), AnchorRow(3, 0j, float("nan"), float("nan"), "failed")]
    assert classify(rows, 1e-13) is None
    assert AnchorDiagnostics(1, rows).k_accepted is None
    assert [r.verdict for r in rows] == ["underestimated", "underestimated", "failed"]


def test_classify_floor_protects_zero_residuals():
    # exact zero residual at k=1 must not make round-off at k=2 look like a jump
    rows = [row(1, 10.0, 0.0), row(2, 10.0, 1e-15)]
    assert classify(rows, 1e-13) == 2


def test_diagnostics_table():
    d = AnchorDiagnostics(2, [row(1, 3.0, 1e-15, "accepted")])
    assert d.table() == [(1, 0j, 3.0, 1e-15, "accepted")]
