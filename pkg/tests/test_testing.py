import numpy as np
import pytest

from pseudoeig.testing import jordan_block, planted_jordan, random_support


def test_jordan_block():
    np.testing.assert_array_equal(jordan_block(2.0, 3), [[2, 1, 0], [0, 2, 1], [0, 0, 2]])


def test_planted_structure():
    P = planted_jordan(9, (2, 4), eigenvalue=1.0, noise=1e-9, seed=1)
    assert P.blocks == (4, 2) and (P.m, P.k, P.algebraic_multiplicity) == (2, 2, 6)
    assert np.linalg.norm(P.A - P.A_exact) == pytest.approx(1e-9)
    assert np.linalg.cond(P.V) <= 3 + 1e-9
    N = P.A_exact - np.eye(9)
    ranks = [np.linalg.matrix_rank(np.linalg.matrix_power(N, j), tol=1e-8) for j in (1, 2, 4)]
    # nullities 2, 4, 6 at powers 1, 2, 4
    assert ranks == [7, 5, 3]


def test_planted_deterministic_and_validated():
    a, b = planted_jordan(6, (3,), seed=4), planted_jordan(6, (3,), seed=4)
    assert np.array_equal(a.A, b.A)
    with pytest.raises(ValueError):
        planted_jordan(3, (2, 2))


def test_random_support_bounds():
    for seed in range(50):
        n, blocks = random_support(seed)
        assert 1 <= len(blocks) <= 3 and 1 <= min(blocks) <= 4 and sum(blocks) < n <= 12
