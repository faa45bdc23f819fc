import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pseudoeig.exceptions import DimensionError
from pseudoeig.mapping import (
    MultiplicitySupport,
    PencilParameters,
    apply_jacobian,
    assemble_jacobian,
    eval_g,
    make_T,
    pack,
    pack_residual,
    random_C,
    residual_norm,
    unpack,
    unpack_residual,
)


def crandn(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_params(rng, n, m, k, seed=0):
    S = np.triu(crandn(rng, k, k), 1)
    S[np.arange(k - 1), np.arange(1, k)] += 2.0
    return PencilParameters(random_C(n, m, seed), S, make_T(m, k))


def test_make_T():
    np.testing.assert_array_equal(make_T(1, 1), [[1]])
    np.testing.assert_array_equal(make_T(2, 3), [[1, 0, 0], [0, 0, 0]])
    np.testing.assert_array_equal(make_T(3, 2), [[1, 0], [0, 0], [0, 0]])


def test_random_C_properties():
    C1, C2 = random_C(5, 2, 7), random_C(5, 2, 7)
    np.testing.assert_array_equal(C1, C2)
    np.testing.assert_allclose(np.linalg.norm(C1, axis=0), 1.0, atol=1e-15)
    assert np.linalg.norm(C1 - random_C(5, 2, 8)) > 0
    with pytest.raises(DimensionError):
        random_C(2, 3, 0)


def test_parameter_validation():
    C = random_C(4, 1, 0)
    with pytest.raises(ValueError):
        PencilParameters(C, np.eye(2, dtype=complex), make_T(1, 2))  # not strictly upper
    with pytest.raises(ValueError):
        PencilParameters(C, np.zeros((2, 2), dtype=complex), make_T(1, 2))  # rank < k-1
    with pytest.raises(DimensionError):
        PencilParameters(C, np.zeros((1, 1), dtype=complex), make_T(1, 2))
    with pytest.raises(DimensionError):
        MultiplicitySupport(0, 1)
    P = PencilParameters(C, np.array([[0, 3.0], [0, 0]], dtype=complex), make_T(1, 2))
    assert (P.m, P.k) == (1, 2)


def test_eval_g_exact_jordan_pair():
    A = np.array([[0, 1], [0, 0]], dtype=complex)
    P = PencilParameters(np.array([[1], [0]], dtype=complex), np.array([[0, 1], [0, 0]], dtype=complex), make_T(1, 2))
    R1, R2 = eval_g(A, P, 0.0, np.eye(2))
    assert residual_norm(R1, R2) == 0


def test_eval_g_zero_X(rng):
    A = crandn(rng, 4, 4)
    P = random_params(rng, 4, 2, 3)
    R1, R2 = eval_g(A, P, 1.3 - 0.2j, np.zeros((4, 3)))
    assert not R1.any()
    np.testing.assert_array_equal(R2, -make_T(2, 3))


def test_eval_g_homogeneous_linear_in_X(rng):
    A = crandn(rng, 5, 5)
    P = random_params(rng, 5, 1, 2)
    X1, X2 = crandn(rng, 5, 2), crandn(rng, 5, 2)
    Z = np.zeros((5, 2))

    def h(X):
        return pack_residual(*eval_g(A, P, 0.7, X)) - pack_residual(*eval_g(A, P, 0.7, Z))

    np.testing.assert_allclose(h(2 * X1 - 3j * X2), 2 * h(X1) - 3j * h(X2), atol=1e-12)


def test_eval_g_dimension_mismatch(rng):
    P = random_params(rng, 4, 1, 2)
    with pytest.raises(DimensionError):
        eval_g(np.eye(4), P, 0, np.zeros((4, 3)))


def test_residual_norm_examples():
    assert residual_norm(np.zeros((2, 2)), np.zeros((1, 2))) == 0
    assert residual_norm(np.zeros((3, 2)), -make_T(2, 2)) == 1
    assert residual_norm(np.array([[3.0]]), np.array([[4.0]])) == 5


def test_pack_conventions(rng):
    Y = crandn(rng, 3, 4)
    s, Y2 = unpack(pack(1 + 2j, Y), 3, 4)
    assert s == 1 + 2j and np.array_equal(Y, Y2)
    assert not pack(0, np.zeros((3, 2))).any()
    v = pack(1, np.zeros((3, 2)))
    assert np.flatnonzero(v).tolist() == [6]
    # y_k comes first
    np.testing.assert_array_equal(pack(0, Y)[:3], Y[:, -1])
    with pytest.raises(DimensionError):
        unpack(np.zeros(5), 3, 4)


def test_pack_residual_roundtrip(rng):
    R1, R2 = crandn(rng, 4, 3), crandn(rng, 2, 3)
    A1, A2 = unpack_residual(pack_residual(R1, R2), 4, 2, 3)
    assert np.array_equal(A1, R1) and np.array_equal(A2, R2)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.integers(1, 10), st.integers(1, 4), st.integers(0, 2**31))
def test_jacobian_action_matches_direct(n, m, k, seed):
    m, k = min(m, n), min(k, n)
    rng = np.random.default_rng(seed)
    A = crandn(rng, n, n)
    P = random_params(rng, n, m, k, seed)
    X, Y = crandn(rng, n, k), crandn(rng, n, k)
    lam, sig = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
    J = assemble_jacobian(A, P, lam, X)
    assert J.shape == (n * k + m * k, n * k + 1)
    direct = pack_residual(*apply_jacobian(A, P, lam, X, sig, Y))
    assert np.linalg.norm(J @ pack(sig, Y) - direct) <= 1e-13 * np.linalg.norm(direct)


def test_jacobian_block_structure(rng):
    n, m, k = 4, 2, 3
    A = crandn(rng, n, n)
    P = random_params(rng, n, m, k)
    X = crandn(rng, n, k)
    lam = 0.3
    J = assemble_jacobian(A, P, lam, X)
    rb = n + m
    stack = np.vstack([P.C.conj().T, A - lam * np.eye(n)])
    for b in range(k):
        np.testing.assert_array_equal(J[b * rb : (b + 1) * rb, b * n : (b + 1) * n], stack)
        # block upper triangular: nothing left of the diagonal block
        assert not J[b * rb : (b + 1) * rb, : b * n].any()
    # off-diagonal block: equation column j = k-1 (first row block) against unknown y_1 (last column block)
    np.testing.assert_array_equal(J[m:rb, (k - 1) * n : k * n], -P.S[0, k - 1] * np.eye(n))
    np.testing.assert_array_equal(J[m:rb, -1], -X[:, k - 1])


def test_jacobian_k1_form(rng):
    n, m = 5, 2
    A = crandn(rng, n, n)
    P = random_params(rng, n, m, 1)
    X = crandn(rng, n, 1)
    J = assemble_jacobian(A, P, 2.0, X)
    expected = np.block([[P.C.conj().T, np.zeros((m, 1))], [A - 2.0 * np.eye(n), -X]])
    np.testing.assert_array_equal(J, expected)


def test_jacobian_finite_differences(rng):
    n, m, k = 6, 2, 3
    A = crandn(rng, n, n)
    P = random_params(rng, n, m, k)
    X = crandn(rng, n, k)
    lam = complex(0.4, -0.1)
    dsig, dY = complex(0.3, 0.8), crandn(rng, n, k)
    h = 1e-7
    fd = (pack_residual(*eval_g(A, P, lam + h * dsig, X + h * dY)) - pack_residual(*eval_g(A, P, lam, X))) / h
    J = assemble_jacobian(A, P, lam, X)
    # exact up to the h * dsig * dY cross term
    assert np.linalg.norm(J @ pack(dsig, dY) - fd) <= 1e-5 * np.linalg.norm(fd)


@pytest.mark.skipif(np.finfo(np.longdouble).eps >= np.finfo(float).eps, reason="long double is plain double here")
def test_eval_g_residual_beats_double_rounding(rng):
    from fractions import Fraction

    # near an eigenpair the residual cancels; it must be accurate well below eps * ||A|| ||x||
    n = 6
    A = rng.standard_normal((n, n)) * 1e4
    w, V = np.linalg.eig(A)
    i = int(np.argmax(np.abs(w.imag) == 0))
    lam, x = w[i].real, V[:, i].real
    P = PencilParameters(random_C(n, 1, 0), np.zeros((1, 1), dtype=complex), make_T(1, 1))
    R1 = eval_g(A, P, lam, x[:, None])[0][:, 0].real

    exact = [sum(Fraction(A[r, c]) * Fraction(x[c]) for c in range(n)) - Fraction(lam) * Fraction(x[r]) for r in range(n)]
    eps = np.finfo(float).eps
    scale = np.linalg.norm(A) * np.linalg.norm(x)
    for r in range(n):
        err = abs(float(Fraction(R1[r]) - exact[r]))
        assert err <= eps * abs(float(exact[r])) + 1e-2 * eps * scale
