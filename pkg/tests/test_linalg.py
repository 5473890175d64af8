"""Dense kernel wrappers: kron, distances, Hermitian eigensolving, svd3."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bellsep import (
    frobenius_distance,
    from_t_vector,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    kron,
    partial_transpose,
    pauli,
    svd3,
)
from conftest import random_hermitian

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)


class TestKron:
    def test_identity(self):
        np.testing.assert_array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))

    def test_sigma3_pair_is_diagonal(self):
        np.testing.assert_array_equal(
            kron(pauli(3), pauli(3)), np.diag([1.0, -1.0, -1.0, 1.0]).astype(complex)
        )

    def test_sigma1_pair_is_antidiagonal(self):
        expected = np.zeros((4, 4), dtype=complex)
        expected[0, 3] = expected[1, 2] = expected[2, 1] = expected[3, 0] = 1.0
        np.testing.assert_array_equal(kron(pauli(1), pauli(1)), expected)

    def test_block_structure_matches_reference(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
            np.testing.assert_array_equal(kron(a, b), np.kron(a, b))

    @given(alpha=finite)
    def test_scaling_bilinearity(self, alpha):
        a = np.array([[0.3, -0.1j], [0.1j, 0.7]])
        b = np.array([[0.2, 0.5], [0.5, 0.8]])
        lhs = kron(alpha * a, b)
        rhs = alpha * kron(a, b)
        assert np.max(np.abs(lhs - rhs)) <= 1e-14 * max(1.0, abs(alpha))

    def test_rejects_wrong_shape(self):
        with pytest.raises(ValueError):
            kron(np.eye(3), np.eye(2))


class TestFrobeniusDistance:
    def test_zero_for_equal(self):
        m = np.array([[1.0, 2.0j], [-2.0j, 3.0]])
        assert frobenius_distance(m, m) == 0.0

    def test_identity_vs_zero(self):
        assert frobenius_distance(np.eye(2), np.zeros((2, 2))) == pytest.approx(np.sqrt(2.0))

    def test_swapped_projectors(self):
        a = np.diag([1.0, 0.0])
        b = np.diag([0.0, 1.0])
        assert frobenius_distance(a, b) == pytest.approx(np.sqrt(2.0))

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            frobenius_distance(np.eye(2), np.eye(4))


class TestHermitianEigenvalues:
    def test_diagonal(self, backend):
        np.testing.assert_allclose(
            hermitian_eigenvalues(np.diag([1.0, 2.0, 3.0, 4.0])), [1, 2, 3, 4], atol=1e-14
        )

    def test_zero(self, backend):
        np.testing.assert_array_equal(hermitian_eigenvalues(np.zeros((4, 4))), np.zeros(4))

    def test_scaled_pt_of_lowest_bell_state(self, backend):
        """4 times the partial transpose at t = (-1,-1,-1) has spectrum [-2,2,2,2]."""
        m = 4.0 * partial_transpose(from_t_vector(-1.0, -1.0, -1.0))
        np.testing.assert_allclose(hermitian_eigenvalues(m), [-2.0, 2.0, 2.0, 2.0], atol=1e-12)

    def test_sum_equals_trace(self, backend):
        rng = np.random.default_rng(31)
        for n in (2, 3, 4):
            for _ in range(100):
                h = random_hermitian(rng, n)
                w = hermitian_eigenvalues(h)
                assert len(w) == n
                assert abs(np.sum(w) - np.trace(h).real) <= 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_hermitizes_small_asymmetry(self):
        h = np.array([[1.0, 0.5 + 1e-12], [0.5, 2.0]])
        w = hermitian_eigenvalues(h)
        np.testing.assert_allclose(w, np.linalg.eigvalsh((h + h.conj().T) / 2), atol=1e-12)


class TestHermitianEigensystem:
    def test_eigenpairs(self, backend):
        rng = np.random.default_rng(8)
        for _ in range(100):
            h = random_hermitian(rng, 4)
            w, v = hermitian_eigensystem(h)
            for k in range(4):
                assert np.linalg.norm(h @ v[:, k] - w[k] * v[:, k]) <= 1e-12 * max(
                    1.0, np.abs(w).max()
                )

    def test_matches_eigvals_route(self, backend):
        h = random_hermitian(np.random.default_rng(9), 4)
        w_only = hermitian_eigenvalues(h)
        w, _ = hermitian_eigensystem(h)
        np.testing.assert_allclose(w, w_only, atol=1e-14)


class TestSvd3:
    def test_identity(self):
        u, s, v = svd3(np.eye(3))
        np.testing.assert_allclose(s, [1.0, 1.0, 1.0])
        np.testing.assert_allclose(np.abs(u @ v.T), np.eye(3), atol=1e-12)

    def test_signed_diagonal(self):
        u, s, v = svd3(np.diag([3.0, -2.0, 1.0]))
        np.testing.assert_allclose(s, [3.0, 2.0, 1.0], atol=1e-12)

    def test_zero_matrix(self):
        u, s, v = svd3(np.zeros((3, 3)))
        np.testing.assert_array_equal(s, np.zeros(3))
        np.testing.assert_array_equal(u, np.eye(3))
        np.testing.assert_array_equal(v, np.eye(3))

    @staticmethod
    def _check(m, atol=1e-10):
        u, s, v = svd3(m)
        assert s[0] >= s[1] >= s[2] >= 0.0
        assert np.linalg.norm(u @ np.diag(s) @ v.T - m) <= atol
        assert np.linalg.norm(u.T @ u - np.eye(3)) <= 1e-10
        assert np.linalg.norm(v.T @ v - np.eye(3)) <= 1e-10
        np.testing.assert_allclose(s, np.linalg.svd(m, compute_uv=False), atol=1e-10)

    def test_random_bulk(self):
        rng = np.random.default_rng(55)
        for _ in range(10_000):
            self._check(rng.uniform(-1.0, 1.0, (3, 3)))

    def test_backends(self, backend):
        rng = np.random.default_rng(56)
        for _ in range(300):
            self._check(rng.uniform(-1.0, 1.0, (3, 3)))

    def test_rank_deficient(self):
        rng = np.random.default_rng(57)
        for _ in range(500):
            x = rng.normal(size=3)
            y = rng.normal(size=3)
            self._check(np.outer(x, y))
            self._check(np.outer(x, x) + np.outer(y, y))

    def test_repeated_singular_values(self):
        self._check(np.diag([2.0, 2.0, 2.0]))
        self._check(-np.eye(3))
        r = np.array([[0.0, -1.0, 0.0], [1.0, 0.0, 0.0], [0.0, 0.0, 1.0]])
        self._check(r)

    def test_rejects_complex(self):
        with pytest.raises((TypeError, ValueError)):
            svd3(np.eye(3, dtype=complex) * 1j)
