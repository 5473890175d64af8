"""State types, Pauli algebra, Hilbert-Schmidt coefficients, partial transpose."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bellsep import (
    CorrelationData,
    DensityMatrix,
    InvalidStateError,
    QubitState,
    from_t_vector,
    hermitian_eigenvalues,
    hs_decompose,
    hs_reconstruct,
    partial_transpose,
    pauli,
    purity,
)
from conftest import random_density, random_valid_t

SINGLET = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -0.5, 0.0],
        [0.0, -0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ],
    dtype=complex,
)


def tetra_margins(t):
    """The four linear forms that are nonnegative exactly on valid states."""
    t1, t2, t3 = t
    return np.array(
        [1 - t1 - t2 - t3, 1 + t1 + t2 - t3, 1 - t1 + t2 + t3, 1 + t1 - t2 + t3]
    )


class TestPauli:
    def test_matrices(self):
        np.testing.assert_array_equal(pauli(0), np.eye(2))
        np.testing.assert_array_equal(pauli(1), [[0, 1], [1, 0]])
        np.testing.assert_array_equal(pauli(2), [[0, -1j], [1j, 0]])
        np.testing.assert_array_equal(pauli(3), [[1, 0], [0, -1]])

    def test_index_range(self):
        with pytest.raises(ValueError):
            pauli(4)
        with pytest.raises(ValueError):
            pauli(-1)

    def test_immutable(self):
        with pytest.raises(ValueError):
            pauli(1)[0, 0] = 5.0


class TestValidation:
    def test_not_hermitian(self):
        m = np.eye(4, dtype=complex) / 4.0
        m[0, 1] = 0.5
        with pytest.raises(InvalidStateError, match="Hermitian"):
            DensityMatrix(m)

    def test_bad_trace(self):
        with pytest.raises(InvalidStateError, match="trace"):
            DensityMatrix(np.eye(4) / 2.0)

    def test_not_psd(self):
        with pytest.raises(InvalidStateError, match="positive"):
            DensityMatrix(np.diag([1.5, -0.5, 0.0, 0.0]))

    def test_wrong_shape(self):
        with pytest.raises(InvalidStateError):
            DensityMatrix(np.eye(2) / 2.0)

    def test_non_finite(self):
        m = np.eye(4) / 4.0
        m[2, 2] = np.nan
        with pytest.raises(InvalidStateError):
            DensityMatrix(m)

    def test_boundary_noise_accepted(self):
        """Pure states a hair outside PSD from rounding still validate."""
        m = SINGLET.copy()
        m[0, 0] = -1e-10
        m[3, 3] = 1e-10
        DensityMatrix(m)

    def test_matrix_read_only(self):
        rho = DensityMatrix(np.eye(4) / 4.0)
        with pytest.raises(ValueError):
            rho.matrix[0, 0] = 9.0

    def test_qubit_state(self):
        QubitState(np.eye(2) / 2.0)
        with pytest.raises(InvalidStateError):
            QubitState(np.diag([2.0, -1.0]))


class TestFromTVector:
    def test_maximally_mixed(self):
        np.testing.assert_array_equal(from_t_vector(0, 0, 0).matrix, np.eye(4) / 4.0)

    def test_singlet(self):
        np.testing.assert_allclose(from_t_vector(-1, -1, -1).matrix, SINGLET, atol=1e-15)

    def test_invalid_corner(self):
        with pytest.raises(InvalidStateError):
            from_t_vector(1, 1, 1)

    def test_entry_structure(self):
        """Diagonal (1 +/- t3)/4, corners (t1 -/+ t2)/4, zeros elsewhere."""
        rng = np.random.default_rng(11)
        for _ in range(200):
            t1, t2, t3 = random_valid_t(rng)
            m = from_t_vector(t1, t2, t3).matrix
            expected = np.zeros((4, 4), dtype=complex)
            expected[0, 0] = expected[3, 3] = (1 + t3) / 4.0
            expected[1, 1] = expected[2, 2] = (1 - t3) / 4.0
            expected[0, 3] = expected[3, 0] = (t1 - t2) / 4.0
            expected[1, 2] = expected[2, 1] = (t1 + t2) / 4.0
            np.testing.assert_allclose(m, expected, atol=1e-15)

    def test_validity_matches_tetrahedron(self):
        """Numeric PSD acceptance agrees with the four-plane description."""
        rng = np.random.default_rng(12)
        checked = 0
        while checked < 3000:
            t = rng.uniform(-1, 1, 3)
            margins = tetra_margins(t)
            if np.min(margins) > -1e-8 and np.min(margins) < 1e-8:
                continue  # too close to a face to call either way
            try:
                from_t_vector(*t)
                ok = True
            except InvalidStateError:
                ok = False
            assert ok == (np.min(margins) > 0.0), t
            checked += 1

    def test_vertices_are_bell_states(self):
        for t in [(1, 1, -1), (1, -1, 1), (-1, 1, 1), (-1, -1, -1)]:
            rho = from_t_vector(*t)
            assert purity(rho) == pytest.approx(1.0, abs=1e-12)

    def test_state_spectrum_closed_form(self, backend):
        """Eigenvalues of the state itself: (1+t3 +/- (t1-t2))/4, (1-t3 +/- (t1+t2))/4."""
        rng = np.random.default_rng(13)
        for _ in range(300):
            t1, t2, t3 = random_valid_t(rng)
            w = hermitian_eigenvalues(from_t_vector(t1, t2, t3).matrix)
            expected = np.sort(
                [
                    (1 + t3 + (t1 - t2)) / 4.0,
                    (1 + t3 - (t1 - t2)) / 4.0,
                    (1 - t3 + (t1 + t2)) / 4.0,
                    (1 - t3 - (t1 + t2)) / 4.0,
                ]
            )
            np.testing.assert_allclose(w, expected, atol=1e-10)


class TestHilbertSchmidt:
    def test_maximally_mixed(self):
        data = hs_decompose(DensityMatrix(np.eye(4) / 4.0))
        np.testing.assert_array_equal(data.r, np.zeros(3))
        np.testing.assert_array_equal(data.s, np.zeros(3))
        np.testing.assert_array_equal(data.t, np.zeros((3, 3)))

    def test_bell_diagonal_round_trip(self):
        rng = np.random.default_rng(14)
        for _ in range(100):
            t = random_valid_t(rng)
            data = hs_decompose(from_t_vector(*t))
            np.testing.assert_allclose(data.r, np.zeros(3), atol=1e-10)
            np.testing.assert_allclose(data.s, np.zeros(3), atol=1e-10)
            np.testing.assert_allclose(data.t, np.diag(t), atol=1e-10)

    def test_singlet_correlations(self):
        data = hs_decompose(DensityMatrix(SINGLET))
        np.testing.assert_allclose(data.t, -np.eye(3), atol=1e-12)

    def test_reconstruction_inverts(self):
        rng = np.random.default_rng(15)
        for _ in range(200):
            rho = DensityMatrix(random_density(rng))
            again = hs_reconstruct(hs_decompose(rho))
            assert np.max(np.abs(again - rho.matrix)) <= 1e-10

    def test_coefficients_bounded(self):
        rng = np.random.default_rng(16)
        for _ in range(200):
            data = hs_decompose(DensityMatrix(random_density(rng)))
            for block in (data.r, data.s, data.t):
                assert np.max(np.abs(block)) <= 1.0 + 1e-9


class TestPartialTranspose:
    def test_diagonal_fixed_point(self):
        m = np.diag([0.1, 0.2, 0.3, 0.4]).astype(complex)
        np.testing.assert_array_equal(partial_transpose(DensityMatrix(m)), m)

    def test_involution_exact(self):
        rng = np.random.default_rng(21)
        for _ in range(100):
            rho = DensityMatrix(random_density(rng))
            np.testing.assert_array_equal(
                partial_transpose(partial_transpose(rho)), rho.matrix
            )

    def test_trace_and_hermiticity(self):
        rng = np.random.default_rng(22)
        for _ in range(100):
            pt = partial_transpose(DensityMatrix(random_density(rng)))
            assert abs(np.trace(pt).real - 1.0) <= 1e-12
            assert np.max(np.abs(pt - pt.conj().T)) <= 1e-15

    def test_bell_diagonal_entry_swap(self):
        """PT swaps the roles of t1-t2 and t1+t2 in the anti-diagonals."""
        rng = np.random.default_rng(23)
        for _ in range(100):
            t1, t2, t3 = random_valid_t(rng)
            pt = partial_transpose(from_t_vector(t1, t2, t3))
            expected = np.zeros((4, 4), dtype=complex)
            expected[0, 0] = expected[3, 3] = (1 + t3) / 4.0
            expected[1, 1] = expected[2, 2] = (1 - t3) / 4.0
            expected[0, 3] = expected[3, 0] = (t1 + t2) / 4.0
            expected[1, 2] = expected[2, 1] = (t1 - t2) / 4.0
            np.testing.assert_allclose(pt, expected, atol=1e-15)

    def test_raw_array_accepted(self):
        m = np.arange(16.0).reshape(4, 4)
        pt = partial_transpose(m)
        ref = m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
        np.testing.assert_array_equal(pt, ref)

    def test_wrong_shape_rejected(self):
        with pytest.raises(ValueError):
            partial_transpose(np.eye(2))


class TestPurity:
    def test_maximally_mixed_qubit(self):
        assert purity(QubitState(np.eye(2) / 2.0)) == pytest.approx(0.5)

    def test_basis_projector(self):
        assert purity(QubitState(np.diag([1.0, 0.0]))) == pytest.approx(1.0)

    def test_singlet_is_pure(self):
        assert purity(from_t_vector(-1, -1, -1)) == pytest.approx(1.0, abs=1e-12)

    @given(p=st.floats(min_value=0.0, max_value=1.0))
    def test_mixture_range(self, p):
        rho = QubitState(np.diag([p, 1.0 - p]))
        value = purity(rho)
        assert 0.5 - 1e-12 <= value <= 1.0 + 1e-12


def test_correlation_data_plain_fields():
    data = CorrelationData(r=np.zeros(3), s=np.zeros(3), t=np.diag([0.1, 0.2, 0.3]))
    m = hs_reconstruct(data)
    np.testing.assert_allclose(m, from_t_vector(0.1, 0.2, 0.3).matrix, atol=1e-15)
