"""Two-qubit density matrices, Pauli algebra and the Hilbert-Schmidt picture.

Basis order is fixed as |00>, |01>, |10>, |11> with qubit A the high-order
factor; the partial transpose acts on qubit B.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidStateError
from .linalg import hermitian_eigenvalues, kron
from .tolerances import HERMITICITY_TOL, PSD_SLACK, TRACE_TOL

_PAULI = (
    np.eye(2, dtype=np.complex128),
    np.array([[0, 1], [1, 0]], dtype=np.complex128),
    np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    np.array([[1, 0], [0, -1]], dtype=np.complex128),
)
for _p in _PAULI:
    _p.setflags(write=False)

# sigma_m (x) sigma_n for m, n in 0..3; index 0 is the identity.
_PAULI_KRON = tuple(tuple(kron(_PAULI[m], _PAULI[n]) for n in range(4)) for m in range(4))
for _row in _PAULI_KRON:
    for _k in _row:
        _k.setflags(write=False)


def pauli(i: int) -> np.ndarray:
    """Pauli matrix sigma_i (sigma_1 = x, sigma_2 = y, sigma_3 = z); index 0 is I."""
    if i not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be 0..3, got {i!r}")
    return _PAULI[i]


def _validate_state_matrix(m, dim: int, name: str) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.shape != (dim, dim):
        raise InvalidStateError(f"{name} must be {dim}x{dim}, got shape {a.shape}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise InvalidStateError(f"{name} has non-finite entries")
    dev = np.max(np.abs(a - a.conj().T))
    if dev > HERMITICITY_TOL:
        raise InvalidStateError(f"{name} is not Hermitian: max deviation {dev:.3e}")
    tr = np.trace(a)
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"{name} trace is {tr:.12g}, expected 1")
    a = (a + a.conj().T) / 2.0
    lo = hermitian_eigenvalues(a)[0]
    if lo < -PSD_SLACK:
        raise InvalidStateError(f"{name} is not positive semidefinite: eigenvalue {lo:.6e}")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated 4x4 two-qubit state: Hermitian, unit trace, PSD within slack."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", _validate_state_matrix(self.matrix, 4, "density matrix")
        )


@dataclass(frozen=True, eq=False)
class QubitState:
    """Validated 2x2 single-qubit state."""

    matrix: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, "matrix", _validate_state_matrix(self.matrix, 2, "qubit state")
        )


@dataclass(frozen=True, eq=False)
class CorrelationData:
    """Bloch vectors r (qubit A), s (qubit B) and the 3x3 correlation matrix t."""

    r: np.ndarray
    s: np.ndarray
    t: np.ndarray


def from_t_vector(t1: float, t2: float, t3: float) -> DensityMatrix:
    """Bell-diagonal state (1/4)(I (x) I + sum_i t_i sigma_i (x) sigma_i).

    In the standard basis the matrix has diagonal (1 +/- t3)/4, outer
    anti-diagonal corners (t1 - t2)/4 and inner anti-diagonal (t1 + t2)/4.

    Raises
    ------
    InvalidStateError
        If (t1, t2, t3) lies outside the tetrahedron of valid states; the
        message names the offending eigenvalue.
    """
    t = np.array([t1, t2, t3], dtype=np.float64)
    if not np.all(np.isfinite(t)):
        raise InvalidStateError("correlation values must be finite")
    m = np.eye(4, dtype=np.complex128)
    for i in (1, 2, 3):
        m += t[i - 1] * _PAULI_KRON[i][i]
    return DensityMatrix(m / 4.0)


def hs_decompose(rho: DensityMatrix) -> CorrelationData:
    """Pauli-basis expansion coefficients of a two-qubit state.

    r_m = Tr(rho sigma_m (x) I), s_n = Tr(rho I (x) sigma_n) and
    t_mn = Tr(rho sigma_m (x) sigma_n); the state reconstructs as
    (1/4)(I (x) I + r . sigma (x) I + I (x) s . sigma + sum t_mn
    sigma_m (x) sigma_n).
    """
    m = rho.matrix
    r = np.array([np.trace(m @ _PAULI_KRON[i][0]).real for i in (1, 2, 3)])
    s = np.array([np.trace(m @ _PAULI_KRON[0][i]).real for i in (1, 2, 3)])
    t = np.array(
        [[np.trace(m @ _PAULI_KRON[i][j]).real for j in (1, 2, 3)] for i in (1, 2, 3)]
    )
    return CorrelationData(r=r, s=s, t=t)


def hs_reconstruct(data: CorrelationData) -> np.ndarray:
    """Inverse of :func:`hs_decompose`; returns the (unvalidated) 4x4 matrix."""
    m = np.eye(4, dtype=np.complex128)
    for i in (1, 2, 3):
        m += data.r[i - 1] * _PAULI_KRON[i][0]
        m += data.s[i - 1] * _PAULI_KRON[0][i]
        for j in (1, 2, 3):
            m += data.t[i - 1, j - 1] * _PAULI_KRON[i][j]
    return m / 4.0


def partial_transpose(rho) -> np.ndarray:
    """Transpose on qubit B: entry (2a+b, 2a'+b') moves to (2a+b', 2a'+b).

    Accepts a :class:`DensityMatrix` or a raw 4x4 array (Hermitian input is
    not required, so formula-level matrices work too).  The result keeps the
    trace but need not be positive; its negative eigenvalues certify
    entanglement.
    """
    m = rho.matrix if hasattr(rho, "matrix") else np.asarray(rho, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4).copy()


def purity(state) -> float:
    """Tr(rho^2); equals 1 for pure states, 1/d for the maximally mixed state."""
    m = state.matrix if hasattr(state, "matrix") else np.asarray(state, dtype=np.complex128)
    return float(np.trace(m @ m).real)
