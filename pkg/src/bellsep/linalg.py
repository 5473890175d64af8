"""Dense linear algebra for the 2x2 / 3x3 / 4x4 matrices this package handles.

Eigenvalues come from the package's own cyclic Jacobi kernel (compiled or
pure Python, see ``bellsep.kernels``) so that the numeric route stays
independent of the closed-form spectra it is used to cross-check.  The 3x3
SVD is built on that kernel via the eigendecomposition of ``m^T m``.
"""

from __future__ import annotations

import numpy as np

from . import kernels
from .tolerances import (
    HERMITICITY_TOL,
    JACOBI_MAX_SWEEPS,
    JACOBI_REL_TOL,
)

_ALLOWED_DIMS = (2, 3, 4)


def _as_square(m, name: str) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    if a.shape[0] not in _ALLOWED_DIMS:
        raise ValueError(f"{name} must be 2x2, 3x3 or 4x4, got {a.shape[0]}x{a.shape[0]}")
    if not (np.all(np.isfinite(a.real)) and np.all(np.isfinite(a.imag))):
        raise ValueError(f"{name} has non-finite entries")
    return a


def kron(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 matrices; block (i, j) is a[i, j] * b."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"kron expects 2x2 factors, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def frobenius_distance(a, b) -> float:
    """sqrt(sum |a_ij - b_ij|^2) for same-shaped matrices."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return float(np.linalg.norm(a - b))


def hermitian_eigenvalues(h) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, ascending.

    Parameters
    ----------
    h : array_like
        2x2, 3x3 or 4x4 matrix with ``max |h - h^dagger|`` at most 1e-9.

    Returns
    -------
    numpy.ndarray
        Eigenvalues sorted ascending; their sum matches the trace to 1e-10.

    Raises
    ------
    ValueError
        If the matrix is not Hermitian within tolerance.
    ConvergenceError
        If the Jacobi sweeps do not converge within the cap (100 sweeps at
        relative off-diagonal tolerance 1e-13).
    """
    H = _hermitian_part(h)
    w, _ = kernels.active().jacobi_eigvalsh(H, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)
    return w


def hermitian_eigensystem(h) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending) and unitary eigenvector columns of Hermitian h."""
    H = _hermitian_part(h)
    w, v, _ = kernels.active().jacobi_eigh(H, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)
    return w, v


def _hermitian_part(h) -> np.ndarray:
    H = _as_square(h, "matrix")
    dev = np.max(np.abs(H - H.conj().T))
    if dev > HERMITICITY_TOL:
        raise ValueError(f"matrix is not Hermitian: max |H - H^dagger| = {dev:.3e}")
    return (H + H.conj().T) / 2.0


def svd3(m) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Singular value decomposition of a real 3x3 matrix.

    Returns ``(u, sigma, v)`` with ``m = u @ diag(sigma) @ v.T`` to 1e-10,
    ``u`` and ``v`` orthogonal, and ``sigma`` nonnegative descending.
    Computed from the Jacobi eigendecomposition of ``m.T @ m``; left vectors
    for negligible singular values are completed by cross products, keeping
    ``u`` exactly orthonormal for rank-deficient input.
    """
    if np.iscomplexobj(m):
        raise ValueError("svd3 expects a real matrix")
    a = np.asarray(m, dtype=np.float64)
    if a.shape != (3, 3):
        raise ValueError(f"svd3 expects a 3x3 real matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("svd3 input has non-finite entries")

    w, vec = hermitian_eigensystem(a.T @ a)
    v = vec.real[:, ::-1]  # descending by eigenvalue

    y = a @ v
    s = np.linalg.norm(y, axis=0)
    order = np.argsort(-s, kind="stable")
    v = v[:, order]
    y = y[:, order]
    s = s[order]

    if s[0] == 0.0:
        return np.eye(3), np.zeros(3), np.eye(3)
    tiny = 1e-13 * s[0]

    u = np.empty((3, 3))
    u[:, 0] = y[:, 0] / s[0]
    if s[1] > tiny:
        c1 = y[:, 1] - (u[:, 0] @ y[:, 1]) * u[:, 0]
        u[:, 1] = c1 / np.linalg.norm(c1)
    else:
        k = int(np.argmin(np.abs(u[:, 0])))
        c1 = np.zeros(3)
        c1[k] = 1.0
        c1 -= (u[:, 0] @ c1) * u[:, 0]
        u[:, 1] = c1 / np.linalg.norm(c1)
    u[:, 2] = np.cross(u[:, 0], u[:, 1])
    if s[2] > tiny and y[:, 2] @ u[:, 2] < 0.0:
        u[:, 2] = -u[:, 2]
    return u, s, v
