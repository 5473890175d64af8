# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled cyclic Jacobi eigensolver; twin of ``_pykernels`` (same contract)."""

import numpy as np

from libc.math cimport sqrt

from ..errors import ConvergenceError

BACKEND_NAME = "compiled"


cdef double _offdiag_norm(double complex[:, :] a, Py_ssize_t n) noexcept:
    cdef double s = 0.0
    cdef Py_ssize_t p, q
    cdef double complex x
    for p in range(n):
        for q in range(p + 1, n):
            x = a[p, q]
            s += x.real * x.real + x.imag * x.imag
    return sqrt(2.0 * s)


def _jacobi(h, bint compute_vectors, double rel_tol, int max_sweeps):
    H = np.array(h, dtype=np.complex128, order="C", copy=True)
    cdef Py_ssize_t n = H.shape[0]
    V = np.eye(n, dtype=np.complex128)
    cdef double complex[:, :] a = H
    cdef double complex[:, :] v = V

    cdef double fro = 0.0
    cdef Py_ssize_t i, j, k, p, q
    cdef double complex x
    for i in range(n):
        for j in range(n):
            x = a[i, j]
            fro += x.real * x.real + x.imag * x.imag
    fro = sqrt(fro)
    if fro == 0.0:
        return np.zeros(n), V, 0

    cdef double threshold = rel_tol * fro
    cdef double skip = threshold / (n * n)
    cdef int sweeps = 0
    cdef double b, tau, t, c, s
    cdef double complex apq, ph, phc, rp, rq, cp, cq, vp, vq

    while _offdiag_norm(a, n) > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                b = sqrt(apq.real * apq.real + apq.imag * apq.imag)
                if b <= skip:
                    continue
                tau = (a[q, q].real - a[p, p].real) / (2.0 * b)
                if tau >= 0.0:
                    t = -1.0 / (tau + sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + sqrt(1.0 + tau * tau))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                ph = apq / b
                phc = ph.conjugate()
                for k in range(n):  # rows p, q
                    rp = a[p, k]
                    rq = a[q, k]
                    a[p, k] = c * rp + s * ph * rq
                    a[q, k] = -s * rp + c * ph * rq
                for k in range(n):  # columns p, q
                    cp = a[k, p]
                    cq = a[k, q]
                    a[k, p] = c * cp + s * phc * cq
                    a[k, q] = -s * cp + c * phc * cq
                if compute_vectors:
                    for k in range(n):
                        vp = v[k, p]
                        vq = v[k, q]
                        v[k, p] = c * vp + s * phc * vq
                        v[k, q] = -s * vp + c * phc * vq

    w = np.empty(n)
    for i in range(n):
        w[i] = a[i, i].real
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order], sweeps


def jacobi_eigh(h, double rel_tol, int max_sweeps):
    """Eigenvalues (ascending) and unitary eigenvector columns of Hermitian h."""
    return _jacobi(h, True, rel_tol, max_sweeps)


def jacobi_eigvalsh(h, double rel_tol, int max_sweeps):
    """Eigenvalues only; skips eigenvector accumulation."""
    w, _, sweeps = _jacobi(h, False, rel_tol, max_sweeps)
    return w, sweeps
