"""Pure-Python cyclic Jacobi eigensolver for small complex Hermitian matrices.

Fallback twin of the compiled kernel in ``_ckernels.pyx``; both expose the
same two functions with identical semantics.  The rotation that annihilates
entry (p, q) is the product of a phase on index q and a real Givens rotation,
with the small-angle root chosen for convergence of the cyclic sweep order.
"""

import math

import numpy as np

from ..errors import ConvergenceError

BACKEND_NAME = "python"


def _offdiag_norm(a, n):
    s = 0.0
    for p in range(n):
        for q in range(p + 1, n):
            x = a[p][q]
            s += x.real * x.real + x.imag * x.imag
    return math.sqrt(2.0 * s)


def _jacobi(h, compute_vectors, rel_tol, max_sweeps):
    H = np.asarray(h, dtype=np.complex128)
    n = H.shape[0]
    a = [[complex(H[i, j]) for j in range(n)] for i in range(n)]
    v = [[1.0 + 0.0j if i == j else 0.0 + 0.0j for j in range(n)] for i in range(n)]

    fro = math.sqrt(sum(abs(a[i][j]) ** 2 for i in range(n) for j in range(n)))
    if fro == 0.0:
        return np.zeros(n), np.eye(n, dtype=np.complex128), 0

    threshold = rel_tol * fro
    skip = threshold / (n * n)
    sweeps = 0
    while _offdiag_norm(a, n) > threshold:
        if sweeps >= max_sweeps:
            raise ConvergenceError(
                f"Jacobi eigensolver did not converge in {max_sweeps} sweeps"
            )
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                b = abs(apq)
                if b <= skip:
                    continue
                tau = (a[q][q].real - a[p][p].real) / (2.0 * b)
                if tau >= 0.0:
                    t = -1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                ph = apq / b
                phc = ph.conjugate()
                for k in range(n):  # rows p, q
                    rp = a[p][k]
                    rq = a[q][k]
                    a[p][k] = c * rp + s * ph * rq
                    a[q][k] = -s * rp + c * ph * rq
                for k in range(n):  # columns p, q
                    cp = a[k][p]
                    cq = a[k][q]
                    a[k][p] = c * cp + s * phc * cq
                    a[k][q] = -s * cp + c * phc * cq
                if compute_vectors:
                    for k in range(n):
                        vp = v[k][p]
                        vq = v[k][q]
                        v[k][p] = c * vp + s * phc * vq
                        v[k][q] = -s * vp + c * phc * vq

    w = np.array([a[i][i].real for i in range(n)])
    order = np.argsort(w, kind="stable")
    vecs = np.array(v, dtype=np.complex128)[:, order]
    return w[order], vecs, sweeps


def jacobi_eigh(h, rel_tol, max_sweeps):
    """Eigenvalues (ascending) and unitary eigenvector columns of Hermitian h."""
    w, vecs, sweeps = _jacobi(h, True, rel_tol, max_sweeps)
    return w, vecs, sweeps


def jacobi_eigvalsh(h, rel_tol, max_sweeps):
    """Eigenvalues only; skips eigenvector accumulation."""
    w, _, sweeps = _jacobi(h, False, rel_tol, max_sweeps)
    return w, sweeps
