"""Reduce zero-Bloch-vector two-qubit states to diagonal correlation form.

Any two-qubit density matrix whose local Bloch vectors vanish is fixed, up
to local unitaries, by its 3x3 correlation matrix T.  Factoring
T = rot_a . diag(t) . rot_b^T with proper rotations and lifting those
rotations through the SU(2) -> SO(3) double cover produces a pair of qubit
unitaries that rotate the state into the diagonal (t1, t2, t3) family the
separability engine handles.  Sign flips absorbed into t3 keep both
rotation factors proper, so t entries may be negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import OutOfRegimeError
from .linalg import svd3
from .qstate import DensityMatrix, QubitState, hs_decompose
from .separability import Decomposition, ProductTerm, Verdict, classify
from .tolerances import BLOCH_ZERO_TOL, ORTHOGONALITY_TOL


def _det3(m: np.ndarray) -> float:
    return float(np.dot(m[:, 0], np.cross(m[:, 1], m[:, 2])))


def _check_rotation(m, name: str) -> np.ndarray:
    m = np.asarray(m, dtype=np.float64)
    if m.shape != (3, 3):
        raise ValueError(f"{name} must be 3x3, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    residual = float(np.linalg.norm(m.T @ m - np.eye(3)))
    if residual > ORTHOGONALITY_TOL:
        raise ValueError(f"{name} is not orthogonal (residual {residual:.3e})")
    det = _det3(m)
    if abs(det - 1.0) > ORTHOGONALITY_TOL:
        raise ValueError(f"{name} is not a proper rotation (det {det:.17g})")
    return m


def _check_unitary(m, name: str) -> np.ndarray:
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (2, 2):
        raise ValueError(f"{name} must be 2x2, got shape {m.shape}")
    residual = float(np.linalg.norm(m.conj().T @ m - np.eye(2)))
    if residual > ORTHOGONALITY_TOL:
        raise ValueError(f"{name} is not unitary (residual {residual:.3e})")
    return m


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    """Diagonalizing data for a zero-Bloch-vector state.

    ``t`` holds the signed diagonal correlation values; ``rot_a`` and
    ``rot_b`` are proper rotations with T = rot_a . diag(t) . rot_b^T;
    ``u_a`` and ``u_b`` are their qubit-unitary lifts, so conjugating the
    source state by u_a (x) u_b yields the state with correlation matrix
    diag(t).
    """

    t: np.ndarray
    rot_a: np.ndarray
    rot_b: np.ndarray
    u_a: np.ndarray
    u_b: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.t, dtype=np.float64).reshape(3).copy()
        if not np.all(np.isfinite(t)):
            raise ValueError("t has non-finite entries")
        rot_a = _check_rotation(self.rot_a, "rot_a").copy()
        rot_b = _check_rotation(self.rot_b, "rot_b").copy()
        u_a = _check_unitary(self.u_a, "u_a").copy()
        u_b = _check_unitary(self.u_b, "u_b").copy()
        for name, value in (
            ("t", t),
            ("rot_a", rot_a),
            ("rot_b", rot_b),
            ("u_a", u_a),
            ("u_b", u_b),
        ):
            value.setflags(write=False)
            object.__setattr__(self, name, value)


def _quaternion_from_rotation(r: np.ndarray) -> np.ndarray:
    """Unit quaternion (q0, q1, q2, q3) of a proper rotation matrix.

    Branches on the largest of the four squared components so every
    division is by a number >= 1, keeping the extraction stable for
    rotations near pi as well as near identity.
    """
    trace = r[0, 0] + r[1, 1] + r[2, 2]
    seeds = (trace, r[0, 0], r[1, 1], r[2, 2])
    k = int(np.argmax(seeds))
    if k == 0:
        w = math.sqrt(1.0 + trace)
        q = np.array(
            [
                0.5 * w,
                0.5 * (r[2, 1] - r[1, 2]) / w,
                0.5 * (r[0, 2] - r[2, 0]) / w,
                0.5 * (r[1, 0] - r[0, 1]) / w,
            ]
        )
    elif k == 1:
        w = math.sqrt(1.0 + r[0, 0] - r[1, 1] - r[2, 2])
        q = np.array(
            [
                0.5 * (r[2, 1] - r[1, 2]) / w,
                0.5 * w,
                0.5 * (r[0, 1] + r[1, 0]) / w,
                0.5 * (r[0, 2] + r[2, 0]) / w,
            ]
        )
    elif k == 2:
        w = math.sqrt(1.0 - r[0, 0] + r[1, 1] - r[2, 2])
        q = np.array(
            [
                0.5 * (r[0, 2] - r[2, 0]) / w,
                0.5 * (r[0, 1] + r[1, 0]) / w,
                0.5 * w,
                0.5 * (r[1, 2] + r[2, 1]) / w,
            ]
        )
    else:
        w = math.sqrt(1.0 - r[0, 0] - r[1, 1] + r[2, 2])
        q = np.array(
            [
                0.5 * (r[1, 0] - r[0, 1]) / w,
                0.5 * (r[0, 2] + r[2, 0]) / w,
                0.5 * (r[1, 2] + r[2, 1]) / w,
                0.5 * w,
            ]
        )
    return q / np.linalg.norm(q)


def so3_to_su2(r) -> np.ndarray:
    """Lift a proper rotation to a qubit unitary through the double cover.

    The returned u satisfies u sigma_i u^dagger = sum_j r[j, i] sigma_j.
    Both u and -u do; the sign is fixed deterministically by making the
    largest-magnitude quaternion component positive.

    Raises ValueError when r is not orthogonal with determinant +1 within
    1e-10.
    """
    r = _check_rotation(r, "rotation")
    q = _quaternion_from_rotation(r)
    if q[int(np.argmax(np.abs(q)))] < 0.0:
        q = -q
    q0, q1, q2, q3 = q
    return np.array(
        [
            [q0 - 1j * q3, -q2 - 1j * q1],
            [q2 - 1j * q1, q0 + 1j * q3],
        ]
    )


def canonical_form(rho: DensityMatrix) -> CanonicalForm:
    """Diagonalize the correlation matrix of a zero-Bloch-vector state.

    Factors T = rot_a . diag(t) . rot_b^T.  Improper factors from the
    underlying SVD are repaired by flipping their third column, negating t3
    once per flip, so both returned rotations are proper and any net sign
    lives in t3.  Rank-deficient T is fine.

    Raises OutOfRegimeError when either local Bloch vector has norm above
    1e-9: such states are not locally equivalent to any diagonal-correlation
    state and no decomposition is attempted.
    """
    data = hs_decompose(rho)
    for name, vec in (("A", data.r), ("B", data.s)):
        norm = float(np.linalg.norm(vec))
        if norm > BLOCH_ZERO_TOL:
            raise OutOfRegimeError(
                f"local Bloch vector of qubit {name} has norm {norm:.3e}; "
                "diagonal reduction requires both to vanish"
            )
    u, s, v = svd3(data.t)
    t = s.copy()
    rot_a = u.copy()
    rot_b = v.copy()
    if _det3(rot_a) < 0.0:
        rot_a[:, 2] = -rot_a[:, 2]
        t[2] = -t[2]
    if _det3(rot_b) < 0.0:
        rot_b[:, 2] = -rot_b[:, 2]
        t[2] = -t[2]
    return CanonicalForm(
        t=t,
        rot_a=rot_a,
        rot_b=rot_b,
        u_a=so3_to_su2(rot_a.T),
        u_b=so3_to_su2(rot_b.T),
    )


def classify_general(rho: DensityMatrix) -> Verdict:
    """Classify any zero-Bloch-vector state via its canonical form.

    The verdict is invariant under local unitaries applied to the input;
    individual entries of the canonical t are not (only their magnitudes as
    a multiset, up to paired sign flips).
    """
    return classify(canonical_form(rho).t)


def transport_decomposition(d: Decomposition, form: CanonicalForm) -> Decomposition:
    """Carry a decomposition of the canonical state back to the source state.

    Conjugates every factor by the inverse lifts, so if d reconstructs the
    canonical state then the result reconstructs the state canonical_form
    was computed from.  Weights and factor purities are unchanged.
    """
    ua, ub = form.u_a, form.u_b
    terms = tuple(
        ProductTerm(
            weight=term.weight,
            a=QubitState(ua.conj().T @ term.a.matrix @ ua),
            b=QubitState(ub.conj().T @ term.b.matrix @ ub),
        )
        for term in d.terms
    )
    return Decomposition(terms=terms)
