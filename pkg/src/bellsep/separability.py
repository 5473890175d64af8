"""Separability classification and explicit pure-product decompositions.

For a Bell-diagonal two-qubit state with correlation values (t1, t2, t3) the
partial-transpose spectrum is available in closed form, entanglement is
decided by |t1| + |t2| + |t3| > 1, and every separable state admits an
explicit convex mixture of pure product states: paired projectors onto
sigma_i eigenstates with weight |t_i|/2 each, plus the identity remainder
spread over the four computational-basis products.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidDecompositionError, NotSeparableError
from .linalg import frobenius_distance, kron
from .qstate import DensityMatrix, QubitState, from_t_vector, pauli, purity
from .tolerances import (
    PURITY_TOL,
    REMAINDER_DROP_TOL,
    SEPARABILITY_TOL,
    WEIGHT_SUM_TOL,
)

CASE_A = "A"  # sign(t1 t2 t3) = -1
CASE_B = "B"  # sign(t1 t2 t3) = +1
DEGENERATE = "degenerate"  # some t_i = 0

STRONG = "Strong"
WEAK = "Weak"

# Sign pattern of the magnitude-ordered (t1, t2, t3) -> (condition label,
# index of the minimal closed-form eigenvalue in that ordered frame).
_CONDITIONS = {
    CASE_A: {
        (-1, -1, -1): ("a", 4),
        (1, 1, -1): ("b", 3),
        (1, -1, 1): ("c", 2),
        (-1, 1, 1): ("d", 1),
    },
    CASE_B: {
        (1, 1, 1): ("a", 3),
        (-1, -1, 1): ("b", 4),
        (-1, 1, -1): ("c", 1),
        (1, -1, -1): ("d", 2),
    },
}


@dataclass(frozen=True, eq=False)
class Verdict:
    """Classification record for one state.

    Attributes
    ----------
    separable : bool
        True when |t1| + |t2| + |t3| <= 1 (boundary tolerance 1e-12).
    pt_spectrum : numpy.ndarray
        Closed-form partial-transpose eigenvalues, ascending.
    min_eigenvalue : float
        The eigenvalue singled out by ``min_condition``; equals
        ``pt_spectrum[0]``.
    sign_case : str
        "A", "B" or "degenerate" by the sign of t1 t2 t3.
    min_condition : str
        Which sign-pattern condition ("A.a" .. "B.d") attains the minimal
        eigenvalue after reordering by descending magnitude, or
        "degenerate".
    margin : float
        1 - (|t1| + |t2| + |t3|); nonnegative exactly for separable states.
    magnitude_order : tuple
        Permutation p with |t[p[0]]| >= |t[p[1]]| >= |t[p[2]]| (0-based),
        recording the reordering the condition labels refer to.
    """

    separable: bool
    pt_spectrum: np.ndarray
    min_eigenvalue: float
    sign_case: str
    min_condition: str
    margin: float
    magnitude_order: tuple

    def __post_init__(self):
        spectrum = np.asarray(self.pt_spectrum, dtype=np.float64).reshape(4).copy()
        spectrum.setflags(write=False)
        object.__setattr__(self, "pt_spectrum", spectrum)
        object.__setattr__(
            self, "magnitude_order", tuple(int(i) for i in self.magnitude_order)
        )


@dataclass(frozen=True, eq=False)
class ProductTerm:
    weight: float
    a: QubitState
    b: QubitState

    def __post_init__(self):
        object.__setattr__(self, "weight", float(self.weight))
        for factor in (self.a, self.b):
            if not isinstance(factor, QubitState):
                raise InvalidDecompositionError(
                    f"term factors must be qubit states, got {type(factor).__name__}"
                )


@dataclass(frozen=True, eq=False)
class Decomposition:
    """Convex mixture sum_j w_j a_j (x) b_j of product states."""

    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        for term in self.terms:
            if not term.weight >= 0.0:
                raise InvalidDecompositionError(f"negative weight {term.weight!r}")
        total = sum(term.weight for term in self.terms)
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise InvalidDecompositionError(f"weights sum to {total!r}, expected 1")

    def reconstruct(self) -> np.ndarray:
        """The 4x4 matrix sum_j w_j a_j (x) b_j."""
        m = np.zeros((4, 4), dtype=np.complex128)
        for term in self.terms:
            m += term.weight * kron(term.a.matrix, term.b.matrix)
        return m


def _t3(t) -> np.ndarray:
    a = np.asarray(t, dtype=np.float64).reshape(3)
    if not np.all(np.isfinite(a)):
        raise ValueError("correlation values must be finite")
    return a


def _pt_eigenvalues(t: np.ndarray) -> np.ndarray:
    """Closed-form PT eigenvalues in fixed index order (lambda_1..lambda_4)."""
    t1, t2, t3 = t
    return np.array(
        [
            (1.0 + t1 - t2 - t3) / 4.0,
            (1.0 - t1 + t2 - t3) / 4.0,
            (1.0 - t1 - t2 + t3) / 4.0,
            (1.0 + t1 + t2 + t3) / 4.0,
        ]
    )


def pt_spectrum_closed_form(t) -> np.ndarray:
    """Partial-transpose eigenvalues {1 +/- t1 +/- t2 +/- t3}/4, ascending.

    The four sign patterns are the ones with an even number of minus signs.
    Valid for any real t; agrees with the numeric eigenvalues of the
    partially transposed state whenever t describes a valid state.
    """
    return np.sort(_pt_eigenvalues(_t3(t)))


def classify(t, validate: bool = True) -> Verdict:
    """Classify a Bell-diagonal state as separable or entangled.

    Parameters
    ----------
    t : array_like
        The three correlation values.
    validate : bool
        When True (default) the state matrix is constructed and checked for
        positivity first.  Pass False for formula-level studies of t outside
        the physical tetrahedron.
    """
    t = _t3(t)
    if validate:
        from_t_vector(*t)

    lam = _pt_eigenvalues(t)
    spectrum = np.sort(lam)
    margin = 1.0 - float(np.sum(np.abs(t)))
    separable = margin >= -SEPARABILITY_TOL

    order = tuple(int(i) for i in np.argsort(-np.abs(t), kind="stable"))
    signs = tuple(int(np.sign(t[i])) for i in order)
    product_sign = signs[0] * signs[1] * signs[2]

    if 0 in signs:
        sign_case = DEGENERATE
        condition = DEGENERATE
        min_eigenvalue = float(spectrum[0])
    else:
        sign_case = CASE_A if product_sign < 0 else CASE_B
        label, ordered_index = _CONDITIONS[sign_case][signs]
        condition = f"{sign_case}.{label}"
        # Map the eigenvalue index from the magnitude-ordered frame back to
        # the original frame: exchanging t_i and t_j exchanges lambda_i and
        # lambda_j while lambda_4 is fixed.
        original_index = 4 if ordered_index == 4 else order[ordered_index - 1] + 1
        min_eigenvalue = float(lam[original_index - 1])

    return Verdict(
        separable=separable,
        pt_spectrum=spectrum,
        min_eigenvalue=min_eigenvalue,
        sign_case=sign_case,
        min_condition=condition,
        margin=margin,
        magnitude_order=order,
    )


def case_b_sufficient_check(t) -> bool:
    """Whether |t1| + |t2| - |t3| > 1 after reordering to descending magnitude.

    A sufficient (not necessary) entanglement condition for sign case B;
    whenever it holds, classification reports entangled.  Raises ValueError
    unless sign(t1 t2 t3) = +1.
    """
    t = _t3(t)
    if float(np.prod(np.sign(t))) != 1.0:
        raise ValueError("check applies to sign case B only (t1 t2 t3 > 0)")
    m = np.sort(np.abs(t))[::-1]
    return bool(m[0] + m[1] - m[2] > 1.0)


def build_s_matrix(t) -> np.ndarray:
    """4 S = sum_i t_i sigma_i (x) sigma_i + (|t1| + |t2| + |t3|) I (x) I.

    Subtracting 4 S from four times the Bell-diagonal state leaves
    (1 - |t1| - |t2| - |t3|) I (x) I, so S carries all correlations.
    """
    t = _t3(t)
    m = float(np.sum(np.abs(t))) * np.eye(4, dtype=np.complex128)
    for i in (1, 2, 3):
        m += t[i - 1] * kron(pauli(i), pauli(i))
    return m


def separable_decomposition(t) -> Decomposition:
    """Explicit convex mixture of pure product states for a separable state.

    For each nonzero t_i the mixture gets the projector pair
    (I -/+ sigma_i)/2 (x) (I -/+ sign(t_i) sigma_i)/2, weight |t_i|/2 each;
    the remaining mass 1 - |t1| - |t2| - |t3| is spread over the four
    computational-basis products |a><a| (x) |b><b| with equal weights.  The
    same pairing covers both sign cases.  At most 6 + 4 terms.

    Raises
    ------
    NotSeparableError
        If |t1| + |t2| + |t3| > 1: a mixture would need negative weight.
    InvalidStateError
        If t lies outside the tetrahedron of valid states.
    """
    t = _t3(t)
    margin = 1.0 - float(np.sum(np.abs(t)))
    if margin < -SEPARABILITY_TOL:
        raise NotSeparableError(
            f"state is entangled: |t1|+|t2|+|t3| exceeds 1 by {-margin:.6g}",
            margin=margin,
        )
    from_t_vector(*t)

    eye = pauli(0)
    terms = []
    for i in (1, 2, 3):
        ti = float(t[i - 1])
        if ti == 0.0:
            continue
        sign = 1.0 if ti > 0.0 else -1.0
        weight = abs(ti) / 2.0
        for direction in (-1.0, 1.0):
            a = QubitState((eye + direction * pauli(i)) / 2.0)
            b = QubitState((eye + direction * sign * pauli(i)) / 2.0)
            terms.append(ProductTerm(weight=weight, a=a, b=b))

    if margin > REMAINDER_DROP_TOL:
        for a_bit in (0, 1):
            for b_bit in (0, 1):
                a = QubitState(np.diag([1.0 - a_bit, float(a_bit)]).astype(complex))
                b = QubitState(np.diag([1.0 - b_bit, float(b_bit)]).astype(complex))
                terms.append(ProductTerm(weight=margin / 4.0, a=a, b=b))

    return Decomposition(terms=tuple(terms))


def strength(d: Decomposition) -> str:
    """"Strong" when every factor of every term is pure, else "Weak"."""
    for term in d.terms:
        if purity(term.a) < 1.0 - PURITY_TOL or purity(term.b) < 1.0 - PURITY_TOL:
            return WEAK
    return STRONG


def verify_decomposition(d: Decomposition, rho: DensityMatrix) -> float:
    """Frobenius distance between the mixture's reconstruction and rho."""
    return frobenius_distance(d.reconstruct(), rho.matrix)
