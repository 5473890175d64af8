"""Separability toolkit for two-qubit states with zero local Bloch vectors.

Classify states as separable or entangled from the closed-form spectrum of
the partial transpose, build explicit pure-product decompositions for
separable states, and reduce arbitrary zero-Bloch-vector states to
diagonal correlation form via local unitaries.  Eigenvalues come from an
in-tree cyclic Jacobi solver with a compiled core and a pure-Python
fallback; see :func:`kernel_backend`.
"""

from . import kernels
from .canonicalize import (
    CanonicalForm,
    canonical_form,
    classify_general,
    so3_to_su2,
    transport_decomposition,
)
from .errors import (
    BellsepError,
    ConvergenceError,
    InvalidDecompositionError,
    InvalidStateError,
    NotSeparableError,
    OutOfRegimeError,
    ParseError,
)
from .linalg import (
    frobenius_distance,
    hermitian_eigensystem,
    hermitian_eigenvalues,
    kron,
    svd3,
)
from .qstate import (
    CorrelationData,
    DensityMatrix,
    QubitState,
    from_t_vector,
    hs_decompose,
    hs_reconstruct,
    partial_transpose,
    pauli,
    purity,
)
from .separability import (
    CASE_A,
    CASE_B,
    DEGENERATE,
    STRONG,
    WEAK,
    Decomposition,
    ProductTerm,
    Verdict,
    build_s_matrix,
    case_b_sufficient_check,
    classify,
    pt_spectrum_closed_form,
    separable_decomposition,
    strength,
    verify_decomposition,
)
from .serialize import Report

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active eigensolver backend: "compiled" or "python"."""
    return kernels.active_name()


__all__ = [
    "BellsepError",
    "CASE_A",
    "CASE_B",
    "CanonicalForm",
    "ConvergenceError",
    "CorrelationData",
    "DEGENERATE",
    "Decomposition",
    "DensityMatrix",
    "InvalidDecompositionError",
    "InvalidStateError",
    "NotSeparableError",
    "OutOfRegimeError",
    "ParseError",
    "ProductTerm",
    "QubitState",
    "Report",
    "STRONG",
    "Verdict",
    "WEAK",
    "build_s_matrix",
    "canonical_form",
    "case_b_sufficient_check",
    "classify",
    "classify_general",
    "frobenius_distance",
    "from_t_vector",
    "hermitian_eigensystem",
    "hermitian_eigenvalues",
    "hs_decompose",
    "hs_reconstruct",
    "kernel_backend",
    "kernels",
    "kron",
    "partial_transpose",
    "pauli",
    "pt_spectrum_closed_form",
    "purity",
    "separable_decomposition",
    "so3_to_su2",
    "strength",
    "svd3",
    "transport_decomposition",
    "verify_decomposition",
]
