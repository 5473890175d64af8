"""JSON record formats for states, verdicts, decompositions and reports.

One record per line.  Complex matrices travel as row-major lists of
[re, im] pairs (16 pairs for a 4x4, 4 for a 2x2), real matrices as
row-major float lists.  Floats use the shortest representation that parses
back to the identical value, so every serialize/parse round trip is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .canonicalize import CanonicalForm
from .errors import InvalidDecompositionError, InvalidStateError, ParseError
from .qstate import DensityMatrix, QubitState
from .separability import Decomposition, ProductTerm, Verdict


def dump_record(record: dict) -> str:
    """One-line JSON text for a record; deterministic for equal content."""
    return json.dumps(record, allow_nan=False)


def load_record(text: str) -> dict:
    try:
        record = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(record, dict):
        raise ParseError(f"expected a JSON object, got {type(record).__name__}")
    return record


def _require(record: dict, key: str, context: str):
    if key not in record:
        raise ParseError(f"{context} record is missing {key!r}")
    return record[key]


def _float_list(value, length: int, context: str) -> list:
    if not isinstance(value, (list, tuple)) or len(value) != length:
        raise ParseError(f"{context} must be a list of {length} numbers")
    out = []
    for x in value:
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ParseError(f"{context} contains a non-number: {x!r}")
        out.append(float(x))
    if not all(np.isfinite(out)):
        raise ParseError(f"{context} contains a non-finite value")
    return out


def matrix_to_pairs(m: np.ndarray) -> list:
    """Row-major [re, im] pairs of a complex matrix."""
    return [[float(z.real), float(z.imag)] for z in np.asarray(m).ravel()]


def pairs_to_matrix(pairs, dim: int, context: str) -> np.ndarray:
    """Complex dim x dim matrix from row-major [re, im] pairs."""
    if not isinstance(pairs, (list, tuple)) or len(pairs) != dim * dim:
        raise ParseError(f"{context} must be a list of {dim * dim} [re, im] pairs")
    flat = []
    for pair in pairs:
        re, im = _float_list(pair, 2, f"{context} entry")
        flat.append(complex(re, im))
    return np.array(flat, dtype=np.complex128).reshape(dim, dim)


def real_matrix_to_list(m: np.ndarray) -> list:
    return [float(x) for x in np.asarray(m, dtype=np.float64).ravel()]


def list_to_real_matrix(values, dim: int, context: str) -> np.ndarray:
    flat = _float_list(values, dim * dim, context)
    return np.array(flat, dtype=np.float64).reshape(dim, dim)


@dataclass(frozen=True, eq=False)
class StateInput:
    """Parsed input state: a correlation triple or a full density matrix."""

    t: Optional[np.ndarray] = None
    matrix: Optional[DensityMatrix] = None

    def __post_init__(self):
        if (self.t is None) == (self.matrix is None):
            raise ParseError("state input needs exactly one of 't' or 'matrix'")


def parse_state_input(text: str) -> StateInput:
    """Read a single state record: {"t": [a, b, c]} or {"matrix": [[re, im] x 16]}.

    Matrix inputs are validated as density matrices on load; t inputs are
    left unvalidated so formula-level callers can decide.
    """
    record = load_record(text)
    unknown = set(record) - {"t", "matrix"}
    if unknown:
        raise ParseError(f"unknown state input fields: {sorted(unknown)}")
    if ("t" in record) == ("matrix" in record):
        raise ParseError("state input needs exactly one of 't' or 'matrix'")
    if "t" in record:
        t = np.array(_float_list(record["t"], 3, "'t'"), dtype=np.float64)
        return StateInput(t=t)
    matrix = pairs_to_matrix(record["matrix"], 4, "'matrix'")
    return StateInput(matrix=DensityMatrix(matrix))


def verdict_to_dict(v: Verdict) -> dict:
    return {
        "separable": bool(v.separable),
        "pt_spectrum": [float(x) for x in v.pt_spectrum],
        "min_eigenvalue": float(v.min_eigenvalue),
        "sign_case": v.sign_case,
        "min_condition": v.min_condition,
        "margin": float(v.margin),
        "magnitude_order": list(v.magnitude_order),
    }


def verdict_from_dict(record: dict) -> Verdict:
    if not isinstance(record, dict):
        raise ParseError("verdict must be an object")
    separable = _require(record, "separable", "verdict")
    if not isinstance(separable, bool):
        raise ParseError("verdict 'separable' must be a boolean")
    order = _require(record, "magnitude_order", "verdict")
    if sorted(order) != [0, 1, 2]:
        raise ParseError("verdict 'magnitude_order' must be a permutation of 0..2")
    return Verdict(
        separable=separable,
        pt_spectrum=np.array(
            _float_list(_require(record, "pt_spectrum", "verdict"), 4, "'pt_spectrum'")
        ),
        min_eigenvalue=float(_require(record, "min_eigenvalue", "verdict")),
        sign_case=str(_require(record, "sign_case", "verdict")),
        min_condition=str(_require(record, "min_condition", "verdict")),
        margin=float(_require(record, "margin", "verdict")),
        magnitude_order=tuple(int(i) for i in order),
    )


def term_to_dict(term: ProductTerm) -> dict:
    return {
        "weight": float(term.weight),
        "a": matrix_to_pairs(term.a.matrix),
        "b": matrix_to_pairs(term.b.matrix),
    }


def term_from_dict(record: dict) -> ProductTerm:
    if not isinstance(record, dict):
        raise ParseError("decomposition term must be an object")
    weight = _require(record, "weight", "term")
    if isinstance(weight, bool) or not isinstance(weight, (int, float)):
        raise ParseError(f"term weight must be a number, got {weight!r}")
    a = pairs_to_matrix(_require(record, "a", "term"), 2, "term factor 'a'")
    b = pairs_to_matrix(_require(record, "b", "term"), 2, "term factor 'b'")
    return ProductTerm(weight=float(weight), a=QubitState(a), b=QubitState(b))


def decomposition_to_dict(d: Decomposition, strength: Optional[str] = None) -> dict:
    record = {}
    if strength is not None:
        record["strength"] = strength
    record["terms"] = [term_to_dict(term) for term in d.terms]
    return record


def decomposition_from_dict(record: dict) -> Decomposition:
    terms = _require(record, "terms", "decomposition")
    if not isinstance(terms, list):
        raise ParseError("decomposition 'terms' must be a list")
    return Decomposition(terms=tuple(term_from_dict(t) for t in terms))


def decomposition_to_lines(d: Decomposition) -> str:
    """Term records, one JSON object per line; the decomposition file format."""
    return "".join(dump_record(term_to_dict(term)) + "\n" for term in d.terms)


def parse_decomposition_lines(text: str) -> Decomposition:
    """Parse a decomposition file, reporting every bad term before failing.

    Structural problems raise ParseError immediately; invariant violations
    (bad weights, factors that are not states) are collected across all
    terms and raised together as InvalidDecompositionError so a hand-edited
    file gets one diagnostic per offending term.
    """
    terms = []
    violations = []
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ParseError("decomposition file has no term records")
    for lineno, line in enumerate(lines, start=1):
        try:
            terms.append(term_from_dict(load_record(line)))
        except (InvalidDecompositionError, InvalidStateError) as exc:
            violations.append(f"term {lineno}: {exc}")
        except ParseError as exc:
            raise ParseError(f"term {lineno}: {exc}") from None
    if violations:
        raise InvalidDecompositionError("; ".join(violations))
    return Decomposition(terms=tuple(terms))


@dataclass(frozen=True, eq=False)
class Report:
    """Classification output, optionally with decomposition and canonical data.

    A decomposition may only accompany a separable verdict; residuals maps
    check names to nonnegative values.
    """

    verdict: Verdict
    decomposition: Optional[Decomposition] = None
    canonical: Optional[CanonicalForm] = None
    residuals: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.decomposition is not None and not self.verdict.separable:
            raise InvalidDecompositionError(
                "a decomposition cannot accompany a non-separable verdict"
            )
        residuals = {}
        for name, value in dict(self.residuals).items():
            value = float(value)
            if not (np.isfinite(value) and value >= 0.0):
                raise ValueError(f"residual {name!r} must be finite and nonnegative")
            residuals[str(name)] = value
        object.__setattr__(self, "residuals", residuals)


def canonical_to_dict(form: CanonicalForm) -> dict:
    return {
        "t": [float(x) for x in form.t],
        "rot_a": real_matrix_to_list(form.rot_a),
        "rot_b": real_matrix_to_list(form.rot_b),
        "u_a": matrix_to_pairs(form.u_a),
        "u_b": matrix_to_pairs(form.u_b),
    }


def canonical_from_dict(record: dict) -> CanonicalForm:
    if not isinstance(record, dict):
        raise ParseError("canonical form must be an object")
    try:
        return CanonicalForm(
            t=np.array(_float_list(_require(record, "t", "canonical"), 3, "'t'")),
            rot_a=list_to_real_matrix(_require(record, "rot_a", "canonical"), 3, "'rot_a'"),
            rot_b=list_to_real_matrix(_require(record, "rot_b", "canonical"), 3, "'rot_b'"),
            u_a=pairs_to_matrix(_require(record, "u_a", "canonical"), 2, "'u_a'"),
            u_b=pairs_to_matrix(_require(record, "u_b", "canonical"), 2, "'u_b'"),
        )
    except ValueError as exc:
        raise ParseError(f"canonical form invariant violated: {exc}") from None


def report_to_dict(report: Report, strength: Optional[str] = None) -> dict:
    record = {"verdict": verdict_to_dict(report.verdict)}
    if report.decomposition is not None:
        record["decomposition"] = decomposition_to_dict(report.decomposition, strength)
    if report.canonical is not None:
        record["canonical"] = canonical_to_dict(report.canonical)
    record["residuals"] = dict(report.residuals)
    return record


def report_from_dict(record: dict) -> Report:
    if not isinstance(record, dict):
        raise ParseError("report must be an object")
    decomposition = None
    if "decomposition" in record:
        decomposition = decomposition_from_dict(record["decomposition"])
    canonical = None
    if "canonical" in record:
        canonical = canonical_from_dict(record["canonical"])
    residuals = record.get("residuals", {})
    if not isinstance(residuals, dict):
        raise ParseError("report 'residuals' must be an object")
    return Report(
        verdict=verdict_from_dict(_require(record, "verdict", "report")),
        decomposition=decomposition,
        canonical=canonical,
        residuals={k: float(v) for k, v in residuals.items()},
    )
