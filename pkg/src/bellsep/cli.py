"""Batch command-line interface with line-delimited JSON input and output.

Subcommands: classify, decompose, canonicalize, sample, verify, spectrum.
Records go to standard output, diagnostics to standard error.  Exit codes:
0 success, 1 verification or convergence failure, 2 invalid state or
decomposition, 3 not separable, 4 out of regime (nonzero Bloch vectors),
5 parse, argument or I/O error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .canonicalize import canonical_form, classify_general, transport_decomposition
from .errors import (
    ConvergenceError,
    InvalidDecompositionError,
    InvalidStateError,
    NotSeparableError,
    OutOfRegimeError,
    ParseError,
)
from .linalg import frobenius_distance, hermitian_eigenvalues
from .qstate import (
    CorrelationData,
    from_t_vector,
    hs_decompose,
    hs_reconstruct,
    partial_transpose,
)
from .separability import (
    CASE_B,
    STRONG,
    case_b_sufficient_check,
    classify,
    pt_spectrum_closed_form,
    separable_decomposition,
    strength,
    verify_decomposition,
)
from .serialize import (
    Report,
    StateInput,
    decomposition_to_lines,
    dump_record,
    parse_decomposition_lines,
    parse_state_input,
    report_to_dict,
)
from .tolerances import (
    DECOMP_RESIDUAL_TOL,
    SEPARABILITY_TOL,
    SPECTRUM_MATCH_TOL,
    VERIFY_RESIDUAL_TOL,
)

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_INVALID = 2
EXIT_NOT_SEPARABLE = 3
EXIT_OUT_OF_REGIME = 4
EXIT_PARSE = 5


def _t_arg(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected three comma-separated values, got {text!r}"
        )
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric value in {text!r}") from None
    if not all(np.isfinite(values)):
        raise argparse.ArgumentTypeError(f"non-finite value in {text!r}")
    return np.array(values, dtype=np.float64)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive count, got {value}")
    return value


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None


def _load_state(args) -> StateInput:
    if args.t is not None:
        return StateInput(t=args.t)
    return parse_state_input(_read_text(args.input))


def _emit(args, record: dict, output_text: str | None = None) -> None:
    line = dump_record(record)
    print(line)
    path = getattr(args, "output", None)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(line + "\n" if output_text is None else output_text)


def _reconstructed_matrix(t: np.ndarray) -> np.ndarray:
    """Hermitian matrix for arbitrary t, bypassing positivity validation."""
    zero = np.zeros(3)
    return hs_reconstruct(CorrelationData(r=zero, s=zero, t=np.diag(t)))


def _cmd_classify(args) -> int:
    state = _load_state(args)
    if state.matrix is not None:
        rho_matrix = state.matrix.matrix
        form = canonical_form(state.matrix)
        t = np.asarray(form.t)
        verdict = classify(t)
        canonical = form
    else:
        t = state.t
        canonical = None
        if args.allow_invalid:
            verdict = classify(t, validate=False)
            rho_matrix = _reconstructed_matrix(t)
        else:
            rho_matrix = from_t_vector(*t).matrix
            verdict = classify(t)
    numeric = hermitian_eigenvalues(partial_transpose(rho_matrix))
    mismatch = float(np.max(np.abs(verdict.pt_spectrum - numeric)))
    report = Report(
        verdict=verdict, canonical=canonical, residuals={"spectrum_mismatch": mismatch}
    )
    record = {"t": [float(x) for x in t]}
    record.update(report_to_dict(report))
    record["spectra"] = {
        "closed_form": [float(x) for x in verdict.pt_spectrum],
        "numeric": [float(x) for x in numeric],
        "max_discrepancy": mismatch,
    }
    if verdict.sign_case == CASE_B:
        record["case_b_sufficient"] = case_b_sufficient_check(t)
    _emit(args, record)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    state = _load_state(args)
    if state.matrix is not None:
        rho = state.matrix
        form = canonical_form(rho)
        t = np.asarray(form.t)
        d = transport_decomposition(separable_decomposition(t), form)
        canonical = form
    else:
        t = state.t
        d = separable_decomposition(t)
        rho = from_t_vector(*t)
        canonical = None
    label = strength(d)
    residual = verify_decomposition(d, rho)
    report = Report(
        verdict=classify(t),
        decomposition=d,
        canonical=canonical,
        residuals={"reconstruction": residual},
    )
    record = {"t": [float(x) for x in t]}
    record.update(report_to_dict(report, strength=label))
    _emit(args, record, output_text=decomposition_to_lines(d))
    return EXIT_OK


def _cmd_canonicalize(args) -> int:
    state = _load_state(args)
    rho = state.matrix if state.matrix is not None else from_t_vector(*state.t)
    form = canonical_form(rho)
    t = np.asarray(form.t)
    source_t = hs_decompose(rho).t
    residual = frobenius_distance(
        form.rot_a @ np.diag(t) @ form.rot_b.T, source_t.astype(np.complex128)
    )
    report = Report(
        verdict=classify(t), canonical=form, residuals={"factorization": residual}
    )
    _emit(args, report_to_dict(report))
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    state = _load_state(args)
    if state.matrix is not None:
        rho_matrix = state.matrix.matrix
        t = np.asarray(canonical_form(state.matrix).t)
    else:
        t = state.t
        if args.allow_invalid:
            rho_matrix = _reconstructed_matrix(t)
        else:
            rho_matrix = from_t_vector(*t).matrix
    closed = pt_spectrum_closed_form(t)
    numeric = hermitian_eigenvalues(partial_transpose(rho_matrix))
    record = {
        "t": [float(x) for x in t],
        "pt_spectrum": {
            "closed_form": [float(x) for x in closed],
            "numeric": [float(x) for x in numeric],
            "max_discrepancy": float(np.max(np.abs(closed - numeric))),
        },
        "state_spectrum": {
            "numeric": [float(x) for x in hermitian_eigenvalues(rho_matrix)]
        },
    }
    _emit(args, record)
    return EXIT_OK


def _cmd_verify(args) -> int:
    state = _load_state(args)
    if state.matrix is not None:
        rho = state.matrix
        verdict = classify_general(rho)
    else:
        rho = from_t_vector(*state.t)
        verdict = classify(state.t)
    d = parse_decomposition_lines(_read_text(args.decomposition))
    label = strength(d)
    residual = verify_decomposition(d, rho)
    report = Report(verdict=verdict, residuals={"reconstruction": residual})
    record = report_to_dict(report)
    record["strength"] = label
    record["residual_ok"] = bool(residual <= VERIFY_RESIDUAL_TOL)
    _emit(args, record)
    if residual > VERIFY_RESIDUAL_TOL:
        print(
            f"bellsep: reconstruction residual {residual:.6g} exceeds "
            f"{VERIFY_RESIDUAL_TOL:g}",
            file=sys.stderr,
        )
        return EXIT_FAILED_CHECK
    return EXIT_OK


def _check_sampled_state(t: np.ndarray, violations: list) -> tuple:
    """Run the classify/decompose/verify pipeline on one valid t.

    Returns (separable flag, reconstruction residual, spectrum mismatch) and
    appends a message per violated property.
    """
    rho = from_t_vector(*t)
    verdict = classify(t)
    numeric = hermitian_eigenvalues(partial_transpose(rho))
    mismatch = float(np.max(np.abs(verdict.pt_spectrum - numeric)))
    where = f"t={tuple(float(x) for x in t)!r}"
    if mismatch > SPECTRUM_MATCH_TOL:
        violations.append(f"{where}: spectrum mismatch {mismatch!r}")
    criterion = verdict.margin >= -SEPARABILITY_TOL
    ppt = float(verdict.pt_spectrum[0]) >= -SEPARABILITY_TOL
    if criterion != ppt:
        violations.append(f"{where}: magnitude criterion disagrees with PT sign")
    if verdict.min_eigenvalue != verdict.pt_spectrum[0]:
        violations.append(f"{where}: labeled eigenvalue is not the minimum")
    residual = 0.0
    if verdict.separable:
        d = separable_decomposition(t)
        residual = verify_decomposition(d, rho)
        if residual > DECOMP_RESIDUAL_TOL:
            violations.append(f"{where}: reconstruction residual {residual!r}")
        if strength(d) != STRONG:
            violations.append(f"{where}: decomposition not strong")
    else:
        try:
            separable_decomposition(t)
        except NotSeparableError:
            pass
        else:
            violations.append(f"{where}: entangled state was decomposed")
    return verdict.separable, residual, mismatch


def _cmd_sample(args) -> int:
    rng = np.random.default_rng(args.seed)
    violations: list = []
    processed = skipped = n_separable = 0
    max_residual = 0.0
    max_mismatch = 0.0

    def handle(t: np.ndarray) -> None:
        nonlocal processed, n_separable, max_residual, max_mismatch
        separable, residual, mismatch = _check_sampled_state(t, violations)
        processed += 1
        n_separable += int(separable)
        max_residual = max(max_residual, residual)
        max_mismatch = max(max_mismatch, mismatch)

    if args.region == "cube":
        for _ in range(args.count):
            t = rng.uniform(-1.0, 1.0, 3)
            try:
                from_t_vector(*t)
            except InvalidStateError:
                skipped += 1
                continue
            handle(t)
    else:
        while processed < args.count:
            t = rng.uniform(-1.0, 1.0, 3)
            try:
                from_t_vector(*t)
            except InvalidStateError:
                continue
            handle(t)

    record = {
        "region": args.region,
        "seed": args.seed,
        "count": args.count,
        "processed": processed,
        "skipped_invalid": skipped,
        "separable": n_separable,
        "entangled": processed - n_separable,
        "max_reconstruction_residual": max_residual,
        "max_spectrum_mismatch": max_mismatch,
        "violations": violations,
    }
    _emit(args, record)
    if violations:
        for message in violations:
            print(f"bellsep: violation: {message}", file=sys.stderr)
        return EXIT_FAILED_CHECK
    return EXIT_OK


def _add_state_args(p, allow_invalid: bool = False) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument(
        "--t",
        type=_t_arg,
        metavar="a,b,c",
        help="correlation values (write --t=a,b,c when a is negative)",
    )
    group.add_argument(
        "--input",
        metavar="FILE",
        help='state record: {"t": [a,b,c]} or {"matrix": [[re,im] x 16 row-major]}',
    )
    if allow_invalid:
        p.add_argument(
            "--allow-invalid",
            action="store_true",
            help="skip state validation for --t inputs (formula-level study; "
            "matrix inputs are always validated)",
        )


def _add_output_arg(p, text: str) -> None:
    p.add_argument("--output", metavar="FILE", help=text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellsep",
        description="Separability toolkit for two-qubit states with zero local "
        "Bloch vectors: partial-transpose classification, explicit pure-product "
        "decompositions, correlation-matrix canonicalization.",
        exit_on_error=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser(
        "classify",
        help="separable or entangled, with closed-form and numeric PT spectra",
        exit_on_error=False,
    )
    _add_state_args(p, allow_invalid=True)
    _add_output_arg(p, "also write the output record to FILE")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser(
        "decompose",
        help="explicit pure-product decomposition of a separable state",
        exit_on_error=False,
    )
    _add_state_args(p)
    _add_output_arg(p, "write the decomposition term records to FILE (verify reads this format)")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "canonicalize",
        help="diagonalize the correlation matrix via local unitaries",
        exit_on_error=False,
    )
    _add_state_args(p)
    _add_output_arg(p, "also write the output record to FILE")
    p.set_defaults(handler=_cmd_canonicalize)

    p = sub.add_parser(
        "sample",
        help="random-state harness: classify, decompose and verify each draw",
        exit_on_error=False,
    )
    p.add_argument("--count", type=_positive_int, required=True, help="states to process")
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument(
        "--region",
        choices=("tetrahedron", "cube"),
        default="tetrahedron",
        help="tetrahedron: exactly COUNT valid states (rejection sampled); "
        "cube: COUNT draws from [-1,1]^3, invalid ones skipped and counted",
    )
    _add_output_arg(p, "also write the summary record to FILE")
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser(
        "verify",
        help="check a decomposition file against a state",
        exit_on_error=False,
    )
    p.add_argument(
        "decomposition",
        metavar="DECOMP_FILE",
        help="decomposition file: one term record per line",
    )
    _add_state_args(p)
    _add_output_arg(p, "also write the output record to FILE")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser(
        "spectrum",
        help="closed-form and numeric PT spectra plus the state spectrum",
        exit_on_error=False,
    )
    _add_state_args(p, allow_invalid=True)
    _add_output_arg(p, "also write the output record to FILE")
    p.set_defaults(handler=_cmd_spectrum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except argparse.ArgumentError as exc:
        print(f"bellsep: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SystemExit as exc:
        # argparse exits directly for --help (0) and some argument errors (2);
        # remap the latter onto the parse-error status.
        return EXIT_OK if exc.code in (0, None) else EXIT_PARSE
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"bellsep: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidStateError, InvalidDecompositionError) as exc:
        print(f"bellsep: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except NotSeparableError as exc:
        margin = "" if exc.margin is None else f" (margin {exc.margin:.17g})"
        print(f"bellsep: {exc}{margin}", file=sys.stderr)
        return EXIT_NOT_SEPARABLE
    except OutOfRegimeError as exc:
        print(f"bellsep: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_REGIME
    except ConvergenceError as exc:
        print(f"bellsep: eigensolver did not converge: {exc}", file=sys.stderr)
        return EXIT_FAILED_CHECK
    except (OSError, ValueError) as exc:
        print(f"bellsep: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    raise SystemExit(main(sys.argv[1:]))
