"""Timing comparison of the compiled and pure-Python eigensolver backends.

Runs the same pre-generated inputs through every available backend and
reports per-call times plus the speedup over the pure-Python baseline, for
the raw Jacobi kernels and for the higher-level operations that sit on top
of them (spectrum checks, classification with decomposition).

Usage: python3 benchmarks/bench_kernels.py [--count N] [--repeats R] [--seed S]
"""

import argparse
import time

import numpy as np

from bellsep import (
    classify,
    from_t_vector,
    hermitian_eigenvalues,
    kernels,
    partial_transpose,
    separable_decomposition,
    svd3,
    verify_decomposition,
)
from bellsep.tolerances import JACOBI_MAX_SWEEPS, JACOBI_REL_TOL


def random_hermitian(rng, n):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return (m + m.conj().T) / 2.0


def random_separable_t(rng):
    while True:
        t = rng.uniform(-1.0, 1.0, 3)
        if np.sum(np.abs(t)) <= 1.0:
            return t


def best_time(fn, repeats):
    """Fastest wall-clock time of `repeats` runs of fn(), in seconds."""
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def make_benchmarks(rng, count):
    herm4 = [random_hermitian(rng, 4) for _ in range(count)]
    real3 = [rng.normal(size=(3, 3)) for _ in range(count)]
    pts = [partial_transpose(from_t_vector(*random_separable_t(rng)))
           for _ in range(count)]
    ts = [random_separable_t(rng) for _ in range(count)]

    def bench_eigvalsh():
        backend = kernels.active()
        for m in herm4:
            backend.jacobi_eigvalsh(m, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)

    def bench_eigh():
        backend = kernels.active()
        for m in herm4:
            backend.jacobi_eigh(m, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS)

    def bench_pt_spectrum():
        for m in pts:
            hermitian_eigenvalues(m)

    def bench_svd3():
        for m in real3:
            svd3(m)

    def bench_pipeline():
        for t in ts:
            classify(t)
            d = separable_decomposition(t)
            verify_decomposition(d, from_t_vector(*t))

    return [
        ("jacobi_eigvalsh 4x4", bench_eigvalsh),
        ("jacobi_eigh 4x4", bench_eigh),
        ("pt spectrum 4x4", bench_pt_spectrum),
        ("svd3 3x3", bench_svd3),
        ("classify+decompose+verify", bench_pipeline),
    ]


def backend_agreement(rng, count):
    """Largest eigenvalue difference between backends on shared inputs."""
    names = sorted(kernels.available())
    if len(names) < 2:
        return None
    worst = 0.0
    for _ in range(count):
        m = random_hermitian(rng, 4)
        spectra = []
        for name in names:
            with kernels.use(name):
                w, _ = kernels.active().jacobi_eigvalsh(
                    m, JACOBI_REL_TOL, JACOBI_MAX_SWEEPS
                )
            spectra.append(np.sort(w))
        worst = max(worst, float(np.max(np.abs(spectra[0] - spectra[1]))))
    return worst


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=2000,
                        help="inputs per benchmark (default 2000)")
    parser.add_argument("--repeats", type=int, default=3,
                        help="timing repeats, best kept (default 3)")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    rng = np.random.default_rng(args.seed)
    benchmarks = make_benchmarks(rng, args.count)
    names = sorted(kernels.available())

    print(f"backends: {', '.join(names)} (default: {kernels.active_name()})")
    print(f"inputs per benchmark: {args.count}, best of {args.repeats} repeats")

    agreement = backend_agreement(rng, min(args.count, 500))
    if agreement is not None:
        print(f"cross-backend eigenvalue agreement: {agreement:.3e}")
    print()

    header = f"{'benchmark':<28}" + "".join(f"{name + ' us/call':>18}" for name in names)
    if "python" in names and len(names) > 1:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for label, fn in benchmarks:
        per_call = {}
        for name in names:
            with kernels.use(name):
                fn()  # warm up
                per_call[name] = best_time(fn, args.repeats) / args.count
        row = f"{label:<28}" + "".join(
            f"{per_call[name] * 1e6:>18.2f}" for name in names
        )
        if "python" in per_call and len(per_call) > 1:
            fastest_other = min(v for k, v in per_call.items() if k != "python")
            row += f"{per_call['python'] / fastest_other:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
