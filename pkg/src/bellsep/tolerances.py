"""Central numerical tolerances.

Every threshold used by the package lives here so the accuracy contract can
be audited in one place.  Values are absolute unless noted otherwise.
"""

# State invariants.
HERMITICITY_TOL = 1e-9      # max |H - H^dagger| entry allowed
TRACE_TOL = 1e-9            # |Tr(rho) - 1| allowed
PSD_SLACK = 1e-9            # eigenvalues >= -PSD_SLACK count as nonnegative
BLOCH_ZERO_TOL = 1e-9       # ||r||, ||s|| below this count as zero

# Eigensolver (cyclic Jacobi rotations).
JACOBI_REL_TOL = 1e-13      # off-diagonal Frobenius norm, relative to ||A||_F
JACOBI_MAX_SWEEPS = 100

# Linear-algebra reconstruction checks.
RECONSTRUCTION_TOL = 1e-10  # SVD / Hilbert-Schmidt round trips
ORTHOGONALITY_TOL = 1e-10   # rotation factors, unitarity
ADJOINT_TOL = 1e-9          # SU(2) lift adjoint-action residual

# Separability classification and decomposition.
SEPARABILITY_TOL = 1e-12    # boundary |t1|+|t2|+|t3| = 1 counts as separable
WEIGHT_SUM_TOL = 1e-12      # decomposition weights must sum to 1 within this
DECOMP_RESIDUAL_TOL = 1e-12 # reconstruction residual of emitted decompositions
PURITY_TOL = 1e-9           # purity >= 1 - PURITY_TOL counts as pure
REMAINDER_DROP_TOL = 1e-14  # identity remainder mass below this is dropped

# Command-line verification gate.
VERIFY_RESIDUAL_TOL = 1e-9

# Closed-form PT eigenvalues vs the numeric eigensolver on the same state.
SPECTRUM_MATCH_TOL = 1e-10  # user decomposition must reconstruct within this
