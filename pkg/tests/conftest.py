import numpy as np
import pytest
from hypothesis import settings

from bellsep import kernels

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture(params=sorted(kernels.available()))
def backend(request):
    """Run the test once per available eigensolver backend."""
    with kernels.use(request.param):
        yield request.param


def random_hermitian(rng, n, scale=1.0):
    m = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return scale * (m + m.conj().T) / 2.0


def rotation_from_quaternion(q):
    """Proper rotation matrix of a unit quaternion (q0, q1, q2, q3)."""
    q0, q1, q2, q3 = q
    return np.array(
        [
            [
                q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3,
                2.0 * (q1 * q2 - q0 * q3),
                2.0 * (q1 * q3 + q0 * q2),
            ],
            [
                2.0 * (q1 * q2 + q0 * q3),
                q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3,
                2.0 * (q2 * q3 - q0 * q1),
            ],
            [
                2.0 * (q1 * q3 - q0 * q2),
                2.0 * (q2 * q3 + q0 * q1),
                q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3,
            ],
        ]
    )


def random_rotation(rng):
    q = rng.normal(size=4)
    return rotation_from_quaternion(q / np.linalg.norm(q))


def random_su2(rng):
    """Haar-random special unitary 2x2 (uniform unit quaternion)."""
    q = rng.normal(size=4)
    q0, q1, q2, q3 = q / np.linalg.norm(q)
    return np.array(
        [
            [q0 - 1j * q3, -q2 - 1j * q1],
            [q2 - 1j * q1, q0 + 1j * q3],
        ]
    )


def random_density(rng, n=4):
    """Random full-rank density matrix via a Wishart draw."""
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    m = g @ g.conj().T
    return m / np.trace(m).real


def random_valid_t(rng):
    """Uniform draw from the tetrahedron of valid correlation triples."""
    while True:
        t = rng.uniform(-1.0, 1.0, 3)
        if (
            1.0 - t[0] - t[1] - t[2] >= 0.0
            and 1.0 + t[0] + t[1] - t[2] >= 0.0
            and 1.0 - t[0] + t[1] + t[2] >= 0.0
            and 1.0 + t[0] - t[1] + t[2] >= 0.0
        ):
            return t


def random_separable_t(rng):
    while True:
        t = rng.uniform(-1.0, 1.0, 3)
        if np.sum(np.abs(t)) <= 1.0:
            return t
