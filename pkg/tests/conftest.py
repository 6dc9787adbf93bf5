import numpy as np
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def random_density(rng, dim):
    """Random full-rank density matrix (Ginibre construction)."""
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def random_qubit_density(rng, radius=None):
    """Random qubit state; Bloch radius uniform in (0, 1) unless given."""
    b = rng.normal(size=3)
    b /= np.linalg.norm(b)
    b *= rng.uniform(0.05, 0.98) if radius is None else radius
    sx = np.array([[0, 1], [1, 0]], dtype=complex)
    sy = np.array([[0, -1j], [1j, 0]])
    sz = np.array([[1, 0], [0, -1]], dtype=complex)
    return 0.5 * (np.eye(2) + b[0] * sx + b[1] * sy + b[2] * sz)
