"""Dense complex matrix algebra for one- and two-qubit operators.

Two-qubit matrices use the product basis {|00>, |01>, |10>, |11>} with
subsystem A as the left tensor factor.  Entropies are in bits (base-2
logarithms throughout).  Only dimensions 2 and 4 are supported.
"""

from __future__ import annotations

import numpy as np

AXES = ("x", "y", "z")

HERMITIAN_ATOL = 1e-12
TRACE_ATOL = 1e-12
# Eigenvalues of a numerically valid density matrix may undershoot zero
# by rounding; anything below this floor is treated as a real violation.
EIGENVALUE_FLOOR = -1e-10

_PAULI = {
    "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

_SQRT_HALF = 1.0 / np.sqrt(2.0)

# Columns are the +1 and -1 eigenvectors, in that order.
_PAULI_EIGENBASIS = {
    "x": np.array([[_SQRT_HALF, _SQRT_HALF], [_SQRT_HALF, -_SQRT_HALF]], dtype=complex),
    "y": np.array([[_SQRT_HALF, _SQRT_HALF], [1.0j * _SQRT_HALF, -1.0j * _SQRT_HALF]], dtype=complex),
    "z": np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
}


def pauli(axis: str) -> np.ndarray:
    """Pauli matrix for ``axis`` in {'x', 'y', 'z'}, with sigma_z |0> = +|0>."""
    try:
        return _PAULI[axis].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}, expected one of {AXES}") from None


def pauli_eigenbasis(axis: str) -> np.ndarray:
    """Unitary whose columns are the +1 and -1 eigenvectors of pauli(axis)."""
    try:
        return _PAULI_EIGENBASIS[axis].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}, expected one of {AXES}") from None


def _as_square(m, name: str = "matrix") -> np.ndarray:
    out = np.asarray(m, dtype=complex)
    if out.ndim != 2 or out.shape[0] != out.shape[1]:
        raise ValueError(f"{name} must be square, got shape {out.shape}")
    if out.shape[0] not in (2, 4):
        raise ValueError(f"{name} must be 2x2 or 4x4, got shape {out.shape}")
    return out


def is_hermitian(m, atol: float = HERMITIAN_ATOL) -> bool:
    m = np.asarray(m, dtype=complex)
    return bool(np.max(np.abs(m - m.conj().T)) <= atol)


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two 2x2 operators; A goes in the left slot."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError(f"tensor expects two 2x2 matrices, got {a.shape} and {b.shape}")
    return np.kron(a, b)


def validate_density_matrix(rho, dim: int | None = None, name: str = "rho") -> np.ndarray:
    """Check Hermiticity, unit trace and positivity; return as complex ndarray.

    Raises ValueError when any invariant is violated beyond tolerance.
    """
    rho = _as_square(rho, name)
    if dim is not None and rho.shape[0] != dim:
        raise ValueError(f"{name} must be {dim}x{dim}, got shape {rho.shape}")
    dev = float(np.max(np.abs(rho - rho.conj().T)))
    if dev > HERMITIAN_ATOL:
        raise ValueError(f"{name} is not Hermitian: max deviation {dev:.3e}")
    tr = complex(np.trace(rho))
    if abs(tr - 1.0) > TRACE_ATOL:
        raise ValueError(f"{name} must have unit trace, got {tr}")
    lo = float(np.linalg.eigvalsh(rho).min())
    if lo < EIGENVALUE_FLOOR:
        raise ValueError(f"{name} has negative eigenvalue {lo:.3e}")
    return rho


def _partial_trace_unchecked(m: np.ndarray, keep: str) -> np.ndarray:
    r = np.asarray(m, dtype=complex).reshape(2, 2, 2, 2)
    if keep == "A":
        return np.einsum("abcb->ac", r)
    if keep == "B":
        return np.einsum("abad->bd", r)
    raise ValueError(f"keep must be 'A' or 'B', got {keep!r}")


def partial_trace(rho, keep: str) -> np.ndarray:
    """Trace out one qubit of a two-qubit density matrix.

    ``keep='A'`` returns the left-slot state, ``keep='B'`` the right-slot
    state, in the same {|0>, |1>} ordering as the input.
    """
    rho = validate_density_matrix(rho, dim=4)
    return _partial_trace_unchecked(rho, keep)


def eigenvalues_hermitian(m) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, in descending order."""
    m = _as_square(m)
    if not is_hermitian(m):
        raise ValueError("input is not Hermitian within tolerance")
    return np.linalg.eigvalsh(m)[::-1].copy()


def _clamped_spectrum(m: np.ndarray, name: str) -> np.ndarray:
    lam = np.linalg.eigvalsh(m)
    if float(lam.min()) < EIGENVALUE_FLOOR:
        raise ValueError(f"{name} has negative eigenvalue {lam.min():.3e}")
    return np.clip(lam, 0.0, None)


def von_neumann_entropy(rho) -> float:
    """S(rho) = -sum_i lambda_i log2 lambda_i, with 0 log 0 = 0."""
    rho = validate_density_matrix(rho)
    lam = _clamped_spectrum(rho, "rho")
    pos = lam[lam > 0.0]
    return float(-np.sum(pos * np.log2(pos)))


def sqrt_psd(m) -> np.ndarray:
    """Unique positive semidefinite square root of a Hermitian PSD matrix."""
    m = _as_square(m)
    if not is_hermitian(m):
        raise ValueError("input is not Hermitian within tolerance")
    lam, vec = np.linalg.eigh(m)
    if float(lam.min()) < EIGENVALUE_FLOOR:
        raise ValueError(f"input has negative eigenvalue {lam.min():.3e}")
    root = np.sqrt(np.clip(lam, 0.0, None))
    return (vec * root) @ vec.conj().T
