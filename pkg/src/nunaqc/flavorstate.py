"""Bipartite qubit encoding of the flavor content of one neutrino.

Qubit A (left tensor slot) is the occupation of the initial-flavor mode,
qubit B (right slot) the occupation of the other flavor mode.  A state
that survived with amplitude a_aa and converted with amplitude a_ab is

    |psi> = a_ab |01> + a_aa |10>

in the product basis {|00>, |01>, |10>, |11>}.  Measurements in the
uncertainty and steering protocols act on qubit A.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import qmat
from .oscillation import ProbabilityPair

NORMALIZATION_ATOL = 1e-12


@dataclass(frozen=True)
class FlavorAmplitudes:
    """Survival (a_aa) and transition (a_ab) amplitudes, normalized."""

    a_aa: complex
    a_ab: complex

    def __post_init__(self):
        norm = abs(self.a_aa) ** 2 + abs(self.a_ab) ** 2
        if abs(norm - 1.0) > NORMALIZATION_ATOL:
            raise ValueError(f"|a_aa|^2 + |a_ab|^2 must be 1, got {norm!r}")


def amplitudes_from_probabilities(probs: ProbabilityPair, phase: float = 0.0) -> FlavorAmplitudes:
    """Amplitudes with |a_aa|^2 = p_survival and a relative phase on a_ab.

    Probabilities fix the amplitudes only up to the relative phase; every
    derived quantity downstream is invariant under it.
    """
    for name, p in (("p_survival", probs.p_survival), ("p_transition", probs.p_transition)):
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {p}")
    return FlavorAmplitudes(
        a_aa=complex(math.sqrt(probs.p_survival)),
        a_ab=cmath.exp(1j * phase) * math.sqrt(probs.p_transition),
    )


def bipartite_state(amps: FlavorAmplitudes) -> np.ndarray:
    """Rank-one 4x4 density matrix of the two-mode flavor state."""
    vec = np.array([0.0, amps.a_ab, amps.a_aa, 0.0], dtype=complex)
    return np.outer(vec, vec.conj())


def state_from_probabilities(probs: ProbabilityPair, phase: float = 0.0) -> np.ndarray:
    return bipartite_state(amplitudes_from_probabilities(probs, phase))


@dataclass(frozen=True)
class BlochDecomposition:
    """Pauli expansion rho = (I + r.sigma x I + I x s.sigma + t_ij sigma_i x sigma_j) / 4."""

    r: np.ndarray
    s: np.ndarray
    t: np.ndarray


def bloch_decompose(rho) -> BlochDecomposition:
    """Local Bloch vectors and correlation matrix of a two-qubit state."""
    rho = qmat.validate_density_matrix(rho, dim=4)
    eye = np.eye(2)
    r = np.empty(3)
    s = np.empty(3)
    t = np.empty((3, 3))
    for i, ax_i in enumerate(qmat.AXES):
        sig_i = qmat.pauli(ax_i)
        r[i] = np.trace(rho @ qmat.tensor(sig_i, eye)).real
        s[i] = np.trace(rho @ qmat.tensor(eye, sig_i)).real
        for j, ax_j in enumerate(qmat.AXES):
            t[i, j] = np.trace(rho @ qmat.tensor(sig_i, qmat.pauli(ax_j))).real
    return BlochDecomposition(r=r, s=s, t=t)


def bloch_reconstruct(decomp: BlochDecomposition) -> np.ndarray:
    """Invert bloch_decompose; exact on any two-qubit density matrix."""
    eye = np.eye(2)
    out = qmat.tensor(eye, eye).astype(complex)
    for i, ax_i in enumerate(qmat.AXES):
        sig_i = qmat.pauli(ax_i)
        out += decomp.r[i] * qmat.tensor(sig_i, eye)
        out += decomp.s[i] * qmat.tensor(eye, sig_i)
        for j, ax_j in enumerate(qmat.AXES):
            out += decomp.t[i, j] * qmat.tensor(sig_i, qmat.pauli(ax_j))
    return out / 4.0
