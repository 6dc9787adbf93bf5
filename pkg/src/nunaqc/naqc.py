"""Nonlocal advantage of quantum coherence (NAQC) for two-qubit states.

Steering protocol: qubit A is measured along each Pauli axis i, and the
coherence of B's conditional state is scored along the two axes j != i,
weighted by the outcome probability.  A state holds the advantage when
the score exceeds the bound attainable without entanglement.  Three
single-qubit coherence measures are supported:

    l1  sum of absolute off-diagonal elements,
    re  relative entropy of coherence,
    sk  skew information with the basis Pauli as the conserved quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qmat
from .eur import binary_entropy
from .oscillation import ProbabilityPair

MEASURES = ("l1", "re", "sk")

# Single-qubit-coherence ceilings of the steering score; the sk value is
# saturated by product states, so only strict excess counts as advantage.
_BOUNDS = {"l1": math.sqrt(6.0), "re": 2.23, "sk": 2.0}

_AXIS_INDEX = {"x": 0, "y": 1, "z": 2}

# Outcome branches below this weight contribute nothing to the score.
_ZERO_BRANCH = 1e-30


def naqc_bound(measure: str) -> float:
    """Steering-score threshold above which measure ``measure`` certifies NAQC."""
    try:
        return _BOUNDS[measure]
    except KeyError:
        raise ValueError(f"unknown measure {measure!r}, expected one of {MEASURES}") from None


def coherence_l1(rho, basis_axis: str) -> float:
    """Sum of off-diagonal magnitudes in the eigenbasis of pauli(basis_axis)."""
    rho = qmat.validate_density_matrix(rho, dim=2)
    basis = qmat.pauli_eigenbasis(basis_axis)
    rotated = basis.conj().T @ rho @ basis
    return float(abs(rotated[0, 1]) + abs(rotated[1, 0]))


def coherence_re(rho, basis_axis: str) -> float:
    """Relative entropy of coherence: S(diag of rho) - S(rho) in the basis."""
    rho = qmat.validate_density_matrix(rho, dim=2)
    basis = qmat.pauli_eigenbasis(basis_axis)
    rotated = basis.conj().T @ rho @ basis
    dephased = np.diag(np.diag(rotated))
    return qmat.von_neumann_entropy(dephased) - qmat.von_neumann_entropy(rotated)


# Eigenvalues at or below this are rounding artifacts of analytically
# pure states; the square root's infinite slope at 0 would otherwise
# amplify them to ~1e-8 in the skew score.
_SPECTRUM_SNAP = 1e-13


def coherence_sk(rho, basis_axis: str) -> float:
    """Skew information -Tr([sqrt(rho), sigma]^2) / 2; real and nonnegative."""
    rho = np.asarray(rho, dtype=complex)
    if not qmat.is_hermitian(rho):
        raise ValueError("input is not Hermitian within tolerance")
    lam, vec = np.linalg.eigh(rho)
    if float(lam.min()) < qmat.EIGENVALUE_FLOOR:
        raise ValueError(f"input has negative eigenvalue {lam.min():.3e}")
    root_lam = np.sqrt(np.where(lam <= _SPECTRUM_SNAP, 0.0, lam))
    root = (vec * root_lam) @ vec.conj().T
    sigma = qmat.pauli(basis_axis)
    comm = root @ sigma - sigma @ root
    return max(float((-0.5 * np.trace(comm @ comm)).real), 0.0)


def qubit_bloch_vector(rho) -> np.ndarray:
    """(b_x, b_y, b_z) with b_i = Tr(rho sigma_i)."""
    rho = qmat.validate_density_matrix(rho, dim=2)
    return np.array([float(np.trace(rho @ qmat.pauli(ax)).real) for ax in qmat.AXES])


def coherence_l1_bloch(b, basis_axis: str) -> float:
    """coherence_l1 as a function of the Bloch vector: transverse magnitude."""
    b = np.asarray(b, dtype=float)
    j = _AXIS_INDEX[basis_axis]
    return float(math.sqrt(sum(b[i] ** 2 for i in range(3) if i != j)))


def coherence_re_bloch(b, basis_axis: str) -> float:
    """coherence_re via eigenvalues (1 +- |b|)/2 and populations (1 +- b_j)/2."""
    b = np.asarray(b, dtype=float)
    j = _AXIS_INDEX[basis_axis]
    lam = min(float(np.linalg.norm(b)), 1.0)
    return binary_entropy((1.0 + b[j]) / 2.0) - binary_entropy((1.0 + lam) / 2.0)


def coherence_sk_bloch(b, basis_axis: str) -> float:
    """coherence_sk via the Bloch vector; singular at the maximally mixed point.

    Equals (1 - sqrt(1 - |b|^2)) b_perp^2 / |b|^2, which is 0/0 as
    |b| -> 0; use coherence_sk there instead.
    """
    b = np.asarray(b, dtype=float)
    j = _AXIS_INDEX[basis_axis]
    bsq = float(b @ b)
    if bsq < 1e-12:
        raise ValueError("formula is singular near the maximally mixed state")
    perp = bsq - b[j] ** 2
    return (1.0 - math.sqrt(max(1.0 - bsq, 0.0))) * perp / bsq


_COHERENCE = {"l1": coherence_l1, "re": coherence_re, "sk": coherence_sk}


def _align_transverse_frame(rho: np.ndarray) -> np.ndarray:
    """Zero out the phase of the cross-mode coherence <01|rho|10>.

    The relative phase between the two occupied flavor modes is a local
    gauge: it equals a z-rotation of qubit B, which fixed lab axes would
    otherwise leak into the steering score.  Scoring in the frame where
    the coherence is real and nonnegative makes the score a function of
    the outcome probabilities alone.  No-op when the coherence already
    is real nonnegative (in particular on diagonal states).
    """
    z = complex(rho[1, 2])
    if abs(z) == 0.0 or (z.imag == 0.0 and z.real >= 0.0):
        return rho
    d = z.conjugate() / abs(z)
    gauge = np.diag([1.0 + 0.0j, d, 1.0 + 0.0j, d])
    return gauge @ rho @ gauge.conj().T


def naqc_general(rho, measure: str) -> float:
    """Steering score of a two-qubit state from the measurement protocol.

    N = 1/2 sum_{i, a} p(a|i) sum_{j != i} C^{sigma_j}(rho_B given
    outcome a of sigma_i on A), evaluated in the aligned transverse
    frame of B.  Zero-probability branches contribute 0.
    """
    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}, expected one of {MEASURES}")
    rho = _align_transverse_frame(qmat.validate_density_matrix(rho, dim=4))
    score = _COHERENCE[measure]
    eye = np.eye(2)
    total = 0.0
    for ax_i in qmat.AXES:
        sigma = qmat.pauli(ax_i)
        for sign in (1.0, -1.0):
            proj = qmat.tensor((np.eye(2) + sign * sigma) / 2.0, eye)
            branch = proj @ rho @ proj
            weight = float(np.trace(branch).real)
            if weight < _ZERO_BRANCH:
                continue
            conditional = qmat._partial_trace_unchecked(branch, "B") / weight
            for ax_j in qmat.AXES:
                if ax_j != ax_i:
                    total += weight * score(conditional, ax_j)
    return total / 2.0


def naqc_closed(probs: ProbabilityPair, measure: str) -> float:
    """Closed form of naqc_general on the oscillation flavor state.

    With p, q the survival and transition probabilities:
    l1 -> 2 + 2 sqrt(p q), re -> 2 + h(p), sk -> 2 + 4 p q.
    """
    p = probs.p_survival
    q = probs.p_transition
    if measure == "l1":
        return 2.0 + 2.0 * math.sqrt(p * q)
    if measure == "re":
        return 2.0 + binary_entropy(p)
    if measure == "sk":
        return 2.0 + 4.0 * p * q
    raise ValueError(f"unknown measure {measure!r}, expected one of {MEASURES}")


@dataclass(frozen=True)
class NaqcTriple:
    """Steering score under all three measures, with strict-excess flags."""

    n_l1: float
    n_re: float
    n_sk: float
    attained_l1: bool
    attained_re: bool
    attained_sk: bool


def naqc_triple(probs: ProbabilityPair) -> NaqcTriple:
    """Closed-form scores and bound-attainment flags for one probability pair."""
    n_l1 = naqc_closed(probs, "l1")
    n_re = naqc_closed(probs, "re")
    n_sk = naqc_closed(probs, "sk")
    return NaqcTriple(
        n_l1=n_l1,
        n_re=n_re,
        n_sk=n_sk,
        attained_l1=n_l1 > _BOUNDS["l1"],
        attained_re=n_re > _BOUNDS["re"],
        attained_sk=n_sk > _BOUNDS["sk"],
    )
