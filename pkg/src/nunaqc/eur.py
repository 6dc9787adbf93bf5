"""Entropic uncertainty with quantum memory for Pauli measurements on qubit A.

For measurements P and R on A assisted by a memory B, the conditional
entropies obey

    S(P|B) + S(R|B) >= -log2 c(P, R) + S(A|B)

with c the largest squared overlap between eigenvectors of P and R.  For
the flavor states produced by oscillation the left side equals twice the
right side, which is how the closed forms below are organized.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import qmat
from .oscillation import ProbabilityPair

CONDITIONAL_IDENTITY_ATOL = 1e-10


def binary_entropy(p: float) -> float:
    """h(p) = -p log2 p - (1-p) log2 (1-p) in bits, with 0 log 0 = 0."""
    if not -1e-12 <= p <= 1.0 + 1e-12:
        raise ValueError(f"probability must lie in [0, 1], got {p}")
    p = min(max(p, 0.0), 1.0)
    q = 1.0 - p
    out = 0.0
    if p > 0.0:
        out -= p * math.log2(p)
    if q > 0.0:
        out -= q * math.log2(q)
    return out


def measured_state(rho, axis: str) -> np.ndarray:
    """Dephase qubit A into the eigenbasis of pauli(axis); B untouched."""
    rho = qmat.validate_density_matrix(rho, dim=4)
    eye = np.eye(2)
    sigma = qmat.pauli(axis)
    out = np.zeros_like(rho)
    for sign in (1.0, -1.0):
        proj = qmat.tensor((np.eye(2) + sign * sigma) / 2.0, eye)
        out += proj @ rho @ proj
    return out


def max_overlap_pauli(axis_p: str = "x", axis_r: str = "y") -> float:
    """c = max_{j,k} |<p_j|r_k>|^2 over the eigenvectors of two Pauli axes.

    Computed as the largest trace of a projector product over all four
    eigenvector pairs; 1/2 for distinct axes, 1 for identical ones.
    """
    best = 0.0
    for sign_p in (1.0, -1.0):
        proj_p = (np.eye(2) + sign_p * qmat.pauli(axis_p)) / 2.0
        for sign_r in (1.0, -1.0):
            proj_r = (np.eye(2) + sign_r * qmat.pauli(axis_r)) / 2.0
            best = max(best, float(np.trace(proj_p @ proj_r).real))
    return best


@dataclass(frozen=True)
class EurResult:
    """Uncertainty sum and its memory-assisted lower bound, in bits.

    u = s_xb + s_yb, u_bound = -log2(c) + s_ab.
    """

    u: float
    u_bound: float
    s_xb: float
    s_yb: float
    s_ab: float

    def __post_init__(self):
        if abs(self.u - (self.s_xb + self.s_yb)) > 1e-12:
            raise ValueError("u must equal s_xb + s_yb")
        if self.u < self.u_bound - CONDITIONAL_IDENTITY_ATOL:
            raise ValueError(
                f"uncertainty {self.u!r} below its lower bound {self.u_bound!r}"
            )


def eur_general(rho, axes: tuple[str, str] = ("x", "y")) -> EurResult:
    """Uncertainty relation terms from the full two-qubit state.

    Every entropy is evaluated numerically; no structure of the input is
    assumed beyond it being a valid state.
    """
    rho = qmat.validate_density_matrix(rho, dim=4)
    s_b = qmat.von_neumann_entropy(qmat._partial_trace_unchecked(rho, "B"))
    s_joint = qmat.von_neumann_entropy(rho)
    s_pb = qmat.von_neumann_entropy(measured_state(rho, axes[0])) - s_b
    s_rb = qmat.von_neumann_entropy(measured_state(rho, axes[1])) - s_b
    overlap = max_overlap_pauli(*axes)
    return EurResult(
        u=s_pb + s_rb,
        u_bound=-math.log2(overlap) + (s_joint - s_b),
        s_xb=s_pb,
        s_yb=s_rb,
        s_ab=s_joint - s_b,
    )


def eur_closed(probs: ProbabilityPair) -> EurResult:
    """Closed form of eur_general on the oscillation flavor state.

    With h the binary entropy of the survival probability:
    S(x|B) = S(y|B) = 1 - h, S(A|B) = -h, so u = 2(1 - h) and
    u_bound = 1 - h.  The uncertainty sits exactly at twice its bound.
    """
    h = binary_entropy(probs.p_survival)
    per_axis = 1.0 - h
    return EurResult(
        u=2.0 * per_axis,
        u_bound=per_axis,
        s_xb=per_axis,
        s_yb=per_axis,
        s_ab=-h,
    )


def u_bound_survival_weighted(probs: ProbabilityPair) -> float:
    """Variant bound p log2 p + p log2 q + 1 that weights both log terms
    by the survival probability.

    Published in one source in this form; it disagrees with
    ``eur_closed(...).u_bound`` away from p = 1/2 by (p - q) log2 q and
    diverges as q -> 0, so it cannot satisfy the doubling identity.
    Provided for numerical comparison only.
    """
    p = probs.p_survival
    q = probs.p_transition
    out = 1.0
    if p > 0.0:
        if q == 0.0:
            return -math.inf
        out += p * math.log2(p) + p * math.log2(q)
    return out
