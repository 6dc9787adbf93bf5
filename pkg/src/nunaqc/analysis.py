"""Baseline sweeps, asymptotics, thresholds and consistency checks.

Sweeps evaluate the closed forms row by row and spot-check a fraction of
rows against the general matrix pipeline, so a formula regression cannot
pass silently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eur import EurResult, eur_closed, eur_general
from .flavorstate import state_from_probabilities
from .naqc import MEASURES, NaqcTriple, naqc_bound, naqc_closed, naqc_general, naqc_triple
from .oscillation import (
    MODELS,
    OscParams,
    ProbabilityPair,
    oscillation_length,
    transition_probability,
)

QUANTITIES = ("u", "n_l1", "n_re", "n_sk")

SPACINGS = ("linear", "log")

# Closed form vs general matrix pipeline agreement, and the tolerance of
# the doubling/coherence identities.
DUAL_PATH_ATOL = 1e-9

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class SweepSpec:
    """One baseline scan: physics parameters, grid and probability model."""

    params: OscParams
    l_min_m: float
    l_max_m: float
    points: int
    spacing: str = "linear"
    model: str = "wavepacket"

    def __post_init__(self):
        if self.l_min_m < 0.0:
            raise ValueError(f"l_min_m must be nonnegative, got {self.l_min_m}")
        if not self.l_max_m > self.l_min_m:
            raise ValueError("l_max_m must exceed l_min_m")
        if self.points < 2:
            raise ValueError(f"points must be at least 2, got {self.points}")
        if self.spacing not in SPACINGS:
            raise ValueError(f"spacing must be one of {SPACINGS}, got {self.spacing!r}")
        if self.spacing == "log" and self.l_min_m <= 0.0:
            raise ValueError("log spacing needs l_min_m > 0")
        if self.model not in MODELS:
            raise ValueError(f"model must be one of {MODELS}, got {self.model!r}")


@dataclass(frozen=True)
class SweepRow:
    baseline_m: float
    probs: ProbabilityPair
    eur: EurResult
    naqc: NaqcTriple
    model: str


def grid_points(spec: SweepSpec) -> np.ndarray:
    if spec.spacing == "log":
        return np.geomspace(spec.l_min_m, spec.l_max_m, spec.points)
    return np.linspace(spec.l_min_m, spec.l_max_m, spec.points)


def _audit_indices(count: int, fraction: float) -> frozenset[int]:
    if fraction <= 0.0:
        return frozenset()
    if fraction >= 1.0:
        return frozenset(range(count))
    stride = max(1, round(1.0 / fraction))
    return frozenset(range(0, count, stride))


def _audit_row(probs: ProbabilityPair, eur: EurResult, triple: NaqcTriple) -> None:
    rho = state_from_probabilities(probs)
    general = eur_general(rho)
    pairs = [
        ("u", eur.u, general.u),
        ("u_bound", eur.u_bound, general.u_bound),
        ("n_l1", triple.n_l1, naqc_general(rho, "l1")),
        ("n_re", triple.n_re, naqc_general(rho, "re")),
        ("n_sk", triple.n_sk, naqc_general(rho, "sk")),
    ]
    for name, closed, matrix in pairs:
        if abs(closed - matrix) > DUAL_PATH_ATOL:
            raise RuntimeError(
                f"dual-path audit failed for {name}: closed {closed!r} vs matrix {matrix!r}"
            )


def sweep(spec: SweepSpec, audit_fraction: float = 0.01) -> list[SweepRow]:
    """Evaluate probabilities, uncertainty and steering scores on the grid.

    ``audit_fraction`` of the rows (deterministically strided, always
    including the first row) are recomputed through the general matrix
    pipeline; disagreement beyond 1e-9 raises RuntimeError.
    """
    if not 0.0 <= audit_fraction <= 1.0:
        raise ValueError(f"audit_fraction must lie in [0, 1], got {audit_fraction}")
    baselines = grid_points(spec)
    audited = _audit_indices(len(baselines), audit_fraction)
    rows = []
    for idx, baseline in enumerate(baselines):
        probs = transition_probability(spec.params, float(baseline), spec.model)
        eur = eur_closed(probs)
        triple = naqc_triple(probs)
        if idx in audited:
            _audit_row(probs, eur, triple)
        rows.append(SweepRow(float(baseline), probs, eur, triple, spec.model))
    return rows


def asymptotic_probabilities(theta_rad: float) -> ProbabilityPair:
    """Decohered long-baseline limit: p_transition -> sin^2(2 theta) / 2."""
    if not 0.0 <= theta_rad <= math.pi / 2.0:
        raise ValueError(f"theta_rad must lie in [0, pi/2], got {theta_rad}")
    p_trans = math.sin(2.0 * theta_rad) ** 2 / 2.0
    return ProbabilityPair(p_survival=1.0 - p_trans, p_transition=p_trans)


def _asymptotic_score(theta_rad: float, measure: str) -> float:
    return naqc_closed(asymptotic_probabilities(theta_rad), measure)


def threshold_angle(measure: str, value_atol: float = 1e-10) -> float:
    """Smallest mixing angle whose decohered limit still certifies NAQC.

    Solves asymptotic score = bound by bisection on [0, pi/4], stopping
    when the score sits within ``value_atol`` of the bound.  The sk case
    is degenerate: its bound is crossed by any positive angle, so 0 is
    returned.
    """
    bound = naqc_bound(measure)
    if measure == "sk":
        return 0.0
    lo, hi = 0.0, math.pi / 4.0
    mid = 0.5 * (lo + hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        residual = _asymptotic_score(mid, measure) - bound
        if abs(residual) <= value_atol:
            return mid
        if residual < 0.0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 0.0:
            break
    return mid


def _quantity_value(probs: ProbabilityPair, quantity: str) -> float:
    if quantity == "u":
        return eur_closed(probs).u
    if quantity.startswith("n_") and quantity[2:] in MEASURES:
        return naqc_closed(probs, quantity[2:])
    raise ValueError(f"unknown quantity {quantity!r}, expected one of {QUANTITIES}")


def _golden_section(f, a: float, b: float, tol: float) -> tuple[float, float]:
    c = b - _INV_PHI * (b - a)
    d = a + _INV_PHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INV_PHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INV_PHI * (b - a)
            fd = f(d)
    x = 0.5 * (a + b)
    return x, f(x)


def find_local_minima(spec: SweepSpec, quantity: str) -> list[tuple[float, float]]:
    """Interior local minima of a sweep quantity, refined by golden section.

    Grid minima are bracketed by their neighbors and refined until the
    bracket is below 1e-6 of one oscillation length.  The grid must be
    fine enough that neighboring minima are at least 3 points apart.
    Raises ValueError when the grid has no interior minimum.
    """
    baselines = grid_points(spec)
    values = np.array(
        [
            _quantity_value(transition_probability(spec.params, float(b), spec.model), quantity)
            for b in baselines
        ]
    )
    interior = [
        i
        for i in range(1, len(values) - 1)
        if values[i] < values[i - 1] and values[i] < values[i + 1]
    ]
    if not interior:
        raise ValueError("no interior local minimum on the sweep grid")
    tol = 1e-6 * oscillation_length(spec.params.energy_mev, spec.params.dm2_ev2)

    def objective(baseline: float) -> float:
        return _quantity_value(
            transition_probability(spec.params, baseline, spec.model), quantity
        )

    return [
        _golden_section(objective, float(baselines[i - 1]), float(baselines[i + 1]), tol)
        for i in interior
    ]


@dataclass(frozen=True)
class IdentityReport:
    """Residuals of the doubling and score-complement identities."""

    u: float
    u_bound: float
    n_re: float
    deviation_doubling: float
    deviation_complement: float
    ok: bool


def check_identity(probs: ProbabilityPair, phase: float = 0.0) -> IdentityReport:
    """Verify u = 2 u_bound = 2 (3 - N_re) through the matrix pipeline.

    Everything is recomputed from the explicit 4x4 state, so closed-form
    shortcuts cannot mask an inconsistency.
    """
    rho = state_from_probabilities(probs, phase)
    result = eur_general(rho)
    n_re = naqc_general(rho, "re")
    dev_doubling = abs(result.u - 2.0 * result.u_bound)
    dev_complement = abs(result.u - 2.0 * (3.0 - n_re))
    return IdentityReport(
        u=result.u,
        u_bound=result.u_bound,
        n_re=n_re,
        deviation_doubling=dev_doubling,
        deviation_complement=dev_complement,
        ok=dev_doubling <= DUAL_PATH_ATOL and dev_complement <= DUAL_PATH_ATOL,
    )
