"""Two-flavor neutrino mixing and oscillation probabilities.

Probabilities are available in two models: ``planewave`` (undamped
interference) and ``wavepacket`` (interference suppressed by a Gaussian
decoherence factor on the scale of the coherence length, plus a
baseline-independent localization factor).

Unit conventions at the public surface: energies in MeV, mass-squared
splittings in eV^2, every length in meters.  Angles are radians unless a
converter says otherwise.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

HBARC_MEV_FM = 197.3269804
# hbar*c in eV*m; MeV*fm = 1e6 eV * 1e-15 m.
HBARC_EV_M = HBARC_MEV_FM * 1e-9

PROBABILITY_ATOL = 1e-12

MODELS = ("wavepacket", "planewave")

PRESET_NAMES = ("dayabay", "kamland", "minos")

KAMLAND_ANGLE_READINGS = ("tan2_theta", "tan2_2theta")


def theta_from_sin2_2theta(value: float) -> float:
    """Mixing angle in [0, pi/4] from sin^2(2 theta)."""
    if not 0.0 <= value <= 1.0:
        raise ValueError(f"sin^2(2 theta) must lie in [0, 1], got {value}")
    return 0.5 * math.asin(math.sqrt(value))


def theta_from_tan2_theta(value: float) -> float:
    """Mixing angle in [0, pi/2) from tan^2(theta)."""
    if value < 0.0:
        raise ValueError(f"tan^2(theta) must be nonnegative, got {value}")
    return math.atan(math.sqrt(value))


def theta_from_tan2_2theta(value: float) -> float:
    """Mixing angle in [0, pi/4) from tan^2(2 theta)."""
    if value < 0.0:
        raise ValueError(f"tan^2(2 theta) must be nonnegative, got {value}")
    return 0.5 * math.atan(math.sqrt(value))


@dataclass(frozen=True)
class OscParams:
    """Physical parameters of a two-flavor oscillation setup.

    theta_rad: mixing angle in [0, pi/2].
    dm2_ev2: mass-squared splitting m2^2 - m1^2 > 0, in eV^2.
    energy_mev: neutrino energy, MeV.
    sigma_x_m: effective wave-packet width, meters (production and
        detection widths combined in quadrature).
    xi: dimensionless localization parameter of the combined width.
    """

    theta_rad: float
    dm2_ev2: float
    energy_mev: float
    sigma_x_m: float = 0.0
    xi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta_rad <= math.pi / 2.0:
            raise ValueError(f"theta_rad must lie in [0, pi/2], got {self.theta_rad}")
        if self.dm2_ev2 <= 0.0:
            raise ValueError(f"dm2_ev2 must be positive, got {self.dm2_ev2}")
        if self.energy_mev <= 0.0:
            raise ValueError(f"energy_mev must be positive, got {self.energy_mev}")
        if self.sigma_x_m < 0.0:
            raise ValueError(f"sigma_x_m must be nonnegative, got {self.sigma_x_m}")
        if not math.isfinite(self.xi):
            raise ValueError(f"xi must be finite, got {self.xi}")

    @classmethod
    def with_split_widths(
        cls,
        theta_rad: float,
        dm2_ev2: float,
        energy_mev: float,
        sigma_x_production_m: float,
        sigma_x_detection_m: float = 0.0,
        xi_production: float = 0.0,
        xi_detection: float = 0.0,
    ) -> "OscParams":
        """Combine production and detection widths into effective (sigma_x, xi).

        sigma_x^2 = sigma_P^2 + sigma_D^2 and
        xi^2 sigma_x^2 = xi_P^2 sigma_P^2 + xi_D^2 sigma_D^2; the positive
        root is taken for xi.
        """
        if sigma_x_production_m < 0.0 or sigma_x_detection_m < 0.0:
            raise ValueError("wave-packet widths must be nonnegative")
        sigma = math.hypot(sigma_x_production_m, sigma_x_detection_m)
        if sigma > 0.0:
            xi = math.sqrt(
                (xi_production * sigma_x_production_m) ** 2
                + (xi_detection * sigma_x_detection_m) ** 2
            ) / sigma
        else:
            xi = 0.0
        return cls(theta_rad, dm2_ev2, energy_mev, sigma, xi)


@dataclass(frozen=True)
class ProbabilityPair:
    """Survival and transition probabilities of one detection event."""

    p_survival: float
    p_transition: float

    def __post_init__(self):
        for name, p in (("p_survival", self.p_survival), ("p_transition", self.p_transition)):
            if not -PROBABILITY_ATOL <= p <= 1.0 + PROBABILITY_ATOL:
                raise ValueError(f"{name} must lie in [0, 1], got {p}")
            object.__setattr__(self, name, float(p))
        dev = abs(self.p_survival + self.p_transition - 1.0)
        if dev > PROBABILITY_ATOL:
            raise ValueError(
                f"probabilities must sum to 1 within {PROBABILITY_ATOL}, deviation {dev:.3e}"
            )


@dataclass(frozen=True)
class ExperimentPreset:
    """Published mixing parameters of one experiment.

    ``angle_parameterization`` and ``angle_value`` record the quoted form
    the angle was converted from.
    """

    name: str
    theta_rad: float
    dm2_ev2: float
    channel: str
    angle_parameterization: str
    angle_value: float
    notes: str = ""


def preset(name: str, kamland_angle_reading: str = "tan2_theta") -> ExperimentPreset:
    """Stored experiment parameters by name ('dayabay', 'kamland', 'minos').

    The KamLAND angle is quoted as the number 0.47, which different
    sources attach to tan^2(theta) or tan^2(2 theta).  The default
    reading is ``tan2_theta`` (the parameterization KamLAND itself
    reports); pass ``kamland_angle_reading='tan2_2theta'`` for the other
    reading.
    """
    if name == "dayabay":
        return ExperimentPreset(
            name="dayabay",
            theta_rad=theta_from_sin2_2theta(0.084),
            dm2_ev2=2.42e-3,
            channel="reactor anti-nu_e disappearance",
            angle_parameterization="sin2_2theta",
            angle_value=0.084,
        )
    if name == "kamland":
        if kamland_angle_reading not in KAMLAND_ANGLE_READINGS:
            raise ValueError(
                f"kamland_angle_reading must be one of {KAMLAND_ANGLE_READINGS}, "
                f"got {kamland_angle_reading!r}"
            )
        if kamland_angle_reading == "tan2_theta":
            theta = theta_from_tan2_theta(0.47)
        else:
            theta = theta_from_tan2_2theta(0.47)
        return ExperimentPreset(
            name="kamland",
            theta_rad=theta,
            dm2_ev2=7.49e-5,
            channel="long-baseline reactor anti-nu_e disappearance",
            angle_parameterization=kamland_angle_reading,
            angle_value=0.47,
            notes=(
                "angle value 0.47 is quoted as tan^2(theta) by the experiment "
                "but appears as tan^2(2 theta) in some summaries; reading is "
                "selectable and defaults to tan^2(theta)"
            ),
        )
    if name == "minos":
        return ExperimentPreset(
            name="minos",
            theta_rad=theta_from_sin2_2theta(0.95),
            dm2_ev2=2.32e-3,
            channel="accelerator nu_mu disappearance",
            angle_parameterization="sin2_2theta",
            angle_value=0.95,
        )
    raise ValueError(f"unknown preset {name!r}, expected one of {PRESET_NAMES}")


def mixing_matrix(theta_rad: float) -> np.ndarray:
    """2x2 real mixing matrix; rows are flavors, columns mass states."""
    c, s = math.cos(theta_rad), math.sin(theta_rad)
    return np.array([[c, s], [-s, c]])


def oscillation_length(energy_mev: float, dm2_ev2: float) -> float:
    """L_osc = 4 pi E / dm2, in meters; one interference period."""
    if energy_mev <= 0.0:
        raise ValueError(f"energy_mev must be positive, got {energy_mev}")
    if dm2_ev2 <= 0.0:
        raise ValueError(f"dm2_ev2 must be positive, got {dm2_ev2}")
    return 4.0 * math.pi * (energy_mev * 1e6) / dm2_ev2 * HBARC_EV_M


def coherence_length(energy_mev: float, dm2_ev2: float, sigma_x_m: float) -> float:
    """L_coh = 4 sqrt(2) E^2 sigma_x / dm2, in meters.

    Baseline beyond which the mass-state wave packets stop overlapping.
    E^2/dm2 is evaluated in eV so the result carries sigma_x's meters.
    """
    if energy_mev <= 0.0:
        raise ValueError(f"energy_mev must be positive, got {energy_mev}")
    if dm2_ev2 <= 0.0:
        raise ValueError(f"dm2_ev2 must be positive, got {dm2_ev2}")
    if sigma_x_m < 0.0:
        raise ValueError(f"sigma_x_m must be nonnegative, got {sigma_x_m}")
    return 4.0 * math.sqrt(2.0) * (energy_mev * 1e6) ** 2 / dm2_ev2 * sigma_x_m


def _pair_factor(params: OscParams, baseline_m: float, dm2_jk: float, damped: bool) -> complex:
    """Interference factor of one ordered mass pair (j, k); dm2_jk is signed."""
    if dm2_jk == 0.0:
        return 1.0 + 0.0j
    losc = 4.0 * math.pi * (params.energy_mev * 1e6) / dm2_jk * HBARC_EV_M
    re = 0.0
    if damped:
        lcoh = coherence_length(params.energy_mev, abs(dm2_jk), params.sigma_x_m)
        if lcoh > 0.0:
            re -= (baseline_m / lcoh) ** 2
        elif baseline_m > 0.0:
            # Zero width: wave packets separate immediately past the source.
            return 0.0j
        re -= 2.0 * math.pi**2 * (1.0 - params.xi) ** 2 * (params.sigma_x_m / losc) ** 2
    im = -2.0 * math.pi * baseline_m / losc
    return cmath.exp(complex(re, im))


def _flavor_projection(params: OscParams, baseline_m: float, beta: int, damped: bool) -> float:
    """P(alpha -> flavor ``beta``) via the double sum over mass pairs."""
    u = mixing_matrix(params.theta_rad)
    dm2 = ((0.0, -params.dm2_ev2), (params.dm2_ev2, 0.0))
    total = 0.0 + 0.0j
    for j in (0, 1):
        for k in (0, 1):
            weight = u[0, j] * u[0, k] * u[beta, j] * u[beta, k]
            total += weight * _pair_factor(params, baseline_m, dm2[j][k], damped)
    if abs(total.imag) > PROBABILITY_ATOL:
        raise ArithmeticError(f"probability has residual imaginary part {total.imag:.3e}")
    p = total.real
    if -PROBABILITY_ATOL <= p < 0.0:
        return 0.0
    if 1.0 < p <= 1.0 + PROBABILITY_ATOL:
        return 1.0
    return p


def _probability_pair(params: OscParams, baseline_m: float, damped: bool) -> ProbabilityPair:
    if baseline_m < 0.0:
        raise ValueError(f"baseline_m must be nonnegative, got {baseline_m}")
    return ProbabilityPair(
        p_survival=_flavor_projection(params, baseline_m, 0, damped),
        p_transition=_flavor_projection(params, baseline_m, 1, damped),
    )


def transition_probability_wp(params: OscParams, baseline_m: float) -> ProbabilityPair:
    """Wave-packet probabilities at one baseline.

    Interference between mass states j and k is damped by
    exp[-(L/L_coh_jk)^2 - 2 pi^2 (1 - xi)^2 (sigma_x / L_osc_jk)^2].
    """
    return _probability_pair(params, baseline_m, damped=True)


def transition_probability_pw(params: OscParams, baseline_m: float) -> ProbabilityPair:
    """Plane-wave probabilities; equals sin^2(2 theta) sin^2(pi L / L_osc)."""
    return _probability_pair(params, baseline_m, damped=False)


def transition_probability(params: OscParams, baseline_m: float, model: str) -> ProbabilityPair:
    if model == "wavepacket":
        return transition_probability_wp(params, baseline_m)
    if model == "planewave":
        return transition_probability_pw(params, baseline_m)
    raise ValueError(f"unknown model {model!r}, expected one of {MODELS}")


def mass_basis_density(params: OscParams, baseline_m: float) -> np.ndarray:
    """2x2 density matrix of the propagated state in the mass basis.

    Entry (j, k) is U*_{alpha j} U_{alpha k} times the damped interference
    factor; projecting onto a flavor row of the mixing matrix reproduces
    the wave-packet probability of that flavor.
    """
    if baseline_m < 0.0:
        raise ValueError(f"baseline_m must be nonnegative, got {baseline_m}")
    u = mixing_matrix(params.theta_rad)
    dm2 = ((0.0, -params.dm2_ev2), (params.dm2_ev2, 0.0))
    rho = np.zeros((2, 2), dtype=complex)
    for j in (0, 1):
        for k in (0, 1):
            rho[j, k] = u[0, j] * u[0, k] * _pair_factor(params, baseline_m, dm2[j][k], True)
    return rho


def params_from_config(cfg: dict) -> OscParams:
    """Build OscParams from a JSON-style mapping.

    Recognized keys: ``name`` (preset) or exactly one of ``theta_rad`` /
    ``sin2_2theta`` / ``tan2_theta`` plus ``dm2_ev2``; ``energy_mev``
    (required); ``sigma_x_m`` and ``xi`` (optional, default 0); for the
    KamLAND preset, optional ``kamland_angle_reading``.
    """
    angle_keys = [k for k in ("theta_rad", "sin2_2theta", "tan2_theta") if k in cfg]
    if "name" in cfg:
        if angle_keys:
            raise ValueError("config must give either 'name' or an explicit angle, not both")
        p = preset(cfg["name"], cfg.get("kamland_angle_reading", "tan2_theta"))
        theta = p.theta_rad
        dm2 = float(cfg.get("dm2_ev2", p.dm2_ev2))
    else:
        if len(angle_keys) != 1:
            raise ValueError(
                "config needs exactly one of theta_rad / sin2_2theta / tan2_theta, "
                f"got {angle_keys or 'none'}"
            )
        key = angle_keys[0]
        raw = float(cfg[key])
        if key == "theta_rad":
            theta = raw
        elif key == "sin2_2theta":
            theta = theta_from_sin2_2theta(raw)
        else:
            theta = theta_from_tan2_theta(raw)
        if "dm2_ev2" not in cfg:
            raise ValueError("config with an explicit angle also needs dm2_ev2")
        dm2 = float(cfg["dm2_ev2"])
    if "energy_mev" not in cfg:
        raise ValueError("config needs energy_mev")
    return OscParams(
        theta_rad=theta,
        dm2_ev2=dm2,
        energy_mev=float(cfg["energy_mev"]),
        sigma_x_m=float(cfg.get("sigma_x_m", 0.0)),
        xi=float(cfg.get("xi", 0.0)),
    )


def load_params(path: str) -> OscParams:
    """Read a JSON parameter file; see params_from_config for the schema."""
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    if not isinstance(cfg, dict):
        raise ValueError(f"parameter file {path} must hold a JSON object")
    return params_from_config(cfg)
