import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_qubit_density
from nunaqc import eur, flavorstate, naqc, qmat
from nunaqc.oscillation import ProbabilityPair

probabilities = st.floats(0.0, 1.0)
phases = st.floats(0.0, 2.0 * math.pi)

PLUS = 0.5 * np.array([[1.0, 1.0], [1.0, 1.0]], dtype=complex)


def pair(p):
    return ProbabilityPair(p_survival=p, p_transition=1.0 - p)


def test_bounds():
    assert naqc.naqc_bound("l1") == pytest.approx(math.sqrt(6.0), abs=1e-15)
    assert naqc.naqc_bound("re") == 2.23
    assert naqc.naqc_bound("sk") == 2.0
    with pytest.raises(ValueError, match="measure"):
        naqc.naqc_bound("tr")


def test_coherence_l1_cases():
    assert naqc.coherence_l1(np.diag([0.3, 0.7]), "z") == pytest.approx(0.0, abs=1e-15)
    assert naqc.coherence_l1(PLUS, "z") == pytest.approx(1.0, abs=1e-12)
    assert naqc.coherence_l1(np.eye(2) / 2.0, "x") == pytest.approx(0.0, abs=1e-15)


def test_coherence_re_cases():
    assert naqc.coherence_re(PLUS, "z") == pytest.approx(1.0, abs=1e-10)
    assert naqc.coherence_re(np.diag([0.3, 0.7]), "z") == pytest.approx(0.0, abs=1e-12)


def test_coherence_sk_cases():
    assert naqc.coherence_sk(PLUS, "z") == pytest.approx(1.0, abs=1e-10)
    assert naqc.coherence_sk(np.diag([0.3, 0.7]), "z") == pytest.approx(0.0, abs=1e-12)


@given(st.floats(0.0, math.pi), st.floats(0.0, 2.0 * math.pi))
def test_pure_qubit_re_below_l1(polar, azimuth):
    v = np.array(
        [math.cos(polar / 2.0), math.sin(polar / 2.0) * np.exp(1j * azimuth)]
    )
    rho = np.outer(v, v.conj())
    for axis in qmat.AXES:
        assert naqc.coherence_re(rho, axis) <= naqc.coherence_l1(rho, axis) + 1e-10


@given(st.integers(0, 2**32 - 1), st.sampled_from(["x", "y", "z"]))
def test_coherence_matches_bloch_forms(seed, axis):
    # closed Bloch-parameterized forms vs direct matrix evaluation
    rho = random_qubit_density(np.random.default_rng(seed))
    b = naqc.qubit_bloch_vector(rho)
    assert naqc.coherence_l1(rho, axis) == pytest.approx(
        naqc.coherence_l1_bloch(b, axis), abs=1e-10
    )
    assert naqc.coherence_re(rho, axis) == pytest.approx(
        naqc.coherence_re_bloch(b, axis), abs=1e-10
    )
    assert naqc.coherence_sk(rho, axis) == pytest.approx(
        naqc.coherence_sk_bloch(b, axis), abs=1e-8
    )


def test_sk_bloch_singular_at_origin():
    with pytest.raises(ValueError):
        naqc.coherence_sk_bloch(np.zeros(3), "z")
    # matrix form has no such singularity
    assert naqc.coherence_sk(np.eye(2) / 2.0, "z") == pytest.approx(0.0, abs=1e-12)


def test_naqc_general_fully_mixed():
    for measure in naqc.MEASURES:
        assert naqc.naqc_general(np.eye(4) / 4.0, measure) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 1.0])
def test_naqc_general_probability_endpoints(p):
    rho = flavorstate.state_from_probabilities(pair(p))
    for measure in naqc.MEASURES:
        assert naqc.naqc_general(rho, measure) == pytest.approx(2.0, abs=1e-12)


def test_naqc_general_invalid_measure():
    with pytest.raises(ValueError, match="measure"):
        naqc.naqc_general(np.eye(4) / 4.0, "wigner")


@given(probabilities, phases)
def test_naqc_dual_path(p, phi):
    rho = flavorstate.state_from_probabilities(pair(p), phase=phi)
    for measure in naqc.MEASURES:
        assert naqc.naqc_general(rho, measure) == pytest.approx(
            naqc.naqc_closed(pair(p), measure), abs=1e-9
        )


def test_naqc_closed_values():
    for measure in naqc.MEASURES:
        assert naqc.naqc_closed(pair(0.5), measure) == pytest.approx(3.0, abs=1e-15)
        assert naqc.naqc_closed(pair(1.0), measure) == pytest.approx(2.0, abs=1e-15)
    assert naqc.naqc_closed(pair(0.9), "l1") == pytest.approx(2.6, abs=1e-12)
    assert naqc.naqc_closed(pair(0.9), "sk") == pytest.approx(2.36, abs=1e-12)
    assert naqc.naqc_closed(pair(0.9), "re") == pytest.approx(
        2.0 + eur.binary_entropy(0.9), abs=1e-14
    )


def test_naqc_triple_attainment_flags():
    t = naqc.naqc_triple(pair(0.5))
    assert (t.attained_l1, t.attained_re, t.attained_sk) == (True, True, True)
    # boundary values equal the bounds: strict comparison reports False
    t = naqc.naqc_triple(pair(1.0))
    assert (t.attained_l1, t.attained_re, t.attained_sk) == (False, False, False)
    t = naqc.naqc_triple(pair(0.9))
    assert t.n_l1 == pytest.approx(2.6)
    assert (t.attained_l1, t.attained_re, t.attained_sk) == (True, True, True)


def test_hierarchy_on_dense_grid():
    for p in np.linspace(0.0, 1.0, 2001):
        triple = naqc.naqc_triple(pair(float(p)))
        assert triple.n_l1 >= triple.n_re - 1e-12
        assert triple.n_l1 >= triple.n_sk - 1e-12


@given(probabilities)
def test_closed_forms_symmetric_and_capped(p):
    forward = pair(p)
    mirrored = ProbabilityPair(forward.p_transition, forward.p_survival)
    for measure in naqc.MEASURES:
        a = naqc.naqc_closed(forward, measure)
        b = naqc.naqc_closed(mirrored, measure)
        assert a == pytest.approx(b, abs=1e-12)
        assert 2.0 - 1e-12 <= a <= 3.0 + 1e-12


@given(probabilities)
def test_re_score_complements_uncertainty_bound(p):
    # 3 - N_re equals the uncertainty lower bound
    assert 3.0 - naqc.naqc_closed(pair(p), "re") == pytest.approx(
        eur.eur_closed(pair(p)).u_bound, abs=1e-12
    )
