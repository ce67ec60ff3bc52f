import numpy as np
import pytest

import nmwit
from nmwit.errors import DimensionMismatch, EmptyGrid, MapNotPositive, ParameterOutOfRange
from nmwit.entanglement import bloch_factors

from oracles import (
    rand_density,
    rand_separable,
    werner_extended_min_eig,
    werner_threshold_closed,
)


def pt(g1, g2):
    return nmwit.MapFamilyPoint(g1, g2)


# --- the map family ----------------------------------------------------------

def test_family_map_identity_point():
    rho = rand_density(np.random.default_rng(61), 2)
    assert np.abs(nmwit.family_map_apply(pt(0.0, 0.0), rho) - rho).max() < 1e-15


def test_family_map_half_half_negates_bloch_vector():
    rng = np.random.default_rng(62)
    for _ in range(10):
        rho = rand_density(rng, 2)
        out = nmwit.family_map_apply(pt(0.5, 0.5), rho)
        assert np.abs(out - (np.trace(rho) * np.eye(2) - rho)).max() < 1e-12


def test_family_map_bloch_action_on_axis_states():
    g1, g2 = 0.3, 0.25
    s, u = 1 - 2 * g1 - 2 * g2, 1 - 4 * g1
    paulis = (nmwit.SIGMA_X, nmwit.SIGMA_Y, nmwit.SIGMA_Z)
    for axis, factor in zip(paulis, (s, s, u)):
        for sign in (1.0, -1.0):
            rho = (np.eye(2) + sign * axis) / 2
            out = nmwit.family_map_apply(pt(g1, g2), rho)
            bloch_out = [np.trace(p @ out).real for p in paulis]
            bloch_in = [np.trace(p @ rho).real * factor for p in paulis]
            assert np.abs(np.array(bloch_out) - bloch_in).max() < 1e-12


def test_family_map_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        nmwit.family_map_apply(pt(0.1, 0.1), np.eye(4))


# --- positivity --------------------------------------------------------------

def test_positivity_known_points():
    assert nmwit.is_positive(pt(0.5, 0.5), 2000)
    assert nmwit.is_positive(pt(0.0, 0.0), 2000)
    assert not nmwit.is_positive(pt(0.5, 0.9), 2000)


def test_positivity_sampling_agrees_with_closed_form():
    rng = np.random.default_rng(63)
    for _ in range(40):
        point = pt(rng.uniform(0, 0.7), rng.uniform(0, 1.1))
        got = nmwit.is_positive(point, 3000, seed=5)  # raises on disagreement
        s, u = bloch_factors(point)
        assert got == (max(abs(s), abs(u)) <= 1 + 2e-9)


def test_positivity_is_deterministic_per_seed():
    a = nmwit.is_positive(pt(0.31, 0.42), 500, seed=9)
    b = nmwit.is_positive(pt(0.31, 0.42), 500, seed=9)
    assert a == b


def test_batch_positivity_path_matches_map_application():
    # the vectorized sampling path must agree with family_map_apply + eigvalsh
    from nmwit.entanglement import _batch_output_min_eig, _sample_bloch, sample_pure_states

    rng = np.random.default_rng(68)
    for point in (pt(0.5, 0.5), pt(0.3, 0.8), pt(0.55, 0.2)):
        nx, ny, z = _sample_bloch(50, np.random.default_rng(4))
        fast = _batch_output_min_eig(point, nx, ny, z)
        rhos = sample_pure_states(50, np.random.default_rng(4))
        slow = [
            np.linalg.eigvalsh(nmwit.family_map_apply(point, rho))[0] for rho in rhos
        ]
        assert np.abs(fast - slow).max() < 1e-12


# --- complete positivity -------------------------------------------------------

def test_cp_known_points():
    assert not nmwit.is_cp(pt(0.5, 0.5))  # Choi weight 1 - 2g1 - g2 = -1/2
    assert nmwit.is_cp(pt(0.0, 0.0))
    assert nmwit.is_cp(pt(0.2, 0.2))  # weights (0.4, 0.2, 0.2, 0.2)


def test_cp_closed_form_matches_diagonalization():
    rng = np.random.default_rng(64)
    for _ in range(40):
        point = pt(rng.uniform(0, 0.7), rng.uniform(0, 1.1))
        nmwit.is_cp(point)  # raises on closed-form/numeric mismatch


# --- Werner states -----------------------------------------------------------

def test_werner_extremes():
    assert np.abs(nmwit.werner(0.0).matrix - np.eye(4) / 4).max() < 1e-15
    psi_m = np.array([0, 1, -1, 0]) / np.sqrt(2)
    assert np.abs(nmwit.werner(1.0).matrix - nmwit.projector(psi_m)).max() < 1e-15


def test_werner_half_spectrum():
    vals = np.linalg.eigvalsh(nmwit.werner(0.5).matrix)
    assert np.abs(vals - [0.125, 0.125, 0.125, 0.625]).max() < 1e-12


def test_werner_rejects_out_of_range():
    for p in (-0.2, 1.01):
        with pytest.raises(ParameterOutOfRange):
            nmwit.werner(p)


# --- detection ---------------------------------------------------------------

@pytest.mark.parametrize("p", [0.0, 0.2, 1 / 3, 0.5, 0.9, 1.0])
def test_reduction_point_closed_form(p):
    detected, lam = nmwit.detect_entanglement(nmwit.werner(p).matrix, pt(0.5, 0.5))
    assert lam == pytest.approx((1 - 3 * p) / 4, abs=1e-12)
    assert detected == (p > 1 / 3)


def test_detection_threshold_boundary_not_detected():
    detected, _ = nmwit.detect_entanglement(nmwit.werner(1 / 3).matrix, pt(0.5, 0.5))
    assert not detected


def test_product_states_never_detected():
    rng = np.random.default_rng(65)
    for _ in range(20):
        state = np.kron(rand_density(rng, 2), rand_density(rng, 2))
        detected, lam = nmwit.detect_entanglement(state, pt(0.5, 0.5))
        assert not detected and lam >= -1e-12


def test_separable_mixtures_never_detected():
    rng = np.random.default_rng(66)
    points = [pt(0.5, 0.5), pt(0.25, 0.6), pt(0.4, 0.45)]
    for _ in range(500):
        state = rand_separable(rng)
        for point in points:
            _, lam = nmwit.detect_entanglement(state, point)
            assert lam >= -1e-10


def test_detect_rejects_non_positive_map():
    with pytest.raises(MapNotPositive):
        nmwit.detect_entanglement(nmwit.werner(0.5).matrix, pt(0.5, 0.9))


def test_detect_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        nmwit.detect_entanglement(np.eye(2) / 2, pt(0.5, 0.5))


def test_extended_spectrum_matches_closed_form():
    rng = np.random.default_rng(67)
    for _ in range(25):
        g1, g2 = rng.uniform(0, 0.5), rng.uniform(0, 0.6)
        if max(abs(1 - 2 * g1 - 2 * g2), abs(1 - 4 * g1)) > 1:
            continue
        p = rng.uniform(0, 1)
        _, lam = nmwit.detect_entanglement(nmwit.werner(p).matrix, pt(g1, g2))
        assert lam == pytest.approx(werner_extended_min_eig(g1, g2, p), abs=1e-12)


# --- thresholds and the phase scan --------------------------------------------

def test_werner_threshold_full_range_point():
    thr = nmwit.werner_threshold(pt(0.5, 0.5))
    assert abs(thr - 1 / 3) < 1e-6


def test_werner_threshold_matches_closed_form():
    for g1, g2 in [(0.25, 0.6), (0.3, 0.5), (0.4, 0.45)]:
        thr = nmwit.werner_threshold(pt(g1, g2))
        assert abs(thr - werner_threshold_closed(g1, g2)) < 2e-6


def test_werner_threshold_none_for_cp_points():
    assert nmwit.werner_threshold(pt(0.2, 0.2)) is None


def test_phase_scan_small_grid():
    rows = nmwit.phase_scan((0.0, 0.5), (0.0, 1.0), (3, 5), n_samples=2000, seed=3)
    assert len(rows) == 15
    by_point = {(round(r.gamma1, 6), round(r.gamma2, 6)): r for r in rows}
    r = by_point[(0.5, 0.5)]
    assert r.positive and not r.cp
    assert abs(r.werner_threshold - 1 / 3) < 1e-6
    r = by_point[(0.0, 0.0)]
    assert r.positive and r.cp and r.werner_threshold is None
    r = by_point[(0.5, 1.0)]
    assert not r.positive and r.werner_threshold is None


def test_phase_scan_rejects_empty_grid():
    with pytest.raises(EmptyGrid):
        nmwit.phase_scan((0.0, 0.5), (0.0, 1.0), (0, 5))
