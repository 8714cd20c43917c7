import json
import math

import numpy as np
import pytest

from pydicke2p.core import (CollapseError, DomainError, ModelParams, PhaseError, RegimeLabel, derive,
                            params_for_lambda)
from pydicke2p.fluctuations import (FluctuationConfig, FluctuationSolution, bogoliubov_diagonalize,
                                    excitation_energy_normal, excitation_energy_superradiant, fock_ground_state,
                                    phase1_effective, phase2_coefficients, phase2_effective, solve_fluctuations,
                                    squeezing_normal, squeezing_superradiant)
from pydicke2p.meanfield import analytic_beta0, minimize
from pydicke2p.utils.serialize import dumps_json

RUNNING = dict(omega=1.0, omega_q=0.005, n_qubits=100)


def _alpha(params):
    return analytic_beta0(params) / math.sqrt(params.n_qubits)


def test_decoupled_vacuum():
    solution = solve_fluctuations(ModelParams(g=0.0, **RUNNING))
    assert solution.phase is RegimeLabel.NORMAL
    assert solution.r_s == 0.0
    assert solution.var_xd == 1.0 and solution.var_pd == 1.0
    assert solution.e_exc == pytest.approx(0.005, rel=1e-15)
    assert solution.e_ground == pytest.approx(-0.25, abs=1e-15)


def test_normal_phase_running_example():
    params = ModelParams(g=0.25, **RUNNING)
    solution = solve_fluctuations(params)
    assert solution.e_exc == pytest.approx(0.005 * math.sqrt(0.5), rel=1e-12)
    assert solution.e_exc == pytest.approx(excitation_energy_normal(params), rel=1e-12)
    assert solution.r_s == pytest.approx(0.25 * math.log(0.5), rel=1e-12)
    assert solution.r_s == pytest.approx(squeezing_normal(params), rel=1e-12)
    assert solution.var_pd == pytest.approx(math.sqrt(0.5), rel=1e-12)
    assert solution.var_xd == pytest.approx(1.0 / math.sqrt(0.5), rel=1e-12)
    assert solution.var_xa == 1.0 and solution.r_a == 0.0
    assert solution.e_ground_closed_form


def test_normal_phase_against_fock():
    form = phase1_effective(ModelParams(g=0.25, **RUNNING))
    solution = solve_fluctuations(ModelParams(g=0.25, **RUNNING))
    reference = fock_ground_state(form)
    assert reference.e_exc == pytest.approx(solution.e_exc, rel=1e-8)
    assert reference.e_ground == pytest.approx(solution.e_ground, rel=1e-8)
    assert reference.var_x == pytest.approx(solution.var_xd, rel=1e-8)
    assert reference.var_p == pytest.approx(solution.var_pd, rel=1e-8)


def test_guard_band():
    params = ModelParams(g=0.0, **RUNNING)
    g_t = derive(params).g_t
    with pytest.raises(PhaseError):
        solve_fluctuations(params.with_g(g_t * (1.0 - 0.05 / params.n_qubits)))
    with pytest.raises(PhaseError):
        solve_fluctuations(params.with_g(g_t * (1.0 + 0.05 / params.n_qubits)))
    with pytest.raises(PhaseError):
        phase1_effective(params.with_g(g_t * 1.01))
    loose = FluctuationConfig(guard_factor=0.01)
    assert solve_fluctuations(params.with_g(g_t * (1.0 - 0.05 / params.n_qubits)), loose).e_exc > 0


def test_errors():
    with pytest.raises(CollapseError):
        solve_fluctuations(ModelParams(g=0.6, **RUNNING))
    with pytest.raises(DomainError):
        solve_fluctuations(ModelParams(g=0.2, coupling_order='one', **RUNNING))
    with pytest.raises(PhaseError):
        phase2_coefficients(ModelParams(g=0.3, **RUNNING), minimize(ModelParams(g=0.3, **RUNNING)))


def test_no_spt_window_uses_normal_form():
    params = ModelParams(omega=1.0, omega_q=0.02, g=0.45, n_qubits=100)
    solution = solve_fluctuations(params)
    assert solution.phase is RegimeLabel.NO_SPT_WINDOW
    assert solution.e_exc == pytest.approx(excitation_energy_normal(params), rel=1e-12)


def test_excitation_energy_shape_lambda_one():
    params = params_for_lambda(1.0, 100)
    g_t = derive(params).g_t
    assert solve_fluctuations(params).e_exc / params.omega_q == pytest.approx(1.0, rel=1e-15)
    grid = np.linspace(0.0, g_t * 0.99, 50)
    values = [solve_fluctuations(params.with_g(g)).e_exc / params.omega_q for g in grid]
    assert all(b < a for a, b in zip(values, values[1:]))
    boundary = g_t * (1.0 - 1.01 * FluctuationConfig().guard(params.n_qubits))
    assert solve_fluctuations(params.with_g(boundary)).e_exc / params.omega_q < 0.05
    assert excitation_energy_normal(params.with_g(g_t * (1.0 - 1.0e-7))) / params.omega_q < 1.0e-3


def test_two_sided_limit_at_critical_point():
    params = params_for_lambda(1.0, 100)
    g_t = derive(params).g_t
    omega_q = params.omega_q
    for eps in (1.0e-3, 1.0e-4, 1.0e-5, 1.0e-7):
        below = excitation_energy_normal(params.with_g(g_t * (1.0 - eps)))
        above_params = params.with_g(g_t * (1.0 + eps))
        above = excitation_energy_superradiant(above_params, _alpha(above_params))
        assert below <= omega_q * math.sqrt(2.0 * eps) * 1.1
        assert above <= 2.0 * omega_q * math.sqrt(eps) * 1.1
    assert abs(below - above) < 1.0e-3 * omega_q


def test_assembled_form_matches_closed_form():
    params = params_for_lambda(1.0, 100)
    g_t = derive(params).g_t
    for g in np.linspace(g_t * 1.01, 0.5 * 0.99, 30):
        point = params.with_g(g)
        solution = solve_fluctuations(point)
        assert solution.phase is RegimeLabel.SUPERRADIANT
        assert not solution.e_ground_closed_form
        assert solution.e_exc == pytest.approx(excitation_energy_superradiant(point, _alpha(point)), rel=1e-8)
        assert solution.r_s == pytest.approx(squeezing_superradiant(point, _alpha(point)), rel=1e-8, abs=1e-12)


def test_running_example_coefficients():
    params = ModelParams(g=0.45, **RUNNING)
    mf = minimize(params)
    coeffs = phase2_coefficients(params, mf, finite_n=False)
    assert coeffs.r_a2 == pytest.approx(mf.r_a_mf, rel=1e-12)
    assert coeffs.lambda4 == pytest.approx(0.25, rel=1e-14)
    form = phase2_effective(params, coeffs)
    assert bogoliubov_diagonalize(form).e_exc == pytest.approx(
        excitation_energy_superradiant(params, mf.beta / 10.0), rel=1e-8)


def test_coefficients_near_critical_point():
    params = params_for_lambda(1.0, 10000)
    g = derive(params).g_t * (1.0 + 1.0e-6)
    coeffs = phase2_coefficients(params.with_g(g), minimize(params.with_g(g)))
    assert coeffs.lambda0 == pytest.approx(1.0, abs=1e-4)
    assert coeffs.lambda2 == pytest.approx(g, rel=1e-2)
    assert abs(coeffs.lambda3) < 1.0e-2
    assert abs(coeffs.r_a2) < 1.0e-2


def test_finite_size_correction_of_photon_squeezing():
    differences = []
    for n in (100, 200):
        params = params_for_lambda(1.0, n, g=0.45)
        differences.append(solve_fluctuations(params).r_a - minimize(params).r_a_mf)
    assert differences[0] > 0
    assert differences[0] / differences[1] == pytest.approx(2.0, rel=0.2)


def test_photon_squeezing_diverges_at_collapse():
    params = params_for_lambda(1.0, 10000)
    values = [phase2_coefficients(params.with_g(g), minimize(params.with_g(g))).r_a2 for g in (0.45, 0.49, 0.499, 0.4999)]
    assert all(b > a for a, b in zip(values, values[1:]))
    assert values[-1] > 2.0


def test_beta_correction_is_small():
    params = ModelParams(g=0.45, **RUNNING)
    solution = solve_fluctuations(params)
    assert abs(solution.beta_correction) < 1.0


def test_beta_correction_stays_bounded_as_n_doubles():
    scaled = []
    for n in (1000, 2000):
        solution = solve_fluctuations(params_for_lambda(1.0, n, g=0.42))
        scaled.append(abs(solution.beta_correction) * math.sqrt(n))
    assert np.isfinite(scaled).all()
    assert scaled[1] <= 2.0 * scaled[0] + 1e-12


@pytest.mark.parametrize("g", [0.25, 0.42])
def test_quadrature_variances_saturate_uncertainty(g):
    solution = solve_fluctuations(params_for_lambda(1.0, 1000, g=g))
    assert solution.var_xa * solution.var_pa == pytest.approx(1.0, rel=1e-12)
    assert solution.var_xd * solution.var_pd == pytest.approx(1.0, rel=1e-12)


def test_json_round_trip():
    solution = solve_fluctuations(ModelParams(g=0.45, **RUNNING))
    assert FluctuationSolution.from_dict(json.loads(dumps_json(solution))) == solution
