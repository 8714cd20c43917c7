import json

import pytest

from pydicke2p.core import ModelParams, derive, params_for_lambda
from pydicke2p.fluctuations import FluctuationConfig, SpinFluctuations, solve_fluctuations, spin_fluctuations
from pydicke2p.meanfield import minimize
from pydicke2p.utils.serialize import dumps_json


def _spin(params):
    mf = minimize(params)
    return spin_fluctuations(params, solve_fluctuations(params, mf=mf), mf)


def test_coherent_spin_state():
    spin = _spin(params_for_lambda(1.0, 100))
    assert spin.var_jx == pytest.approx(25.0, rel=1e-14)
    assert spin.var_jy == pytest.approx(25.0, rel=1e-14)
    assert spin.jz_mean == -50.0
    assert spin.var_jz == 0.0


def test_minimum_uncertainty_in_normal_phase():
    params = params_for_lambda(1.0, 100)
    g_t = derive(params).g_t
    for ratio in (0.0, 0.3, 0.7, 0.95, 0.99):
        spin = _spin(params.with_g(ratio * g_t))
        assert spin.var_jx * spin.var_jy == pytest.approx(params.n_qubits ** 2 / 16.0, rel=1e-10)


def test_jx_fluctuations_grow_towards_critical_point():
    params = params_for_lambda(1.0, 100)
    g_t = derive(params).g_t
    boundary = g_t * (1.0 - 1.01 * FluctuationConfig().guard(params.n_qubits))
    assert _spin(params.with_g(boundary)).var_jx >= 10.0 * _spin(params).var_jx


def test_polarized_along_x_near_collapse():
    params = params_for_lambda(1.0, 100, g=0.4999)
    mf = minimize(params)
    assert abs(mf.jx_mean) / (params.n_qubits / 2) > 0.999
    assert abs(mf.jz_mean) / (params.n_qubits / 2) < 0.02


def test_superradiant_means_follow_order_parameter():
    params = ModelParams(omega=1.0, omega_q=0.005, g=0.45, n_qubits=100)
    mf = minimize(params)
    spin = spin_fluctuations(params, solve_fluctuations(params, mf=mf), mf)
    assert spin.jx_mean == pytest.approx(mf.jx_mean)
    assert spin.jz_mean == pytest.approx(mf.jz_mean)
    assert spin.jy_mean == 0.0
    assert SpinFluctuations.from_dict(json.loads(dumps_json(spin))) == spin
