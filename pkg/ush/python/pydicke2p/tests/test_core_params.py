import logging
import math

import pytest

from pydicke2p.core import (CollapseError, CouplingOrder, DomainError, ModelParams, RegimeLabel, derive,
                            params_for_lambda, regime_classify, validate)

RUNNING = dict(omega=1.0, omega_q=0.005, n_qubits=100)


def test_validate_running_example():
    assert validate(ModelParams(g=0.3, **RUNNING)).ok


def test_validate_collapse():
    report = validate(ModelParams(g=0.6, **RUNNING))
    assert not report.ok
    assert report.violations[0].startswith("g ≥ ω/2: model unbounded")
    with pytest.raises(CollapseError):
        report.raise_if_invalid()


def test_validate_negative_omega_q():
    report = validate(ModelParams(omega=1.0, omega_q=-0.1, g=0.1, n_qubits=10))
    assert report.violations == ["omega_q ≤ 0"]
    with pytest.raises(DomainError) as err:
        report.raise_if_invalid()
    assert not isinstance(err.value, CollapseError)


def test_validate_lists_every_violation():
    report = validate(ModelParams(omega=-1.0, omega_q=0.0, g=-0.5, n_qubits=0))
    assert report.violations == ["omega ≤ 0", "omega_q ≤ 0", "g < 0", "n_qubits < 1"]


def test_one_photon_has_no_collapse():
    assert validate(ModelParams(g=0.6, coupling_order='one', **RUNNING)).ok


def test_derive_running_example():
    derived = derive(ModelParams(g=0.45, **RUNNING))
    assert derived.lambda_ == pytest.approx(1.0, rel=1e-14)
    assert derived.mu == pytest.approx(0.81, rel=1e-14)
    assert derived.g_t == pytest.approx(0.353553, abs=1e-6)
    assert derived.g_collapse == 0.5
    assert derive(ModelParams(g=0.0, **RUNNING)).mu == 0.0


def test_derive_window_boundary():
    derived = derive(ModelParams(omega=1.0, omega_q=0.01, g=0.1, n_qubits=100))
    assert derived.g_t == pytest.approx(derived.g_collapse, rel=1e-15)


def test_derive_rejects_invalid():
    with pytest.raises(DomainError):
        derive(ModelParams(omega=1.0, omega_q=0.0, g=0.1, n_qubits=10))


@pytest.mark.parametrize("scale", [1.0e-3, 3.0, 250.0])
def test_derive_is_scale_covariant(scale):
    base = ModelParams(g=0.45, **RUNNING)
    scaled = ModelParams(omega=scale * base.omega, omega_q=scale * base.omega_q, g=scale * base.g,
                         n_qubits=base.n_qubits)
    reference, derived = derive(base), derive(scaled)
    assert derived.g_t == pytest.approx(scale * reference.g_t, rel=1e-13)
    assert derived.g_collapse == pytest.approx(scale * reference.g_collapse, rel=1e-13)
    assert derived.lambda_ == pytest.approx(reference.lambda_, rel=1e-13)
    assert derived.mu == pytest.approx(reference.mu, rel=1e-13)


@pytest.mark.parametrize("g, omega_q, expected", [
    (0.3, 0.005, RegimeLabel.NORMAL),
    (0.45, 0.005, RegimeLabel.SUPERRADIANT),
    (0.45, 0.02, RegimeLabel.NO_SPT_WINDOW),
    (0.6, 0.005, RegimeLabel.COLLAPSED),
])
def test_regime_classify(g, omega_q, expected):
    assert regime_classify(ModelParams(omega=1.0, omega_q=omega_q, g=g, n_qubits=100)) is expected


def test_regime_classify_one_photon():
    params = ModelParams(g=0.6, coupling_order=CouplingOrder.ONE_PHOTON, **RUNNING)
    assert regime_classify(params) is RegimeLabel.SUPERRADIANT


@pytest.mark.parametrize("coupling_order", [CouplingOrder.TWO_PHOTON, CouplingOrder.ONE_PHOTON])
def test_regime_classify_either_side_of_critical_point(coupling_order):
    params = ModelParams(g=0.0, coupling_order=coupling_order, **RUNNING)
    g_t = derive(params).g_t
    assert regime_classify(params.with_g(g_t * (1.0 - 1.0e-12))) is RegimeLabel.NORMAL
    assert regime_classify(params.with_g(g_t)) is RegimeLabel.SUPERRADIANT
    assert regime_classify(params.with_g(g_t * (1.0 + 1.0e-12))) is RegimeLabel.SUPERRADIANT


def test_empty_window_is_logged(caplog):
    with caplog.at_level(logging.DEBUG):
        regime_classify(ModelParams(omega=1.0, omega_q=0.02, g=0.45, n_qubits=100))
    assert "no superradiant window" in caplog.text


def test_params_for_lambda():
    params = params_for_lambda(1.0, 100, g=0.45)
    assert params.omega_q == pytest.approx(0.005, rel=1e-15)
    assert derive(params).lambda_ == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(DomainError):
        params_for_lambda(0.0, 100)


def test_model_params_dict():
    params = ModelParams(g=0.45, g1=0.01, **RUNNING)
    data = params.to_dict()
    assert data['coupling_order'] == 'TwoPhoton'
    assert ModelParams.from_dict(data) == params
    assert params.with_g(0.1).g == 0.1
    assert math.isclose(params.with_g(0.1).omega_q, params.omega_q)


@pytest.mark.parametrize("value, expected", [
    ('one', CouplingOrder.ONE_PHOTON), ('2', CouplingOrder.TWO_PHOTON), ('TwoPhoton', CouplingOrder.TWO_PHOTON)])
def test_coupling_order_parse(value, expected):
    assert CouplingOrder.parse(value) is expected


def test_coupling_order_parse_unknown():
    with pytest.raises(ValueError):
        CouplingOrder.parse('three')
