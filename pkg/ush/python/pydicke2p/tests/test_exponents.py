import numpy as np
import pytest

from pydicke2p.core import CouplingOrder, InsufficientDataError, derive, params_for_lambda
from pydicke2p.sweep import (REFERENCE_ONE_PHOTON, REFERENCE_TWO_PHOTON, ExponentFit, FitConfig, Observable, Side,
                             compare_table1, critical_grid, fit_exponent, one_photon_crossover, run_exponent_pipeline)


@pytest.fixture(scope='module')
def pipeline():
    return run_exponent_pipeline(lambda_=1.0, n_qubits=1000)


def _fit(observable, side, gamma, r_squared=1.0, n_points=16):
    return ExponentFit(observable=Observable(observable), side=Side(side), gamma=gamma, window=(1e-3, 1e-1),
                       r_squared=r_squared, reference=REFERENCE_TWO_PHOTON[Observable(observable)],
                       n_points=n_points)


def test_critical_grid():
    params = params_for_lambda(1.0, 1000)
    g_t = derive(params).g_t
    config = FitConfig()
    below = critical_grid(params, Side.BELOW, config)
    above = critical_grid(params, 'Above', config)
    assert len(below) == len(above) == config.points_per_side
    assert np.all(np.diff(below) > 0) and np.all(np.diff(above) > 0)
    assert np.all(below < g_t) and np.all(above > g_t)
    deltas = np.abs(below - g_t) / g_t
    assert deltas.min() == pytest.approx(1e-3, rel=1e-9)
    assert deltas.max() == pytest.approx(1e-1, rel=1e-9)


def test_two_photon_exponents_below(pipeline):
    sweeps, fits = pipeline
    assert len(sweeps) == 1
    by_observable = {fit.observable: fit for fit in fits}
    assert set(by_observable) == set(Observable)
    assert by_observable[Observable.EEXC].gamma == pytest.approx(0.5, abs=0.02)
    assert by_observable[Observable.VARXD].gamma == pytest.approx(-0.25, abs=0.02)
    assert abs(by_observable[Observable.VARXA].gamma) <= 0.02
    for fit in fits:
        assert fit.side is Side.BELOW
        assert fit.r_squared >= 0.999
        assert fit.n_points == 16
        assert fit.passed()


def test_table_comparison_passes(pipeline):
    _, fits = pipeline
    report = compare_table1(fits)
    assert report.passed
    assert report.gaps == []
    assert all(row['verdict'] == 'PASS' for row in report.rows)
    assert report.render().splitlines()[-1] == "Table I comparison: PASS"
    assert list(report.to_frame()['one_photon_ref']) == [REFERENCE_ONE_PHOTON[fit.observable] for fit in fits]


def test_fit_round_trip(pipeline):
    _, fits = pipeline
    for fit in fits:
        assert ExponentFit.from_dict(fit.to_dict()) == fit


def test_narrow_window_has_too_few_points(pipeline):
    sweeps, _ = pipeline
    with pytest.raises(InsufficientDataError):
        fit_exponent(sweeps[0], 'Eexc', 'Below', window=(1e-3, 1.2e-3))
    with pytest.raises(InsufficientDataError):
        fit_exponent(sweeps[0], Observable.EEXC, Side.ABOVE)


def test_fits_are_stable_when_window_halves(pipeline):
    sweeps, fits = pipeline
    for fit in fits:
        narrow = fit_exponent(sweeps[0], fit.observable, fit.side, window=(1e-3, 5e-2))
        assert narrow.n_points >= 8
        assert abs(narrow.gamma - fit.gamma) < 0.01


def test_above_rows_do_not_enter_the_verdict():
    fits = [_fit('Eexc', 'Below', 0.5), _fit('VarXd', 'Below', -0.25), _fit('VarXa', 'Below', 0.0),
            _fit('Eexc', 'Above', 0.9)]
    report = compare_table1(fits)
    assert report.status == 'PASS'
    assert report.rows[-1]['verdict'] == 'info'


def test_missing_and_failing_fits():
    partial = compare_table1([_fit('Eexc', 'Below', 0.5)])
    assert partial.status == 'PARTIAL'
    assert len(partial.gaps) == 2
    assert any(line.startswith('missing:') for line in partial.render().splitlines())

    failing = compare_table1([_fit('Eexc', 'Below', 0.6), _fit('VarXd', 'Below', -0.25),
                              _fit('VarXa', 'Below', 0.0)])
    assert failing.status == 'FAIL'
    assert failing.rows[0]['verdict'] == 'FAIL'

    poor = compare_table1([_fit('Eexc', 'Below', 0.5, r_squared=0.9), _fit('VarXd', 'Below', -0.25),
                           _fit('VarXa', 'Below', 0.0)])
    assert poor.status == 'FAIL'


def test_one_photon_crossover_is_labelled():
    crossover = {'n_qubits': 8, 'fock_cutoff': 40, 'g_t': 0.5, 'g_crossover': 0.55, 'relative_offset': 0.1}
    report = compare_table1([_fit('Eexc', 'Below', 0.5)], one_photon_crossover=crossover)
    assert report.one_photon_crossover['label'] == 'qualitative (finite-N)'
    assert 'qualitative (finite-N)' in report.render()
    assert report.to_dict()['one_photon_crossover']['g_crossover'] == 0.55


def test_one_photon_crossover_small_instance():
    crossover = one_photon_crossover(lambda_=1.0, n_qubits=8, fock_cutoff=40)
    assert set(crossover) == {'n_qubits', 'fock_cutoff', 'g_t', 'g_crossover', 'relative_offset'}
    params = params_for_lambda(1.0, 8, coupling_order=CouplingOrder.ONE_PHOTON)
    assert crossover['g_t'] == pytest.approx(derive(params).g_t, rel=1e-15)
    assert np.isfinite(crossover['relative_offset'])
    assert abs(crossover['relative_offset']) < 0.5
    report = compare_table1([_fit('Eexc', 'Below', 0.5)], one_photon_crossover=crossover)
    assert report.one_photon_crossover['label'] == 'qualitative (finite-N)'


def test_fit_config_from_dict():
    config = FitConfig.from_dict({'window_min': '1e-4', 'points_per_side': '20', 'unrelated': 1})
    assert config.window == (1e-4, 1e-1)
    assert config.points_per_side == 20
    assert config.min_points == 8
