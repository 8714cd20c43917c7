import numpy as np
import pytest

from pydicke2p.core import DomainError, ModelParams, derive, params_for_lambda
from pydicke2p.ed import (BasisSpec, collapse_probe, crossover_estimate, mean_spacing, solve_lowest,
                          sweep_observable, symmetry_broken_pair)


def test_crossover_estimate_locates_the_kink():
    grid = np.linspace(0.0, 0.6, 61)
    values = 0.01 * np.log1p(np.exp((grid - 0.3) / 0.01))
    assert crossover_estimate(grid, values) == pytest.approx(0.3, abs=1e-9)


def test_crossover_estimate_rejects_bad_grids():
    with pytest.raises(ValueError):
        crossover_estimate([0.0, 0.1, 0.3], [0.0, 1.0, 2.0])
    with pytest.raises(ValueError):
        crossover_estimate([0.0, 0.1], [0.0, 1.0])


def test_finite_size_crossover_near_critical_coupling():
    params = params_for_lambda(1.0, 12)
    g_t = derive(params).g_t
    grid = np.linspace(0.5 * g_t, 1.25 * g_t, 31)
    spin = sweep_observable(params, BasisSpec(12, 200, 'Even'), grid, 'spin')
    assert abs(crossover_estimate(grid, spin) - g_t) / g_t <= 0.15


def test_sweep_observable_rejects_unknown():
    with pytest.raises(ValueError):
        sweep_observable(params_for_lambda(1.0, 2), BasisSpec(2, 10), [0.1], 'entropy')


def test_symmetry_broken_pair():
    params = params_for_lambda(1.0, 12, g=0.47)
    basis = BasisSpec(12, 200, 'Even')
    result = solve_lowest(params, basis, k=2, keep_vectors=True)
    values, mixing = symmetry_broken_pair(basis, result)
    assert values[0] < 0 < values[1]
    assert values[0] == pytest.approx(-values[1], rel=1e-6)
    assert values[1] > params.n_qubits / 4.0
    np.testing.assert_allclose(mixing.T @ mixing, np.eye(2), atol=1e-12)


def test_symmetry_broken_pair_needs_vectors():
    params = params_for_lambda(1.0, 4, g=0.45)
    basis = BasisSpec(4, 40, 'Even')
    with pytest.raises(ValueError):
        symmetry_broken_pair(basis, solve_lowest(params, basis, k=2))


def test_collapse_probe_spacing_shrinks():
    params = params_for_lambda(4.0, 2)
    report = collapse_probe(params, BasisSpec(2, 200), 4, g_grid=[0.3, 0.4, 0.45, 0.49])
    assert report.monotone_decreasing
    assert report.cutoffs == (200, 400)
    assert report.to_dict()['k'] == 4
    assert report.spacing[-1] == pytest.approx(report.spacing_refined[-1], rel=1e-6)


def test_level_spacing_closes_towards_collapse():
    params = ModelParams(omega=1.0, omega_q=0.1, g=0.0, n_qubits=4)
    report = collapse_probe(params, BasisSpec(4, 400), 10, g_grid=[0.30, 0.45])
    assert report.spacing[1] < report.spacing[0]
    assert report.monotone_decreasing


def test_collapse_probe_errors():
    with pytest.raises(DomainError):
        collapse_probe(params_for_lambda(1.0, 2, coupling_order='one'), BasisSpec(2, 20), 4)
    with pytest.raises(ValueError):
        collapse_probe(params_for_lambda(1.0, 2), BasisSpec(2, 20), 1)


def test_mean_spacing():
    assert mean_spacing(np.array([0.0, 1.0, 3.0])) == 1.5
