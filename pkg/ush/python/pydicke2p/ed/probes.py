"""
Finite-size probes built on ``solve_lowest``: collapse of the level spacing,
symmetry-broken superradiant pair and the crossover estimator.
"""
from dataclasses import dataclass
from logging import getLogger
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np
from scipy import sparse
from scipy.linalg import eigh
from wxflow import logit

from pydicke2p.core import DomainError, ModelParams
from pydicke2p.ed.basis import BasisSpec
from pydicke2p.ed.hamiltonian import restrict
from pydicke2p.ed.operators import spin_operators
from pydicke2p.ed.solver import EDConfig, EDResult, solve_lowest

logger = getLogger(__name__.split('.')[-1])

OBSERVABLES = ('photons', 'spin')


@dataclass
class CollapseReport:
    g_grid: np.ndarray
    spacing: np.ndarray
    spacing_refined: np.ndarray
    cutoffs: Tuple[int, int]
    k: int

    @property
    def monotone_decreasing(self) -> bool:
        return bool(np.all(np.diff(self.spacing) < 0))

    @property
    def cutoff_sensitive(self) -> np.ndarray:
        """Points where doubling the cutoff moves the spacing by more than 1%."""
        return np.abs(self.spacing_refined - self.spacing) > 1.0e-2 * np.abs(self.spacing)

    def to_dict(self) -> Dict[str, Any]:
        return {'g_grid': [float(g) for g in self.g_grid], 'spacing': [float(s) for s in self.spacing],
                'spacing_refined': [float(s) for s in self.spacing_refined], 'cutoffs': list(self.cutoffs),
                'k': self.k, 'monotone_decreasing': self.monotone_decreasing,
                'cutoff_sensitive': [bool(c) for c in self.cutoff_sensitive]}


def mean_spacing(eigenvalues: np.ndarray) -> float:
    return float((eigenvalues[-1] - eigenvalues[0]) / (len(eigenvalues) - 1))


@logit(logger)
def collapse_probe(params: ModelParams, basis: BasisSpec, k: int, g_grid: Optional[Sequence[float]] = None,
                   config: Optional[EDConfig] = None) -> CollapseReport:
    """
    Mean spacing of the k lowest levels on a g grid approaching omega/2.

    The trend is truncation limited; every point is solved at the basis cutoff
    and at twice that cutoff so the report shows how much the spacing moves.
    """
    if not params.two_photon:
        raise DomainError("the collapse probe applies to the two-photon coupling")
    if k < 2:
        raise ValueError("the spacing needs at least two levels")
    if g_grid is None:
        g_grid = np.linspace(0.0, 0.49 * params.omega, 8)
    g_grid = np.asarray(g_grid, dtype=float)
    refined = basis.with_cutoff(2 * basis.fock_cutoff)
    spacing, spacing_refined = [], []
    for g in g_grid:
        point = params.with_g(g)
        spacing.append(mean_spacing(solve_lowest(point, basis, k=k, config=config).eigenvalues))
        spacing_refined.append(mean_spacing(solve_lowest(point, refined, k=k, config=config).eigenvalues))
        logger.debug(f"g={g:.6g}: spacing {spacing[-1]:.6g} / {spacing_refined[-1]:.6g}")
    return CollapseReport(g_grid=g_grid, spacing=np.array(spacing), spacing_refined=np.array(spacing_refined),
                          cutoffs=(basis.fock_cutoff, refined.fock_cutoff), k=k)


def symmetry_broken_pair(basis: BasisSpec, result: EDResult) -> Tuple[np.ndarray, np.ndarray]:
    """
    Combinations of the two lowest eigenstates with extremal <J_x>.

    Finite-N eigenstates keep the parity symmetry; diagonalizing J_x inside the
    span of the quasi-degenerate pair yields the two broken-symmetry states.
    Returns (<J_x> of the two combinations, ascending; their coefficients as columns).
    """
    if result.vectors is None or result.vectors.shape[1] < 2:
        raise ValueError("symmetry_broken_pair needs the two lowest eigenvectors (solve with keep_vectors=True)")
    _, jp = spin_operators(basis.n_qubits)
    jx = restrict(sparse.kron((jp + jp.T) / 2.0, sparse.identity(basis.fock_dim, format='csr')), basis)
    pair = result.vectors[:, :2]
    projected = pair.T @ (jx @ pair)
    values, mixing = eigh(0.5 * (projected + projected.T))
    return values, mixing


def crossover_estimate(g_grid: Sequence[float], values: Sequence[float]) -> float:
    """Grid point where the central second difference of ``values`` peaks; the grid must be uniform."""
    g_grid = np.asarray(g_grid, dtype=float)
    values = np.asarray(values, dtype=float)
    if g_grid.size < 3 or g_grid.size != values.size:
        raise ValueError("need at least three matching grid points")
    steps = np.diff(g_grid)
    if not np.allclose(steps, steps[0], rtol=1.0e-9, atol=0.0):
        raise ValueError("crossover_estimate needs a uniform grid")
    curvature = (values[2:] - 2.0 * values[1:-1] + values[:-2]) / steps[0] ** 2
    return float(g_grid[1 + int(np.argmax(curvature))])


def sweep_observable(params: ModelParams, basis: BasisSpec, g_grid: Sequence[float], observable: str = 'photons',
                     config: Optional[EDConfig] = None) -> np.ndarray:
    """Ground-state <a^dag a> ('photons') or <J_z> + N/2 ('spin') along a g grid."""
    if observable not in OBSERVABLES:
        raise ValueError(f"observable must be one of {OBSERVABLES}, got '{observable}'")
    values = []
    for g in g_grid:
        result = solve_lowest(params.with_g(g), basis, k=1, config=config)
        values.append(result.photons[0] if observable == 'photons' else result.jz[0] + params.n_qubits / 2.0)
    return np.array(values)
