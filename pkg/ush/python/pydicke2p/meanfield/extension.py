"""
Mean field with an additional one-photon coupling g1.

With g_2^beta = g_beta and g_1^beta = (g1/N) 2 beta sqrt(N - beta^2), the photon
Hamiltonian omega a^dag a + g_2^beta (a^2 + a^dag^2) + g_1^beta (a + a^dag) is a
displaced squeezed oscillator.  The displacement adds -(g_1^beta)^2/(omega + 2 g_2^beta)
to E_G and makes the two mirror minima inequivalent.
"""
import math
from dataclasses import dataclass
from logging import getLogger
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from pydicke2p.core import CollapseError, DomainError, ModelParams, RegimeLabel, regime_classify, validate
from pydicke2p.meanfield.solver import (MeanFieldConfig, coupling_of_beta, energy_landscape,
                                        energy_of_beta, minimize)

logger = getLogger(__name__.split('.')[-1])


@dataclass(frozen=True)
class LinearExtensionSolution:
    g1_beta: float
    g2_beta: float
    alpha_disp: float
    a_mean: float
    r_c: float
    e_ground_ext: float
    beta_selected: float
    beta_branches: Tuple[float, ...]
    branch_energies: Tuple[float, ...]

    def to_dict(self) -> Dict[str, Any]:
        out = dict(self.__dict__)
        out['beta_branches'] = list(self.beta_branches)
        out['branch_energies'] = list(self.branch_energies)
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "LinearExtensionSolution":
        kwargs = dict(data)
        kwargs['beta_branches'] = tuple(kwargs['beta_branches'])
        kwargs['branch_energies'] = tuple(kwargs['branch_energies'])
        return cls(**kwargs)


def _g1(params: ModelParams) -> float:
    if params.g1 is None:
        raise DomainError("the linear extension needs g1")
    return params.g1


def linear_coupling_of_beta(params: ModelParams, beta):
    n = params.n_qubits
    beta = np.asarray(beta, dtype=float)
    out = (_g1(params) / n) * 2.0 * beta * np.sqrt(np.clip(n - beta ** 2, 0.0, None))
    return float(out) if out.ndim == 0 else out


def extended_energy(params: ModelParams, beta):
    """E_G(beta) including the displacement energy; +inf outside the squeezing domain."""
    scalar = np.ndim(beta) == 0
    betas = np.atleast_1d(np.asarray(beta, dtype=float))
    g1_beta = linear_coupling_of_beta(params, betas)
    g2_beta = coupling_of_beta(params, betas)
    energies = energy_landscape(params, betas) - g1_beta ** 2 / (params.omega + 2.0 * g2_beta)
    return float(energies[0]) if scalar else energies


def extension_at(params: ModelParams, beta: float, branches=None, energies=None) -> LinearExtensionSolution:
    """Displaced-squeezed solution for a given order parameter."""
    g1_beta = linear_coupling_of_beta(params, beta)
    g2_beta = coupling_of_beta(params, beta)
    tau = 2.0 * g2_beta / params.omega
    if abs(tau) >= 1.0:
        raise DomainError(f"2|g2_beta|/omega={abs(tau):g} ≥ 1 at beta={beta:g}")
    alpha_disp = g1_beta / (params.omega + 2.0 * g2_beta)
    e_ground = energy_of_beta(params, beta) - g1_beta * alpha_disp
    return LinearExtensionSolution(g1_beta=g1_beta, g2_beta=g2_beta, alpha_disp=alpha_disp, a_mean=-alpha_disp,
                                   r_c=0.5 * math.atanh(tau), e_ground_ext=e_ground, beta_selected=beta,
                                   beta_branches=tuple(branches) if branches is not None else (beta,),
                                   branch_energies=tuple(energies) if energies is not None else (e_ground,))


def _side_minimum(params: ModelParams, sign: float, step: float, xatol: float) -> Tuple[float, float]:
    root_n = math.sqrt(params.n_qubits)
    grid = sign * np.linspace(0.0, root_n, int(round(1.0 / step)) + 1)
    energies = extended_energy(params, grid)
    best = int(np.argmin(energies))
    spacing = step * root_n
    lo, hi = sorted((grid[max(best - 1, 0)], grid[min(best + 1, grid.size - 1)]))
    if hi - lo < spacing:
        return float(grid[best]), float(energies[best])
    res = minimize_scalar(lambda b: extended_energy(params, b), bounds=(lo, hi), method='bounded',
                          options={'xatol': xatol})
    if res.fun <= energies[best]:
        return float(res.x), float(res.fun)
    return float(grid[best]), float(energies[best])


def solve_linear_extension(params: ModelParams, config: Optional[MeanFieldConfig] = None) -> LinearExtensionSolution:
    """
    Minimize the extended mean-field energy over real beta.

    No closed form exists once g1 is non-zero, so each half-line is scanned on a
    grid and refined with a bounded Brent search.  g1 = 0 returns the ordinary
    mean-field solution with both degenerate branches.
    """
    config = config or MeanFieldConfig()
    g1 = _g1(params)
    validate(params).raise_if_invalid()
    if regime_classify(params) is RegimeLabel.COLLAPSED:
        raise CollapseError(f"g={params.g:g} ≥ ω/2={params.omega / 2:g}: model unbounded")

    if g1 == 0.0:
        mf = minimize(params, config)
        energies = tuple(energy_of_beta(params, b) for b in mf.beta_branches)
        return extension_at(params, mf.beta, branches=mf.beta_branches, energies=energies)

    plus = _side_minimum(params, 1.0, config.grid_step, config.polish_tol)
    minus = _side_minimum(params, -1.0, config.grid_step, config.polish_tol)
    selected = plus if plus[1] <= minus[1] else minus
    logger.debug(f"extension minima: +{plus}, -{minus}")
    return extension_at(params, selected[0], branches=(plus[0], minus[0]), energies=(plus[1], minus[1]))
