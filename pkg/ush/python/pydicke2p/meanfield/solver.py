"""
Mean-field ground state of the two-photon Dicke model.

The spin is bosonized with the Holstein-Primakoff mode b, b is replaced by its
mean value beta, and the remaining photon Hamiltonian is a squeezed oscillator
with coupling g_beta.  Minimizing the resulting E_G(beta) gives the order
parameter.
"""
import math
from dataclasses import dataclass, fields
from logging import getLogger
from typing import Any, Dict, Optional, Tuple

import numpy as np
from scipy.optimize import minimize_scalar

from pydicke2p.core import (CollapseError, DomainError, ModelParams, RegimeLabel,
                            derive, regime_classify, validate)

logger = getLogger(__name__.split('.')[-1])


@dataclass
class MeanFieldConfig:
    grid_step: float = 1.0e-4
    polish_tol: float = 1.0e-10
    polish_bracket: float = 0.1
    polish_warn: float = 1.0e-6

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "MeanFieldConfig":
        obj = cls()
        for f in fields(cls):
            if f.name in config:
                setattr(obj, f.name, float(config[f.name]))
        return obj


@dataclass(frozen=True)
class MeanFieldSolution:
    regime: RegimeLabel
    beta: float
    beta_branches: Tuple[float, ...]
    g_beta: float
    r_a_mf: float
    e_ground: float
    jz_mean: float
    jx_mean: float
    beta_polished: Optional[float] = None

    def branch(self, index: int) -> "MeanFieldSolution":
        """Same solution re-centred on another degenerate branch."""
        beta = self.beta_branches[index]
        if beta == self.beta:
            return self
        # the mirror branch flips every quantity that is odd in beta
        return MeanFieldSolution(regime=self.regime, beta=beta, beta_branches=self.beta_branches,
                                 g_beta=-self.g_beta, r_a_mf=-self.r_a_mf, e_ground=self.e_ground,
                                 jz_mean=self.jz_mean, jx_mean=-self.jx_mean, beta_polished=None)

    def to_dict(self) -> Dict[str, Any]:
        return {'regime': self.regime.value, 'beta': self.beta, 'beta_branches': list(self.beta_branches),
                'g_beta': self.g_beta, 'r_a_mf': self.r_a_mf, 'e_ground': self.e_ground,
                'jz_mean': self.jz_mean, 'jx_mean': self.jx_mean, 'beta_polished': self.beta_polished}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MeanFieldSolution":
        kwargs = dict(data)
        kwargs['regime'] = RegimeLabel(kwargs['regime'])
        kwargs['beta_branches'] = tuple(kwargs['beta_branches'])
        return cls(**kwargs)


def coupling_of_beta(params: ModelParams, beta):
    """g_beta = (g/N) 2 beta sqrt(N - beta^2); accepts scalars or arrays."""
    n = params.n_qubits
    beta = np.asarray(beta, dtype=float)
    out = (params.g / n) * 2.0 * beta * np.sqrt(np.clip(n - beta ** 2, 0.0, None))
    return float(out) if out.ndim == 0 else out


def _energy(params: ModelParams, beta, g_beta):
    tau = 2.0 * g_beta / params.omega
    n = params.n_qubits
    return (params.omega / 2.0) * np.sqrt(1.0 - tau ** 2) + params.omega_q * beta ** 2 \
        - params.omega_q * n / 2.0 - params.omega / 2.0


def energy_of_beta(params: ModelParams, beta: float) -> float:
    """
    Mean-field ground energy E_G(beta) for a real order parameter.

    The photon part is the squeezed-vacuum energy of
    omega a^dag a + g_beta (a^2 + a^dag^2), i.e. (omega/2) cosh(2r) - omega/2 - g_beta sinh(2r)
    with tanh(2r) = 2 g_beta / omega, written in its closed form.
    """
    n = params.n_qubits
    if abs(beta) > math.sqrt(n) * (1.0 + 1.0e-15):
        raise DomainError(f"|beta|={abs(beta):g} exceeds sqrt(N)={math.sqrt(n):g}")
    g_beta = coupling_of_beta(params, beta)
    if 2.0 * abs(g_beta) / params.omega >= 1.0:
        raise DomainError(f"2|g_beta|/omega={2.0 * abs(g_beta) / params.omega:g} ≥ 1: squeezed mode unstable")
    return float(_energy(params, beta, g_beta))


def energy_landscape(params: ModelParams, betas: np.ndarray) -> np.ndarray:
    """Vectorized E_G on a beta grid; points outside the arctanh domain are +inf."""
    betas = np.asarray(betas, dtype=float)
    g_beta = coupling_of_beta(params, betas)
    tau = 2.0 * g_beta / params.omega
    with np.errstate(invalid='ignore'):
        energies = _energy(params, betas, g_beta)
    return np.where(np.abs(tau) < 1.0, energies, np.inf)


def grid_minimize(params: ModelParams, step: float = 1.0e-4) -> float:
    """
    Brute-force minimizer of E_G with spacing step*sqrt(N).

    E_G is even in beta, so only [0, sqrt(N)] is searched and the
    non-negative branch is returned.
    """
    root_n = math.sqrt(params.n_qubits)
    betas = np.linspace(0.0, root_n, int(round(1.0 / step)) + 1)
    energies = energy_landscape(params, betas)
    return float(betas[int(np.argmin(energies))])


def complex_phase_scan(params: ModelParams, beta_abs: float) -> Dict[float, float]:
    """E_G for beta = |beta| exp(i phase) at phase 0 and pi; beta + beta* carries the phase."""
    return {0.0: energy_of_beta(params, beta_abs), math.pi: energy_of_beta(params, -beta_abs)}


def analytic_beta0(params: ModelParams) -> float:
    """Positive superradiant minimizer from the stationarity condition; 0 below g_t."""
    derived = derive(params)
    if params.g <= derived.g_t:
        return 0.0
    lam, mu = derived.lambda_, derived.mu
    w = math.sqrt((1.0 - mu) / (4.0 * mu ** 2 * lam ** 2 - mu))
    return math.sqrt(params.n_qubits / 2.0 * (1.0 - w))


def _polish(params: ModelParams, beta0: float, config: MeanFieldConfig) -> float:
    root_n = math.sqrt(params.n_qubits)
    half = config.polish_bracket * root_n / 2.0
    lo, hi = max(0.0, beta0 - half), min(root_n, beta0 + half)
    res = minimize_scalar(lambda b: float(energy_landscape(params, np.array([b]))[0]),
                          bounds=(lo, hi), method='bounded', options={'xatol': config.polish_tol})
    return float(res.x)


def minimize(params: ModelParams, config: Optional[MeanFieldConfig] = None) -> MeanFieldSolution:
    """
    Order parameter and mean-field observables.

    Below g_t the single branch beta = 0 is returned.  Above g_t the closed-form
    beta_0 is returned together with -beta_0 (positive branch first) and is
    cross-checked by a bounded Brent polish of E_G around it.

    :raises CollapseError: g ≥ omega/2 for the two-photon coupling
    :raises DomainError: any other parameter violation
    """
    config = config or MeanFieldConfig()
    if not params.two_photon:
        raise DomainError("the mean-field solver covers the two-photon coupling only")
    validate(params).raise_if_invalid()
    regime = regime_classify(params)
    if regime is RegimeLabel.COLLAPSED:
        raise CollapseError(f"g={params.g:g} ≥ ω/2={params.omega / 2:g}: model unbounded")
    n = params.n_qubits

    if regime is not RegimeLabel.SUPERRADIANT or params.g == derive(params).g_t:
        return MeanFieldSolution(regime=regime, beta=0.0, beta_branches=(0.0,), g_beta=0.0, r_a_mf=0.0,
                                 e_ground=energy_of_beta(params, 0.0), jz_mean=-n / 2.0, jx_mean=0.0)

    beta0 = analytic_beta0(params)
    g_beta = coupling_of_beta(params, beta0)
    tau = 2.0 * g_beta / params.omega
    if not abs(tau) < 1.0:
        logger.warning(f"closed-form beta outside the arctanh domain (tau={tau:g}), using the grid minimizer")
        beta0 = abs(grid_minimize(params, config.grid_step))
        g_beta = coupling_of_beta(params, beta0)
        tau = 2.0 * g_beta / params.omega

    polished = _polish(params, beta0, config)
    if abs(polished - beta0) > config.polish_warn * math.sqrt(n):
        logger.warning(f"polished beta {polished:.12g} differs from closed form {beta0:.12g}")
    else:
        logger.debug(f"beta0={beta0:.12g}, polish delta={polished - beta0:.3e}")

    return MeanFieldSolution(regime=regime, beta=beta0, beta_branches=(beta0, -beta0), g_beta=g_beta,
                             r_a_mf=0.5 * math.atanh(tau), e_ground=energy_of_beta(params, beta0),
                             jz_mean=beta0 ** 2 - n / 2.0, jx_mean=beta0 * math.sqrt(n - beta0 ** 2),
                             beta_polished=polished)
