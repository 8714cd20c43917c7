"""
Effective Hamiltonians of the spin mode in the two phases.

Both phases reduce, after decoupling the fast photon sector and projecting on
the lowest K0 ladder state, to a QuadraticBosonForm for the Holstein-Primakoff
fluctuation mode d.  Energies are in the units of ``ModelParams``.
"""
import math
from dataclasses import dataclass, fields, replace
from logging import getLogger
from typing import Any, Dict, Optional

from pydicke2p.core import (CollapseError, DomainError, ModelParams, PhaseError, RegimeLabel, derive,
                            regime_classify, validate)
from pydicke2p.fluctuations.bogoliubov import QuadraticBosonForm, bogoliubov_diagonalize
from pydicke2p.meanfield import MeanFieldSolution, minimize

logger = getLogger(__name__.split('.')[-1])


@dataclass
class FluctuationConfig:
    guard_factor: float = 0.1

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "FluctuationConfig":
        obj = cls()
        for f in fields(cls):
            if f.name in config:
                setattr(obj, f.name, float(config[f.name]))
        return obj

    def guard(self, n_qubits: int) -> float:
        return self.guard_factor / n_qubits


@dataclass(frozen=True)
class Lambda2Coefficients:
    lambda0: float
    lambda1: float
    lambda2: float
    lambda3: float
    lambda4: float
    v1_n: float
    v1_sq: float
    v2_n: float
    v2_sq: float
    r_a2: float
    alpha_hp: float
    chi: float
    delta: float
    finite_n: bool = True


@dataclass(frozen=True)
class FluctuationSolution:
    phase: RegimeLabel
    r_s: float
    r_a: float
    e_exc: float
    e_ground: float
    var_xd: float
    var_pd: float
    var_xa: float
    var_pa: float
    beta_correction: float = 0.0
    e_ground_closed_form: bool = True

    def to_dict(self) -> Dict[str, Any]:
        out = dict(self.__dict__)
        out['phase'] = self.phase.value
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "FluctuationSolution":
        kwargs = dict(data)
        kwargs['phase'] = RegimeLabel(kwargs['phase'])
        return cls(**kwargs)


# closed forms

def excitation_energy_normal(params: ModelParams) -> float:
    """omega_q sqrt(1 - (g/g_t)^2)."""
    ratio = 1.0 - 4.0 * params.g ** 2 / (params.n_qubits * params.omega * params.omega_q)
    if ratio < 0:
        raise DomainError(f"g={params.g:g} above g_t: no normal-phase excitation")
    return params.omega_q * math.sqrt(ratio)


def squeezing_normal(params: ModelParams) -> float:
    """1/4 ln(1 - 4g^2/(N omega omega_q)); negative, so X_d is amplified and P_d squeezed."""
    ratio = 1.0 - 4.0 * params.g ** 2 / (params.n_qubits * params.omega * params.omega_q)
    if ratio <= 0:
        raise DomainError(f"g={params.g:g} at or above g_t: squeezing diverges")
    return 0.25 * math.log(ratio)


def _superradiant_factors(params: ModelParams, alpha: float):
    u = alpha ** 2
    first = 1.0 + u / (1.0 - 2.0 * u)
    denom = 1.0 - u - 16.0 * (params.g / params.omega) ** 2 * u * (1.0 - u) ** 2
    second = 1.0 + u / (1.0 - 2.0 * u) * (3.0 + u / (1.0 - u)) - (1.0 - 2.0 * u) / denom
    return first, second


def excitation_energy_superradiant(params: ModelParams, alpha: float) -> float:
    """Closed-form spin-mode excitation energy above g_t as a function of alpha = beta/sqrt(N)."""
    first, second = _superradiant_factors(params, alpha)
    if first * second < 0:
        raise DomainError(f"negative squared excitation energy at alpha={alpha:g}")
    return params.omega_q * math.sqrt(first * second)


def squeezing_superradiant(params: ModelParams, alpha: float) -> float:
    """Closed-form spin-mode squeezing above g_t, in the var(X) = exp(-2r) convention."""
    first, second = _superradiant_factors(params, alpha)
    if first <= 0 or second <= 0:
        raise DomainError(f"closed-form squeezing undefined at alpha={alpha:g}")
    return 0.25 * math.log(second / first)


# effective forms

def _check_guard(params: ModelParams, config: FluctuationConfig) -> None:
    g_t = derive(params).g_t
    distance = abs(params.g - g_t) / g_t
    if distance < config.guard(params.n_qubits):
        raise PhaseError(f"|g-g_t|/g_t={distance:.3e} inside the near-critical guard "
                         f"{config.guard(params.n_qubits):.3e}")


def phase1_effective(params: ModelParams, config: Optional[FluctuationConfig] = None) -> QuadraticBosonForm:
    """omega_q d^dag d - g^2/(N omega) (d + d^dag)^2 - omega_q N/2, valid below g_t."""
    config = config or FluctuationConfig()
    if params.g >= derive(params).g_t:
        raise PhaseError(f"g={params.g:g} ≥ g_t={derive(params).g_t:g}: not in the normal phase")
    _check_guard(params, config)
    n = params.n_qubits
    return QuadraticBosonForm(c_number=-params.omega_q * n / 2.0, coeff_n=params.omega_q,
                              coeff_sq=-params.g ** 2 / (n * params.omega), coeff_lin=0.0)


def phase2_coefficients(params: ModelParams, solution: MeanFieldSolution, finite_n: bool = True) -> Lambda2Coefficients:
    """
    Coefficients of the superradiant-phase Hamiltonian after the photon Bogoliubov rotation.

    ``finite_n`` selects the rotation angle 1/2 arctanh(4 g alpha chi/omega + g alpha/(omega chi N));
    without it the N -> infinity angle (the mean-field r) is used.

    :raises PhaseError: the solution is not superradiant
    :raises DomainError: the arctanh argument reaches 1
    """
    if solution.regime is not RegimeLabel.SUPERRADIANT or solution.beta == 0.0:
        raise PhaseError("superradiant coefficients need a non-zero order parameter")
    n, omega, g = params.n_qubits, params.omega, params.g
    beta = solution.beta
    alpha = beta / math.sqrt(n)
    chi = math.sqrt(1.0 - alpha ** 2)
    delta = 1.0 - beta ** 2 / (n - beta ** 2)
    argument = 4.0 * g * alpha * chi / omega
    if finite_n:
        argument += g * alpha / (omega * chi * n)
    if abs(argument) >= 1.0:
        raise DomainError(f"rotation argument {argument:.6g} outside (-1, 1)")
    r_a2 = 0.5 * math.atanh(argument)
    ch, sh = math.cosh(2.0 * r_a2), math.sinh(2.0 * r_a2)
    curvature = (g / omega) * (alpha / (2.0 * chi) + alpha ** 3 / (4.0 * chi ** 3))
    return Lambda2Coefficients(lambda0=ch - argument * sh,
                               lambda1=params.omega_q * n * alpha / (2.0 * omega),
                               lambda2=g * chi * delta / omega * ch,
                               lambda3=-2.0 * sh * g * chi * delta / omega,
                               lambda4=params.omega_q * n / (2.0 * omega),
                               v1_n=-sh * g * alpha / (chi * omega), v1_sq=-sh * curvature,
                               v2_n=-ch * g * alpha / (chi * omega), v2_sq=-ch * curvature,
                               r_a2=r_a2, alpha_hp=alpha, chi=chi, delta=delta, finite_n=finite_n)


def phase2_effective(params: ModelParams, coeffs: Lambda2Coefficients) -> QuadraticBosonForm:
    """
    Projected superradiant-phase form of the spin mode, in energy units.

    The dimensionless Hamiltonian is measured in units of 2 omega; the K0 ladder
    is projected on its lowest state (K0 -> 1/4) and the second-order coupling
    to the photon sector contributes -lambda2^2/(2 N lambda0) (d + d^dag)^2.
    """
    n, omega = params.n_qubits, params.omega
    root_n = math.sqrt(n)
    alpha = coeffs.alpha_hp
    c_number = omega * coeffs.lambda0 / 2.0 - omega / 2.0 - params.omega_q * n / 2.0 \
        + params.omega_q * n * alpha ** 2
    return QuadraticBosonForm(c_number=c_number,
                              coeff_n=(2.0 * omega * coeffs.lambda4 - omega * coeffs.v1_n) / n,
                              coeff_sq=-omega * (coeffs.v1_sq + coeffs.lambda2 ** 2 / coeffs.lambda0) / n,
                              coeff_lin=2.0 * omega * (coeffs.lambda1 + coeffs.lambda3 / 4.0) / root_n)


def _superradiant_form(params: ModelParams, mf: MeanFieldSolution):
    leading = phase2_coefficients(params, mf, finite_n=False)
    finite = phase2_coefficients(params, mf, finite_n=True)
    # the quadratic part is kept at leading order; the linear term vanishes there by stationarity
    form = replace(phase2_effective(params, leading), coeff_lin=phase2_effective(params, finite).coeff_lin)
    return form, finite


def solve_fluctuations(params: ModelParams, config: Optional[FluctuationConfig] = None,
                       mf: Optional[MeanFieldSolution] = None) -> FluctuationSolution:
    """
    Squeezing, excitation energy and quadrature variances of the ground state.

    :raises CollapseError: g ≥ omega/2
    :raises PhaseError: inside the near-critical guard band
    :raises InstabilityError: the effective form is not bounded from below
    """
    config = config or FluctuationConfig()
    if not params.two_photon:
        raise DomainError("the fluctuation layer covers the two-photon coupling only")
    validate(params).raise_if_invalid()
    regime = regime_classify(params)
    if regime is RegimeLabel.COLLAPSED:
        raise CollapseError(f"g={params.g:g} ≥ ω/2={params.omega / 2:g}: model unbounded")

    if regime is not RegimeLabel.SUPERRADIANT:
        result = bogoliubov_diagonalize(phase1_effective(params, config))
        r_s = result.r
        return FluctuationSolution(phase=regime, r_s=r_s, r_a=0.0, e_exc=result.e_exc,
                                   e_ground=result.e_ground_shift, var_xd=math.exp(-2.0 * r_s),
                                   var_pd=math.exp(2.0 * r_s), var_xa=1.0, var_pa=1.0)

    _check_guard(params, config)
    mf = mf if mf is not None else minimize(params)
    form, finite = _superradiant_form(params, mf)
    result = bogoliubov_diagonalize(form)
    logger.debug(f"superradiant form {form}, displacement {result.displacement:.3e}")
    r_s, r_a = result.r, finite.r_a2
    return FluctuationSolution(phase=regime, r_s=r_s, r_a=r_a, e_exc=result.e_exc, e_ground=result.e_ground_shift,
                               var_xd=math.exp(-2.0 * r_s), var_pd=math.exp(2.0 * r_s),
                               var_xa=math.exp(-2.0 * r_a), var_pa=math.exp(2.0 * r_a),
                               beta_correction=result.displacement, e_ground_closed_form=False)
