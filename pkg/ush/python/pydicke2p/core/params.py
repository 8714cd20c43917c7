import math
from dataclasses import dataclass, field, fields, replace, asdict
from enum import Enum
from logging import getLogger
from typing import Any, Dict, List, Optional

from pydicke2p.core.exceptions import CollapseError, DomainError

logger = getLogger(__name__.split('.')[-1])


class CouplingOrder(str, Enum):
    ONE_PHOTON = "OnePhoton"
    TWO_PHOTON = "TwoPhoton"

    @classmethod
    def parse(cls, value) -> "CouplingOrder":
        if isinstance(value, cls):
            return value
        aliases = {"one": cls.ONE_PHOTON, "1": cls.ONE_PHOTON, "onephoton": cls.ONE_PHOTON,
                   "two": cls.TWO_PHOTON, "2": cls.TWO_PHOTON, "twophoton": cls.TWO_PHOTON}
        try:
            return aliases[str(value).strip().lower()]
        except KeyError:
            raise ValueError(f"unknown coupling order '{value}'")


class RegimeLabel(str, Enum):
    NORMAL = "Normal"
    SUPERRADIANT = "Superradiant"
    COLLAPSED = "Collapsed"
    NO_SPT_WINDOW = "NoSPTWindow"


@dataclass(frozen=True)
class ModelParams:
    """
    Physical parameters of the N-qubit two-photon Dicke model.

    ``g1`` is the optional one-photon coupling of the linear extension and is
    only read by the linear-extension solver and the ED builder.
    """
    omega: float
    omega_q: float
    g: float
    n_qubits: int
    coupling_order: CouplingOrder = CouplingOrder.TWO_PHOTON
    g1: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'coupling_order', CouplingOrder.parse(self.coupling_order))

    @property
    def two_photon(self) -> bool:
        return self.coupling_order is CouplingOrder.TWO_PHOTON

    def with_g(self, g: float) -> "ModelParams":
        return replace(self, g=float(g))

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out['coupling_order'] = self.coupling_order.value
        return out

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "ModelParams":
        kwargs = {f.name: config[f.name] for f in fields(cls) if f.name in config}
        if 'n_qubits' in kwargs:
            kwargs['n_qubits'] = int(kwargs['n_qubits'])
        for key in ('omega', 'omega_q', 'g'):
            if key in kwargs:
                kwargs[key] = float(kwargs[key])
        if kwargs.get('g1') is not None:
            kwargs['g1'] = float(kwargs['g1'])
        return cls(**kwargs)


@dataclass(frozen=True)
class DerivedParams:
    lambda_: float
    mu: float
    g_t: float
    g_collapse: float

    def to_dict(self) -> Dict[str, float]:
        return {'lambda': self.lambda_, 'mu': self.mu, 'g_t': self.g_t, 'g_collapse': self.g_collapse}


@dataclass
class ValidationReport:
    violations: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def raise_if_invalid(self) -> None:
        if self.ok:
            return
        collapse = [v for v in self.violations if v.startswith("g ≥ ω/2")]
        message = "; ".join(self.violations)
        if collapse and len(collapse) == len(self.violations):
            raise CollapseError(message)
        raise DomainError(message)


def validate(params: ModelParams) -> ValidationReport:
    """
    Check every parameter constraint and list all violations.

    Never raises; an empty report means the parameters are usable.
    """
    report = ValidationReport()
    if not math.isfinite(params.omega) or params.omega <= 0:
        report.violations.append("omega ≤ 0")
    if not math.isfinite(params.omega_q) or params.omega_q <= 0:
        report.violations.append("omega_q ≤ 0")
    if not math.isfinite(params.g) or params.g < 0:
        report.violations.append("g < 0")
    if params.n_qubits < 1:
        report.violations.append("n_qubits < 1")
    if params.g1 is not None and not math.isfinite(params.g1):
        report.violations.append("g1 not finite")
    if params.two_photon and params.omega > 0 and params.g >= params.omega / 2:
        report.violations.append(f"g ≥ ω/2: model unbounded (g={params.g:g}, ω/2={params.omega / 2:g})")
    return report


def derive(params: ModelParams) -> DerivedParams:
    """Critical couplings and the dimensionless ratios."""
    if params.omega <= 0 or params.omega_q <= 0 or params.n_qubits < 1:
        raise DomainError("derive needs omega > 0, omega_q > 0 and n_qubits ≥ 1")
    n = params.n_qubits
    return DerivedParams(lambda_=params.omega / (2.0 * params.omega_q * n),
                         mu=4.0 * params.g ** 2 / params.omega ** 2,
                         g_t=math.sqrt(params.omega * params.omega_q * n) / 2.0,
                         g_collapse=params.omega / 2.0)


def regime_classify(params: ModelParams) -> RegimeLabel:
    """
    Phase of the thermodynamic-limit ground state.

    The collapse and the empty superradiant window only exist for the
    two-photon coupling; the one-photon model is Normal below g_t and
    Superradiant above it.
    """
    derived = derive(params)
    if params.two_photon:
        if params.g >= derived.g_collapse:
            return RegimeLabel.COLLAPSED
        if derived.g_t >= derived.g_collapse:
            logger.debug(f"g_t={derived.g_t:g} ≥ ω/2: no superradiant window (lambda={derived.lambda_:g})")
            return RegimeLabel.NO_SPT_WINDOW
    if params.g < derived.g_t:
        return RegimeLabel.NORMAL
    return RegimeLabel.SUPERRADIANT


def params_for_lambda(lambda_: float, n_qubits: int, g: float = 0.0, omega: float = 1.0,
                      coupling_order: CouplingOrder = CouplingOrder.TWO_PHOTON) -> ModelParams:
    """Parameters with omega_q chosen so that omega / (2 omega_q N) equals ``lambda_``."""
    if lambda_ <= 0:
        raise DomainError(f"lambda must be positive, got {lambda_}")
    return ModelParams(omega=omega, omega_q=omega / (2.0 * lambda_ * n_qubits), g=g,
                       n_qubits=n_qubits, coupling_order=coupling_order)
