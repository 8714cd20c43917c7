"""
Single-mode Bogoliubov engine.

Canonical form: H = c + A d^dag d + C (d + d^dag)^2 + L (d + d^dag).
Terms written with (d^2 + d^dag^2) are converted through
(d^2 + d^dag^2) = (d + d^dag)^2 - 2 d^dag d - 1 before reaching this module.
"""
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import eigh

from pydicke2p.core import InstabilityError


@dataclass(frozen=True)
class QuadraticBosonForm:
    c_number: float
    coeff_n: float
    coeff_sq: float
    coeff_lin: float = 0.0

    @property
    def stiffness(self) -> float:
        """Coefficient of X^2/4 once d^dag d is rewritten as (X^2 + P^2 - 2)/4."""
        return self.coeff_n + 4.0 * self.coeff_sq

    def is_stable(self) -> bool:
        return self.coeff_n > 0 and self.stiffness > 0


class BogoliubovResult(NamedTuple):
    e_exc: float
    r: float
    e_ground_shift: float
    displacement: float


def bogoliubov_diagonalize(form: QuadraticBosonForm) -> BogoliubovResult:
    """
    Diagonalize a stable quadratic form.

    The linear term is absorbed by shifting d -> d + displacement, after which
    the form is a squeezed oscillator with var(X) = exp(-2r), var(P) = exp(2r).
    ``e_ground_shift`` is the full ground energy: c_number, zero-point shift
    (E_exc - A)/2 and displacement energy.

    :raises InstabilityError: when A <= 0 or A + 4C <= 0
    """
    a, k = form.coeff_n, form.stiffness
    if not (a > 0 and k > 0):
        raise InstabilityError(f"unstable quadratic form: A={a:.6g}, A+4C={k:.6g}")
    e_exc = math.sqrt(a * k)
    displacement = -form.coeff_lin / k
    e_ground = form.c_number + 0.5 * (e_exc - a) - form.coeff_lin ** 2 / k
    return BogoliubovResult(e_exc=e_exc, r=0.25 * math.log(k / a), e_ground_shift=e_ground,
                            displacement=displacement)


class FockGroundState(NamedTuple):
    e_ground: float
    e_exc: float
    x_mean: float
    var_x: float
    var_p: float


def fock_ground_state(form: QuadraticBosonForm, cutoff: int = 400) -> FockGroundState:
    """
    Reference solution by dense diagonalization in a truncated Fock space.

    Each call builds its own matrices; used as an independent check of
    ``bogoliubov_diagonalize``.
    """
    levels = np.arange(cutoff + 1, dtype=float)
    a = np.diag(np.sqrt(levels[1:]), k=1)
    x = a + a.T
    p2 = -(a @ a) - (a.T @ a.T) + 2.0 * np.diag(levels) + np.eye(cutoff + 1)
    x2 = (a @ a) + (a.T @ a.T) + 2.0 * np.diag(levels) + np.eye(cutoff + 1)
    h = form.c_number * np.eye(cutoff + 1) + form.coeff_n * np.diag(levels) + form.coeff_sq * x2 \
        + form.coeff_lin * x
    values, vectors = eigh(h, subset_by_index=[0, 1])
    ground = vectors[:, 0]
    x_mean = float(ground @ x @ ground)
    return FockGroundState(e_ground=float(values[0]), e_exc=float(values[1] - values[0]), x_mean=x_mean,
                           var_x=float(ground @ x2 @ ground) - x_mean ** 2, var_p=float(ground @ p2 @ ground))
