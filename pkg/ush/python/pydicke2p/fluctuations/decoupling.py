"""
Normal-phase decoupling of the photon ladder, checked on truncated matrices.

In units of 2 omega the Hamiltonian is H = K0 + (omega_q/(2 omega)) d^dag d + V/sqrt(N)
with V = omega2 X_d (K+ + K-) and omega2 = g/omega.  The generator
S = P/sqrt(N), P = -omega2 X_d (K+ - K-), cancels V through [K0, P] = -V and
leaves (1/(2N)) [V, P] = -(2 omega2^2/N) X_d^2 K0 at second order.
"""
from dataclasses import dataclass
from typing import Dict

import numpy as np
from scipy import sparse

from pydicke2p.core import ModelParams
from pydicke2p.ed.operators import boson_operators, su11_generators


@dataclass(frozen=True)
class DecouplingCheck:
    first_order_residual: float
    second_order_residual: float
    projected_coeff_sq: float


def phase1_generator(params: ModelParams, d_cutoff: int = 20, a_cutoff: int = 20) -> Dict[str, sparse.csr_matrix]:
    """K0, V, P and X_d^2 on (d mode) (x) (photon mode), dimensionless."""
    omega2 = params.g / params.omega
    d, _, _ = boson_operators(d_cutoff)
    x_d = d + d.T
    k0, kp, km = su11_generators(a_cutoff)
    id_d = sparse.identity(d_cutoff + 1, format='csr')
    return {'k0': sparse.kron(id_d, k0).tocsr(),
            'v': (omega2 * sparse.kron(x_d, kp + km)).tocsr(),
            'p': (-omega2 * sparse.kron(x_d, kp - km)).tocsr(),
            'xd2': sparse.kron(x_d @ x_d, sparse.identity(a_cutoff + 1)).tocsr()}


def _interior(d_cutoff: int, a_cutoff: int) -> np.ndarray:
    n_d = np.repeat(np.arange(d_cutoff + 1), a_cutoff + 1)
    n_a = np.tile(np.arange(a_cutoff + 1), d_cutoff + 1)
    return np.flatnonzero((n_d <= d_cutoff - 1) & (n_a <= a_cutoff - 2))


def check_phase1_decoupling(params: ModelParams, d_cutoff: int = 20, a_cutoff: int = 20) -> DecouplingCheck:
    """
    Max-norm residuals of the first- and second-order decoupling identities.

    Matrix products are compared only between states whose intermediate states
    all lie inside the truncation.  ``projected_coeff_sq`` is the resulting
    coefficient of (d + d^dag)^2 in energy units once K0 is projected on 1/4.
    """
    ops = phase1_generator(params, d_cutoff, a_cutoff)
    k0, v, p, xd2 = ops['k0'], ops['v'], ops['p'], ops['xd2']
    keep = _interior(d_cutoff, a_cutoff)
    first = (k0 @ p - p @ k0 + v).toarray()[np.ix_(keep, keep)]
    omega2 = params.g / params.omega
    second = (0.5 * (v @ p - p @ v) + 2.0 * omega2 ** 2 * (xd2 @ k0)).toarray()[np.ix_(keep, keep)]
    coeff_sq = 2.0 * params.omega * (-2.0 * omega2 ** 2 / params.n_qubits) * 0.25
    return DecouplingCheck(first_order_residual=float(np.abs(first).max()),
                           second_order_residual=float(np.abs(second).max()), projected_coeff_sq=coeff_sq)
