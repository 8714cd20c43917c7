"""
Finite-N Hamiltonian in the truncated Dicke (x) Fock basis.

    H = omega a^dag a + omega_q J_z + (g/N)(J_+ + J_-)(a^2 + a^dag^2)      (two-photon)
    H = omega a^dag a + omega_q J_z + (g/N)(J_+ + J_-)(a + a^dag)          (one-photon)

plus (g1/N)(J_+ + J_-)(a + a^dag) when the linear coupling g1 is set.
"""
import math
import os
from logging import getLogger

import numpy as np
from scipy import sparse
from wxflow import FileHandler

from pydicke2p.core import DimensionError, DomainError, ModelParams
from pydicke2p.ed.basis import BasisSpec, ParitySector
from pydicke2p.ed.operators import boson_operators, spin_operators

logger = getLogger(__name__.split('.')[-1])

DEFAULT_MAX_DIMENSION = 500_000


def _check(params: ModelParams, basis: BasisSpec, max_dimension: int) -> None:
    if basis.n_qubits != params.n_qubits:
        raise DomainError(f"basis has N={basis.n_qubits} but parameters have N={params.n_qubits}")
    breaks_parity = not params.two_photon or bool(params.g1)
    if breaks_parity and basis.parity_sector is not ParitySector.BOTH:
        raise DomainError("photon parity is only conserved by the pure two-photon coupling")
    if basis.full_dimension > max_dimension:
        raise DimensionError(f"dimension {basis.full_dimension} exceeds the cap {max_dimension}")
    if params.two_photon and params.g >= params.omega / 2:
        logger.warning(f"g={params.g:g} ≥ ω/2: spectrum unbounded, results are truncation artifacts")


def restrict(matrix, basis: BasisSpec):
    """Restrict a full-space operator to the basis parity sector."""
    if basis.parity_sector is ParitySector.BOTH:
        return matrix.tocsr()
    idx = basis.indices()
    return matrix.tocsr()[idx][:, idx].tocsr()


def build_hamiltonian(params: ModelParams, basis: BasisSpec, max_dimension: int = DEFAULT_MAX_DIMENSION):
    """
    Sparse Hamiltonian from Kronecker products of spin and boson operators.

    The coupling is a Kronecker product of two symmetric matrices, so the result
    is exactly symmetric.

    :raises DimensionError: the full space exceeds ``max_dimension``
    """
    _check(params, basis, max_dimension)
    jz, jp = spin_operators(basis.n_qubits)
    a, a2, num = boson_operators(basis.fock_cutoff)
    spin_x2 = jp + jp.T
    id_spin = sparse.identity(basis.spin_dim, format='csr')
    id_boson = sparse.identity(basis.fock_dim, format='csr')

    field = (a2 + a2.T) if params.two_photon else (a + a.T)
    h = params.omega * sparse.kron(id_spin, num) + params.omega_q * sparse.kron(jz, id_boson) \
        + (params.g / params.n_qubits) * sparse.kron(spin_x2, field)
    if params.g1:
        h = h + (params.g1 / params.n_qubits) * sparse.kron(spin_x2, a + a.T)
    h = restrict(h, basis)
    logger.debug(f"H: dim={h.shape[0]}, nnz={h.nnz}, sector={basis.parity_sector.value}")
    return h


def build_hamiltonian_reference(params: ModelParams, basis: BasisSpec, max_dimension: int = DEFAULT_MAX_DIMENSION):
    """Same Hamiltonian assembled element by element from the ladder rules, as a cross-check."""
    _check(params, basis, max_dimension)
    n_qubits, n_max = basis.n_qubits, basis.fock_cutoff
    j = n_qubits / 2.0
    rows, cols, vals = [], [], []

    def index(m_index, n):
        return m_index * (n_max + 1) + n

    couplings = [(2 if params.two_photon else 1, params.g / n_qubits)]
    if params.g1:
        couplings.append((1, params.g1 / n_qubits))

    for m_index in range(n_qubits + 1):
        m = m_index - j
        for n in range(n_max + 1):
            rows.append(index(m_index, n))
            cols.append(index(m_index, n))
            vals.append(params.omega * n + params.omega_q * m)
            for dm in (1, -1):
                if not 0 <= m_index + dm <= n_qubits:
                    continue
                spin_elem = math.sqrt(j * (j + 1.0) - m * (m + dm))
                for power, strength in couplings:
                    for n_new in (n + power, n - power):
                        if not 0 <= n_new <= n_max:
                            continue
                        boson_elem = math.sqrt(math.prod(range(min(n, n_new) + 1, max(n, n_new) + 1)))
                        rows.append(index(m_index + dm, n_new))
                        cols.append(index(m_index, n))
                        vals.append(strength * spin_elem * boson_elem)
    dim = basis.full_dimension
    h = sparse.coo_matrix((vals, (rows, cols)), shape=(dim, dim)).tocsr()
    return restrict(h, basis)


def dump_coo(matrix, path: str) -> None:
    """Write ``row col value`` lines, values with 17 significant digits."""
    coo = sparse.coo_matrix(matrix)
    FileHandler({'mkdir': [os.path.dirname(os.path.abspath(path))]}).sync()
    np.savetxt(path, np.column_stack([coo.row, coo.col, coo.data]), fmt=['%d', '%d', '%.17g'])
