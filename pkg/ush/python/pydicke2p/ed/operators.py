"""
Sparse building blocks: collective spin at j = N/2, truncated boson, SU(1,1) generators.

All matrices are real CSR; the spin basis is ordered m = -N/2 ... N/2.
"""
import numpy as np
from scipy import sparse

from pydicke2p.ed.basis import ParitySector


def spin_operators(n_qubits: int):
    """(J_z, J_+) for spin j = N/2; J_- is J_+.T."""
    j = n_qubits / 2.0
    m = np.arange(n_qubits + 1) - j
    jz = sparse.diags(m, format='csr')
    ladder = np.sqrt(j * (j + 1.0) - m[:-1] * (m[:-1] + 1.0))
    jp = sparse.diags(ladder, offsets=-1, shape=(n_qubits + 1, n_qubits + 1), format='csr')
    return jz, jp


def boson_operators(fock_cutoff: int):
    """(a, a^2, n) on levels 0 ... fock_cutoff; creation operators are the transposes."""
    levels = np.arange(fock_cutoff + 1, dtype=float)
    dim = fock_cutoff + 1
    a = sparse.diags(np.sqrt(levels[1:]), offsets=1, shape=(dim, dim), format='csr')
    a2 = sparse.diags(np.sqrt(levels[2:] * levels[1:-1]), offsets=2, shape=(dim, dim), format='csr')
    return a, a2, sparse.diags(levels, format='csr')


def su11_generators(fock_cutoff: int):
    """K0 = (a^dag a + 1/2)/2, K+ = a^dag^2/2, K- = a^2/2."""
    _, a2, num = boson_operators(fock_cutoff)
    identity = sparse.identity(fock_cutoff + 1, format='csr')
    return ((num + 0.5 * identity) / 2.0).tocsr(), (a2.T / 2.0).tocsr(), (a2 / 2.0).tocsr()


def bargmann_index(parity) -> float:
    """Bargmann index of the SU(1,1) irrep spanned by even (1/4) or odd (3/4) photon numbers."""
    sector = ParitySector.parse(parity)
    if sector is ParitySector.BOTH:
        raise ValueError("the Bargmann index is defined per parity sector")
    return 0.25 if sector is ParitySector.EVEN else 0.75


def su11_casimir(fock_cutoff: int):
    """K0^2 - (K+ K- + K- K+)/2; equals -3/16 on levels below fock_cutoff - 1."""
    k0, kp, km = su11_generators(fock_cutoff)
    return (k0 @ k0 - 0.5 * (kp @ km + km @ kp)).tocsr()
