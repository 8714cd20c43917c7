from dataclasses import dataclass
from enum import Enum

import numpy as np


class ParitySector(str, Enum):
    EVEN = "Even"
    ODD = "Odd"
    BOTH = "Both"

    @classmethod
    def parse(cls, value) -> "ParitySector":
        if isinstance(value, cls):
            return value
        for member in cls:
            if str(value).strip().lower() == member.value.lower():
                return member
        raise ValueError(f"unknown parity sector '{value}'")


@dataclass(frozen=True)
class BasisSpec:
    """
    Product basis |j=N/2, m> (x) |n> of the maximal-j Dicke manifold and a truncated Fock space.

    Full-space index = m_index * (fock_cutoff + 1) + n with m_index = m + N/2.
    A parity sector keeps the subset of those indices with n of the given parity,
    in the same order.
    """
    n_qubits: int
    fock_cutoff: int
    parity_sector: ParitySector = ParitySector.BOTH

    def __post_init__(self):
        object.__setattr__(self, 'parity_sector', ParitySector.parse(self.parity_sector))
        if self.n_qubits < 1 or self.fock_cutoff < 0:
            raise ValueError(f"invalid basis N={self.n_qubits}, n_max={self.fock_cutoff}")

    @property
    def j(self) -> float:
        return self.n_qubits / 2.0

    @property
    def spin_dim(self) -> int:
        return self.n_qubits + 1

    @property
    def fock_dim(self) -> int:
        return self.fock_cutoff + 1

    @property
    def full_dimension(self) -> int:
        return self.spin_dim * self.fock_dim

    def fock_levels(self) -> np.ndarray:
        levels = np.arange(self.fock_dim)
        if self.parity_sector is ParitySector.EVEN:
            return levels[levels % 2 == 0]
        if self.parity_sector is ParitySector.ODD:
            return levels[levels % 2 == 1]
        return levels

    def indices(self) -> np.ndarray:
        m_index = np.repeat(np.arange(self.spin_dim), self.fock_levels().size)
        n = np.tile(self.fock_levels(), self.spin_dim)
        return m_index * self.fock_dim + n

    @property
    def dimension(self) -> int:
        return self.spin_dim * self.fock_levels().size

    def with_cutoff(self, fock_cutoff: int) -> "BasisSpec":
        return BasisSpec(self.n_qubits, fock_cutoff, self.parity_sector)
