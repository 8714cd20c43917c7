from dataclasses import dataclass, field, fields
from logging import getLogger
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg, sparse
from scipy.sparse.linalg import ArpackNoConvergence, eigsh
from wxflow import logit

from pydicke2p.core import ConvergenceError, ModelParams
from pydicke2p.ed.basis import BasisSpec, ParitySector
from pydicke2p.ed.hamiltonian import DEFAULT_MAX_DIMENSION, build_hamiltonian, restrict
from pydicke2p.ed.operators import boson_operators, spin_operators

logger = getLogger(__name__.split('.')[-1])


@dataclass
class EDConfig:
    dense_threshold: int = 2000
    max_dimension: int = DEFAULT_MAX_DIMENSION
    tol: float = 1.0e-10
    k: int = 6
    convergence_tol: float = 1.0e-9
    maxiter: Optional[int] = None
    seed: int = 0

    @classmethod
    def from_dict(cls, config: Dict[str, Any]) -> "EDConfig":
        obj = cls()
        for f in fields(cls):
            if f.name in config and config[f.name] is not None:
                cast = float if f.name in ('tol', 'convergence_tol') else int
                setattr(obj, f.name, cast(config[f.name]))
        return obj


@dataclass
class EDResult:
    eigenvalues: np.ndarray
    photons: np.ndarray
    jz: np.ndarray
    jx: np.ndarray
    var_xa: np.ndarray
    var_pa: np.ndarray
    cutoff_used: int
    parity_sector: ParitySector = ParitySector.BOTH
    converged: bool = True
    convergence_history: List[Tuple[int, float]] = field(default_factory=list)
    residuals: np.ndarray = None
    vectors: Optional[np.ndarray] = field(default=None, repr=False, compare=False)

    _ARRAYS = ('eigenvalues', 'photons', 'jz', 'jx', 'var_xa', 'var_pa', 'residuals')

    @property
    def e_ground(self) -> float:
        return float(self.eigenvalues[0])

    def to_dict(self) -> Dict[str, Any]:
        out = {name: [float(v) for v in getattr(self, name)] for name in self._ARRAYS}
        out.update({'cutoff_used': int(self.cutoff_used), 'parity_sector': self.parity_sector.value,
                    'converged': bool(self.converged),
                    'convergence_history': [[int(c), float(e)] for c, e in self.convergence_history]})
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "EDResult":
        kwargs = {name: np.asarray(data[name], dtype=float) for name in cls._ARRAYS}
        return cls(cutoff_used=int(data['cutoff_used']), parity_sector=ParitySector(data['parity_sector']),
                   converged=bool(data['converged']),
                   convergence_history=[(int(c), float(e)) for c, e in data['convergence_history']], **kwargs)


def observable_operators(basis: BasisSpec) -> Dict[str, sparse.csr_matrix]:
    """a^dag a, J_z, J_x, X_a^2 and P_a^2 restricted to the basis sector."""
    jz, jp = spin_operators(basis.n_qubits)
    _, a2, num = boson_operators(basis.fock_cutoff)
    id_spin = sparse.identity(basis.spin_dim, format='csr')
    id_boson = sparse.identity(basis.fock_dim, format='csr')
    squares = a2 + a2.T
    ops = {'photons': sparse.kron(id_spin, num),
           'jz': sparse.kron(jz, id_boson),
           'jx': sparse.kron((jp + jp.T) / 2.0, id_boson),
           'xa2': sparse.kron(id_spin, squares + 2.0 * num + id_boson),
           'pa2': sparse.kron(id_spin, -squares + 2.0 * num + id_boson)}
    return {key: restrict(op, basis) for key, op in ops.items()}


def _expectations(ops: Dict[str, Any], vectors: np.ndarray) -> Dict[str, np.ndarray]:
    return {key: np.einsum('ij,ij->j', vectors, op @ vectors) for key, op in ops.items()}


def _diagonalize(h, k: int, config: EDConfig, solver: str):
    dim = h.shape[0]
    k = min(k, dim)
    use_dense = solver == 'dense' or (solver == 'auto' and dim < config.dense_threshold) or k >= dim - 1
    if use_dense:
        logger.debug(f"dense eigh, dim={dim}, k={k}")
        values, vectors = linalg.eigh(h.toarray(), subset_by_index=[0, k - 1])
        return values, vectors
    logger.debug(f"sparse eigsh, dim={dim}, k={k}")
    try:
        start = np.random.default_rng(config.seed).standard_normal(dim)
        values, vectors = eigsh(h, k=k, which='SA', tol=config.tol, maxiter=config.maxiter, v0=start)
    except ArpackNoConvergence as err:
        residuals = [float(np.linalg.norm(h @ v - e * v)) for e, v in zip(err.eigenvalues, err.eigenvectors.T)]
        raise ConvergenceError(f"eigsh did not converge for {k} states (dim={dim})", residuals=residuals)
    order = np.argsort(values)
    return values[order], vectors[:, order]


def solve_lowest(params: ModelParams, basis: BasisSpec, k: Optional[int] = None,
                 config: Optional[EDConfig] = None, solver: str = 'auto', keep_vectors: bool = False) -> EDResult:
    """
    Lowest k eigenpairs and their observables.

    ``solver`` is 'auto' (dense below ``config.dense_threshold``), 'dense' or 'sparse'.
    Eigenvectors are real, so <P_a> vanishes and var(P_a) = <P_a^2>.

    :raises ConvergenceError: the iterative solver failed; residual norms attached
    """
    config = config or EDConfig()
    k = config.k if k is None else k
    h = build_hamiltonian(params, basis, max_dimension=config.max_dimension)
    values, vectors = _diagonalize(h, k, config, solver)
    residuals = np.linalg.norm(h @ vectors - vectors * values, axis=0)
    ex = _expectations(observable_operators(basis), vectors)
    # <X_a> vanishes on parity eigenstates; keep the general form for parity-breaking couplings
    x_mean = _x_mean(basis, vectors)
    return EDResult(eigenvalues=values, photons=ex['photons'], jz=ex['jz'], jx=ex['jx'],
                    var_xa=ex['xa2'] - x_mean ** 2, var_pa=ex['pa2'], cutoff_used=basis.fock_cutoff,
                    parity_sector=basis.parity_sector, residuals=residuals,
                    vectors=vectors if keep_vectors else None)


def _x_mean(basis: BasisSpec, vectors: np.ndarray) -> np.ndarray:
    a, _, _ = boson_operators(basis.fock_cutoff)
    x = restrict(sparse.kron(sparse.identity(basis.spin_dim, format='csr'), a + a.T), basis)
    return np.einsum('ij,ij->j', vectors, x @ vectors)


@logit(logger)
def convergence_scan(params: ModelParams, k: int, cutoffs: Sequence[int],
                     parity_sector: ParitySector = ParitySector.BOTH,
                     config: Optional[EDConfig] = None) -> EDResult:
    """
    Solve at increasing Fock cutoffs and flag whether the ground energy has settled.

    Converged means the relative change of E_0 between the last two cutoffs is
    below ``config.convergence_tol``.  A ground energy that rises with the cutoff
    breaks the variational bound and is logged.  Never raises for non-convergence.
    """
    config = config or EDConfig()
    cutoffs = [int(c) for c in cutoffs]
    if len(cutoffs) < 3 or any(b <= a for a, b in zip(cutoffs, cutoffs[1:])):
        raise ValueError(f"need at least 3 strictly ascending cutoffs, got {cutoffs}")

    history = []
    result = None
    for cutoff in cutoffs:
        result = solve_lowest(params, BasisSpec(params.n_qubits, cutoff, parity_sector), k=k, config=config)
        history.append((cutoff, result.e_ground))
        logger.info(f"cutoff {cutoff}: E0={result.e_ground:.15g}")

    energies = [e for _, e in history]
    for (c0, e0), (c1, e1) in zip(history, history[1:]):
        if e1 > e0 + 1.0e-12 * max(1.0, abs(e0)):
            logger.warning(f"ground energy rose from cutoff {c0} to {c1}: {e0:.15g} -> {e1:.15g}")
    change = abs(energies[-1] - energies[-2]) / max(abs(energies[-1]), np.finfo(float).tiny)
    result.converged = bool(change < config.convergence_tol)
    result.convergence_history = history
    if not result.converged:
        logger.warning(f"ground energy not converged in the cutoff: relative change {change:.3e}")
    return result
