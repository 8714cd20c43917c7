import math
import multiprocessing as mp
from dataclasses import dataclass, field
from datetime import datetime, timezone
from logging import getLogger
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
import pandas as pd
from wxflow import logit

import pydicke2p
from pydicke2p.core import Dicke2pError, ModelParams, PhaseError, derive, regime_classify
from pydicke2p.ed import BasisSpec, EDConfig, solve_lowest
from pydicke2p.fluctuations import FluctuationConfig, solve_fluctuations
from pydicke2p.meanfield import minimize

logger = getLogger(__name__.split('.')[-1])

TRACKS = ('analytic', 'ed')
SCHEMA = 'dicke2p-sweep'
SCHEMA_VERSION = 1
CSV_COLUMNS = ['g', 'phase', 'beta', 'e_exc_over_omega_q', 'var_xd', 'var_xa', 'r_a', 'r_s',
               'e_exc', 'e_ground', 'guarded', 'error']
ED_COLUMNS = ['ed_e0', 'ed_gap', 'ed_photons', 'ed_spin', 'ed_error']


@dataclass
class SweepResult:
    axis: str
    grid: List[float]
    records: List[Dict[str, Any]]
    metadata: Dict[str, Any] = field(default_factory=dict)
    timestamps: Dict[str, str] = field(default_factory=dict)

    @property
    def params(self) -> ModelParams:
        return ModelParams.from_dict(self.metadata['params'])

    @classmethod
    def from_records(cls, params: ModelParams, records: List[Dict[str, Any]], axis: str = 'g') -> "SweepResult":
        return cls(axis=axis, grid=[float(r[axis]) for r in records], records=records,
                   metadata={'params': params.to_dict(), 'tracks': ['analytic']})

    def columns(self) -> List[str]:
        tracks = self.metadata.get('tracks', ['analytic'])
        return CSV_COLUMNS + (ED_COLUMNS if 'ed' in tracks else [])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame.from_records(self.records).reindex(columns=self.columns())

    def to_dict(self, with_timestamps: bool = False) -> Dict[str, Any]:
        out = {'schema': f"{SCHEMA}/{SCHEMA_VERSION}", 'axis': self.axis, 'grid': list(self.grid),
               'records': self.records, 'metadata': self.metadata}
        if with_timestamps:
            out['timestamps'] = self.timestamps
        return out

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SweepResult":
        return cls(axis=data['axis'], grid=list(data['grid']), records=list(data['records']),
                   metadata=dict(data['metadata']), timestamps=dict(data.get('timestamps', {})))


def _analytic_point(params: ModelParams, fluct_config: FluctuationConfig) -> Dict[str, Any]:
    nan = float('nan')
    record = {'phase': regime_classify(params).value, 'beta': nan, 'e_exc_over_omega_q': nan, 'var_xd': nan,
              'var_xa': nan, 'r_a': nan, 'r_s': nan, 'e_exc': nan, 'e_ground': nan, 'guarded': False,
              'error': ''}
    try:
        mf = minimize(params)
        record['beta'] = mf.beta
        fl = solve_fluctuations(params, fluct_config, mf=mf)
    except PhaseError as err:
        g_t = derive(params).g_t
        record['guarded'] = abs(params.g - g_t) / g_t < fluct_config.guard(params.n_qubits)
        record['error'] = str(err)
        return record
    except Dicke2pError as err:
        record['error'] = f"{type(err).__name__}: {err}"
        return record
    record.update({'e_exc_over_omega_q': fl.e_exc / params.omega_q, 'var_xd': fl.var_xd, 'var_xa': fl.var_xa,
                   'r_a': fl.r_a, 'r_s': fl.r_s, 'e_exc': fl.e_exc, 'e_ground': fl.e_ground})
    return record


def _ed_point(params: ModelParams, basis: BasisSpec, ed_config: EDConfig) -> Dict[str, Any]:
    try:
        result = solve_lowest(params, basis, k=2, config=ed_config)
    except Dicke2pError as err:
        return {'ed_error': f"{type(err).__name__}: {err}"}
    return {'ed_e0': float(result.eigenvalues[0]), 'ed_gap': float(result.eigenvalues[1] - result.eigenvalues[0]),
            'ed_photons': float(result.photons[0]), 'ed_spin': float(result.jz[0] + params.n_qubits / 2.0)}


def evaluate_point(params: ModelParams, g: float, tracks: Sequence[str], basis: Optional[BasisSpec],
                   fluct_config: FluctuationConfig, ed_config: EDConfig) -> Dict[str, Any]:
    point = params.with_g(g)
    record = {'g': float(g)}
    if 'analytic' in tracks:
        record.update(_analytic_point(point, fluct_config))
    else:
        record['phase'] = regime_classify(point).value
    if 'ed' in tracks:
        record.update(_ed_point(point, basis, ed_config))
    if record.get('error'):
        logger.warning(f"g={g:.10g}: {record['error']}")
    return record


@logit(logger)
def sweep_g(params_base: ModelParams, g_grid: Sequence[float], tracks: Sequence[str] = ('analytic',),
            basis: Optional[BasisSpec] = None, fluct_config: Optional[FluctuationConfig] = None,
            ed_config: Optional[EDConfig] = None, workers: int = 1) -> SweepResult:
    """
    Evaluate the requested tracks at every coupling of ``g_grid``.

    Points are independent; with ``workers > 1`` they are distributed over a
    process pool and collected back in grid order.  A failing point is recorded
    with its error text and the sweep continues.
    """
    tracks = list(tracks)
    unknown = set(tracks) - set(TRACKS)
    if unknown or not tracks:
        raise ValueError(f"tracks must be a non-empty subset of {TRACKS}, got {tracks}")
    if 'ed' in tracks and basis is None:
        raise ValueError("the ed track needs a BasisSpec")
    grid = [float(g) for g in g_grid]
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise ValueError("g grid must be strictly increasing")
    fluct_config = fluct_config or FluctuationConfig()
    ed_config = ed_config or EDConfig()

    started = datetime.now(timezone.utc).isoformat()
    jobs = [(params_base, g, tracks, basis, fluct_config, ed_config) for g in grid]
    if workers > 1 and len(jobs) > 1:
        with mp.Pool(processes=workers) as pool:
            records = pool.starmap(evaluate_point, jobs)
    else:
        records = [evaluate_point(*job) for job in jobs]

    derived = derive(params_base)
    metadata = {'params': params_base.to_dict(), 'tracks': tracks, 'version': pydicke2p.__version__,
                'g_t': derived.g_t, 'lambda': derived.lambda_,
                'guard': fluct_config.guard(params_base.n_qubits)}
    if basis is not None:
        metadata['basis'] = {'fock_cutoff': basis.fock_cutoff, 'parity_sector': basis.parity_sector.value}
    failed = sum(1 for r in records if r.get('error') or r.get('ed_error'))
    logger.info(f"swept {len(grid)} points, {failed} with errors")
    return SweepResult(axis='g', grid=grid, records=records, metadata=metadata,
                       timestamps={'started': started, 'finished': datetime.now(timezone.utc).isoformat()})


def g_grid_linear(params: ModelParams, points: int, g_min: float = 0.0, g_max: Optional[float] = None) -> np.ndarray:
    """Uniform grid on [g_min, g_max]; g_max defaults to 0.49 omega."""
    g_max = 0.49 * params.omega if g_max is None else g_max
    if points < 1 or g_max < g_min:
        raise ValueError(f"invalid grid: {points} points on [{g_min}, {g_max}]")
    return np.linspace(g_min, g_max, points) if points > 1 else np.array([g_min])


def record_is_finite(record: Dict[str, Any], key: str) -> bool:
    value = record.get(key)
    return isinstance(value, (int, float)) and math.isfinite(value)
