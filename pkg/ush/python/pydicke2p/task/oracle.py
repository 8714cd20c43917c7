#!/usr/bin/env python3

from logging import getLogger
from typing import Any, Dict, Optional

import pandas as pd
from wxflow import logit

from pydicke2p.core import RegimeLabel, UsageError, regime_classify
from pydicke2p.ed import (BasisSpec, EDConfig, ParitySector, build_hamiltonian, collapse_probe, convergence_scan,
                          dump_coo, solve_lowest, symmetry_broken_pair)
from pydicke2p.task.base import Dicke2pTask

logger = getLogger(__name__.split('.')[-1])


def _cutoffs(value):
    if value is None:
        return None
    try:
        items = value.split(',') if isinstance(value, str) else list(value)
        return [int(item) for item in items]
    except ValueError:
        raise UsageError(f"--cutoffs expects comma-separated integers, got '{value}'", flag='--cutoffs')


class EDTask(Dicke2pTask):
    """Exact diagonalization at one cutoff, or a convergence scan over several."""
    schema = 'dicke2p-ed/1'

    @logit(logger)
    def initialize(self) -> None:
        super().initialize()
        cfg = self.task_config
        self.config = EDConfig.from_dict(cfg)
        self.cutoffs = _cutoffs(cfg.get('cutoffs'))
        if self.cutoffs is not None and len(self.cutoffs) < 3:
            raise UsageError("--cutoffs needs at least three values", flag='--cutoffs')
        self.parity = ParitySector.parse(cfg.get('parity', 'Both'))
        self.basis = BasisSpec(self.params.n_qubits, int(cfg.get('cutoff', 200)), self.parity)
        self.broken_pair = None

    @logit(logger)
    def execute(self) -> None:
        if self.cutoffs:
            try:
                self.result = convergence_scan(self.params, self.config.k, self.cutoffs, self.parity, self.config)
            except ValueError as err:
                raise UsageError(str(err), flag='--cutoffs')
            self.basis = self.basis.with_cutoff(self.cutoffs[-1])
        else:
            self.result = solve_lowest(self.params, self.basis, config=self.config)
            pure = self.params.two_photon and self.params.g1 is None
            if pure and regime_classify(self.params) is RegimeLabel.SUPERRADIANT:
                self.broken_pair = self._broken_pair()
        dump = self.task_config.get('dump_matrix')
        if dump:
            dump_coo(build_hamiltonian(self.params, self.basis, self.config.max_dimension), dump)
            logger.info(f"Hamiltonian written to {dump}")

    def _broken_pair(self):
        # the quasi-degenerate doublet lives inside one photon-parity sector
        basis = self.basis
        if basis.parity_sector is ParitySector.BOTH:
            basis = BasisSpec(basis.n_qubits, basis.fock_cutoff, ParitySector.EVEN)
        pair = solve_lowest(self.params, basis, k=2, config=self.config, keep_vectors=True)
        jx, _ = symmetry_broken_pair(basis, pair)
        return [float(v) for v in jx]

    def payload(self) -> Dict[str, Any]:
        out = super().payload()
        out['ed'] = self.result.to_dict()
        if self.broken_pair is not None:
            out['symmetry_broken_jx'] = self.broken_pair
        return out

    def frame(self) -> Optional[pd.DataFrame]:
        data = self.result.to_dict()
        return pd.DataFrame({key: data[key] for key in ('eigenvalues', 'photons', 'jz', 'jx', 'var_xa', 'var_pa',
                                                        'residuals')}).assign(cutoff_used=data['cutoff_used'],
                                                                              converged=data['converged'])

    def summary(self) -> Dict[str, Any]:
        return dict(super().summary(), e0=self.result.e_ground, converged=self.result.converged,
                    cutoff=self.result.cutoff_used)


class CollapseTask(Dicke2pTask):
    """Level spacing of the lowest states on a g grid towards omega/2."""
    schema = 'dicke2p-collapse/1'

    @logit(logger)
    def execute(self) -> None:
        cfg = self.task_config
        basis = BasisSpec(self.params.n_qubits, int(cfg.get('cutoff', 200)), ParitySector.parse(cfg.get('parity', 'Both')))
        points = int(cfg.get('g_points', 8))
        g_max = float(cfg['g_max']) if cfg.get('g_max') is not None else 0.49 * self.params.omega
        grid = [g_max * i / (points - 1) for i in range(points)] if points > 1 else [g_max]
        self.result = collapse_probe(self.params, basis, int(cfg.get('k', 6)), g_grid=grid,
                                     config=EDConfig.from_dict(cfg))
        if not self.result.monotone_decreasing:
            logger.warning("mean level spacing is not monotone on this grid")

    def payload(self) -> Dict[str, Any]:
        out = super().payload()
        out['collapse'] = self.result.to_dict()
        return out

    def frame(self) -> Optional[pd.DataFrame]:
        data = self.result.to_dict()
        return pd.DataFrame({key: data[key] for key in ('g_grid', 'spacing', 'spacing_refined', 'cutoff_sensitive')})

    def summary(self) -> Dict[str, Any]:
        return dict(super().summary(), monotone_decreasing=self.result.monotone_decreasing)
