#!/usr/bin/env python3

import sys
from logging import getLogger
from typing import Any, Dict, Optional

import pandas as pd
from wxflow import logit

from pydicke2p.core import UsageError
from pydicke2p.ed import BasisSpec, EDConfig, ParitySector
from pydicke2p.fluctuations import FluctuationConfig
from pydicke2p.sweep import (FitConfig, SCHEMA, SCHEMA_VERSION, compare_table1, g_grid_linear, one_photon_crossover,
                             run_exponent_pipeline, sweep_g)
from pydicke2p.task.base import Dicke2pTask

logger = getLogger(__name__.split('.')[-1])


def _split(value) -> list:
    if value is None:
        return []
    if isinstance(value, str):
        return [item.strip() for item in value.split(',') if item.strip()]
    return list(value)


class SweepTask(Dicke2pTask):
    """g sweep of the analytic and/or ED tracks."""
    schema = f"{SCHEMA}/{SCHEMA_VERSION}"

    @logit(logger)
    def initialize(self) -> None:
        super().initialize()
        cfg = self.task_config
        self.tracks = _split(cfg.get('tracks', 'analytic'))
        self.grid = g_grid_linear(self.params, int(cfg.get('points', 200)), float(cfg.get('g_min', 0.0)),
                                  None if cfg.get('g_max') is None else float(cfg['g_max']))
        self.basis = None
        if 'ed' in self.tracks:
            parity = ParitySector.parse(cfg.get('parity', 'Both'))
            if not self.params.two_photon:
                parity = ParitySector.BOTH
            self.basis = BasisSpec(self.params.n_qubits, int(cfg.get('cutoff', 200)), parity)

    @logit(logger)
    def execute(self) -> None:
        try:
            self.result = sweep_g(self.params, self.grid, tracks=self.tracks, basis=self.basis,
                                  fluct_config=FluctuationConfig.from_dict(self.task_config),
                                  ed_config=EDConfig.from_dict(self.task_config),
                                  workers=int(self.task_config.get('workers', 1)))
        except ValueError as err:
            raise UsageError(str(err), flag='--tracks')

    def payload(self) -> Dict[str, Any]:
        return self.result.to_dict(with_timestamps=bool(self.task_config.get('with_timestamps', True)))

    def frame(self) -> Optional[pd.DataFrame]:
        return self.result.to_frame()

    def summary(self) -> Dict[str, Any]:
        failed = sum(1 for r in self.result.records if r.get('error'))
        return dict(super().summary(), points=len(self.result.grid), failed=failed, tracks=self.tracks)


class ExponentsTask(Dicke2pTask):
    """Fits of the critical exponents around g_t and the verdict against the reference exponents."""
    schema = 'dicke2p-exponents/1'

    def __init__(self, config: Dict[str, Any]) -> None:
        config = dict(config)
        if config.get('lambda') is None:
            config['lambda'] = 1.0
        if config.get('n') is None:
            config['n'] = 1000
        super().__init__(config)

    @logit(logger)
    def initialize(self) -> None:
        super().initialize()
        cfg = self.task_config
        fit_keys = dict(cfg)
        if cfg.get('fit_points') is not None:
            fit_keys['points_per_side'] = cfg['fit_points']
        self.fit_config = FitConfig.from_dict(fit_keys)
        self.sides = _split(cfg.get('sides', 'Below'))
        self.one_photon_n = int(cfg.get('one_photon_n') or 0)

    @logit(logger)
    def execute(self) -> None:
        cfg = self.task_config
        self.sweeps, self.fits = run_exponent_pipeline(lambda_=float(cfg['lambda']), n_qubits=self.params.n_qubits,
                                                       omega=self.params.omega, sides=self.sides,
                                                       config=self.fit_config,
                                                       fluct_config=FluctuationConfig.from_dict(cfg),
                                                       workers=int(cfg.get('workers', 1)))
        crossover = None
        if self.one_photon_n:
            crossover = one_photon_crossover(lambda_=float(cfg['lambda']), n_qubits=self.one_photon_n,
                                             omega=self.params.omega)
        self.result = compare_table1(self.fits, one_photon_crossover=crossover, config=self.fit_config)
        logger.info(f"Table I comparison: {self.result.status}")

    def payload(self) -> Dict[str, Any]:
        out = super().payload()
        out.update({'fits': [fit.to_dict() for fit in self.fits], 'report': self.result.to_dict()})
        return out

    def frame(self) -> Optional[pd.DataFrame]:
        return pd.DataFrame.from_records([fit.to_dict() for fit in self.fits])

    def summary(self) -> Dict[str, Any]:
        return dict(super().summary(), status=self.result.status,
                    gamma={f"{fit.observable.value}/{fit.side.value}": fit.gamma for fit in self.fits})

    @logit(logger)
    def finalize(self) -> None:
        sys.stdout.write(self.result.render() + "\n")
        if self.task_config.get('output'):
            self.write_output()
        self.write_summary()
