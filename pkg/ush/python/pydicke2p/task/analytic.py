#!/usr/bin/env python3

from logging import getLogger
from typing import Any, Dict

from wxflow import logit

from pydicke2p.core import RegimeLabel
from pydicke2p.fluctuations import FluctuationConfig, solve_fluctuations, spin_fluctuations
from pydicke2p.meanfield import MeanFieldConfig, minimize, solve_linear_extension
from pydicke2p.task.base import Dicke2pTask

logger = getLogger(__name__.split('.')[-1])


class MeanFieldTask(Dicke2pTask):
    """Order parameter and mean-field observables; adds the linear extension when g1 is set."""
    schema = 'dicke2p-meanfield/1'

    @logit(logger)
    def execute(self) -> None:
        config = MeanFieldConfig.from_dict(self.task_config)
        self.result = minimize(self.params, config)
        self.extension = solve_linear_extension(self.params, config) if self.params.g1 is not None else None
        logger.info(f"{self.result.regime.value}: beta={self.result.beta:.12g}, E_G={self.result.e_ground:.12g}")

    def payload(self) -> Dict[str, Any]:
        out = super().payload()
        out['meanfield'] = self.result.to_dict()
        if self.extension is not None:
            out['linear_extension'] = self.extension.to_dict()
        return out

    def summary(self) -> Dict[str, Any]:
        return dict(super().summary(), regime=self.result.regime.value, beta=self.result.beta)


class FluctuationsTask(Dicke2pTask):
    """Beyond-mean-field squeezing, excitation energy and spin variances."""
    schema = 'dicke2p-fluctuations/1'

    @logit(logger)
    def execute(self) -> None:
        self.meanfield = minimize(self.params, MeanFieldConfig.from_dict(self.task_config))
        self.result = solve_fluctuations(self.params, FluctuationConfig.from_dict(self.task_config),
                                         mf=self.meanfield)
        self.spin = spin_fluctuations(self.params, self.result, self.meanfield)
        if self.result.phase is RegimeLabel.SUPERRADIANT:
            logger.info("superradiant ground energy is mean field plus Bogoliubov shift (no closed form)")

    def payload(self) -> Dict[str, Any]:
        out = super().payload()
        out.update({'meanfield': self.meanfield.to_dict(), 'fluctuations': self.result.to_dict(),
                    'spin': self.spin.to_dict()})
        return out

    def summary(self) -> Dict[str, Any]:
        return dict(super().summary(), phase=self.result.phase.value, e_exc=self.result.e_exc)
