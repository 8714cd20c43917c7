#!/usr/bin/env python3

import os
from logging import getLogger
from typing import Any, Dict, Optional

import pandas as pd
from wxflow import AttrDict, logit, save_as_yaml

import pydicke2p
from pydicke2p.core import CouplingOrder, DomainError, ModelParams, UsageError, derive, validate
from pydicke2p.utils.serialize import emit, to_jsonable

logger = getLogger(__name__.split('.')[-1])


def params_from_config(config: Dict[str, Any]) -> ModelParams:
    """ModelParams from flat run options; ``lambda`` overrides omega_q when given."""
    try:
        n_qubits = int(config['n'])
        omega = float(config.get('omega', 1.0))
        if config.get('lambda') is not None:
            omega_q = omega / (2.0 * float(config['lambda']) * n_qubits)
        else:
            omega_q = float(config['omega_q'])
        coupling_order = CouplingOrder.parse(config.get('coupling_order', 'two'))
    except (KeyError, TypeError, ValueError) as err:
        raise UsageError(f"invalid model parameters: {err}")
    g1 = config.get('g1')
    return ModelParams(omega=omega, omega_q=omega_q, g=float(config.get('g', 0.0)), n_qubits=n_qubits,
                       coupling_order=coupling_order, g1=None if g1 is None else float(g1))


class Dicke2pTask:
    """
    Common shape of the computational tasks: initialize, execute, finalize.

    ``finalize`` writes the task payload as JSON (or the task table as CSV) to
    ``output``, or to stdout without one, and an optional YAML summary.
    """
    schema = 'dicke2p-result/1'

    def __init__(self, config: Dict[str, Any]) -> None:
        self.task_config = AttrDict(config)
        self.params = params_from_config(self.task_config)
        self.result = None

    @logit(logger)
    def initialize(self) -> None:
        report = validate(self.params)
        if not report.ok:
            logger.warning(f"parameter violations: {report.violations}")
        logger.info(f"{type(self).__name__}: {self.params}")

    def execute(self) -> None:
        raise NotImplementedError

    def payload(self) -> Dict[str, Any]:
        out = {'params': self.params.to_dict(), 'version': pydicke2p.__version__}
        try:
            out['derived'] = derive(self.params).to_dict()
        except DomainError:
            logger.debug("no derived quantities for invalid parameters")
        return out

    def frame(self) -> Optional[pd.DataFrame]:
        return pd.json_normalize(to_jsonable(self.payload()), sep='.')

    def summary(self) -> Dict[str, Any]:
        return {'task': type(self).__name__, 'params': self.params.to_dict()}

    @logit(logger)
    def finalize(self) -> None:
        self.write_output()
        self.write_summary()

    def write_output(self) -> None:
        output = self.task_config.get('output')
        emit(self.payload(), self.frame(), output, self.task_config.get('format', 'json'), self.schema)
        if output:
            logger.info(f"wrote {output}")

    def write_summary(self) -> None:
        summary_path = self.task_config.get('summary')
        if summary_path:
            save_as_yaml(to_jsonable(self.summary()), summary_path)
            logger.info(f"summary written to {os.path.abspath(summary_path)}")
