#!/usr/bin/env python3
# exdicke2p_exponents.py
# This script runs the critical-exponent pipeline of the two-photon Dicke model
# at the defaults of parm/config.yaml and writes the fits and the reference-exponent
# comparison into $DATA.
import os

from wxflow import AttrDict, Logger, cast_strdict_as_dtypedict, parse_j2yaml
from pydicke2p.task import ExponentsTask
from pydicke2p.utils.config import merge_sections

# Initialize root logger
logger = Logger(level=os.environ.get('LOGGING_LEVEL', 'INFO'), colored_log=True)


if __name__ == '__main__':

    # Take configuration from environment and cast it as python dictionary
    config_env = cast_strdict_as_dtypedict(os.environ)
    config_env.setdefault('DATA', os.getcwd())
    # Take configuration from YAML file and flatten the sections this task reads
    config_yaml = parse_j2yaml(os.path.join(config_env['HOMEdicke2p'], 'parm', 'config.yaml'), config_env)
    config = AttrDict(**merge_sections(config_yaml, ['dicke2p', 'fluctuations', 'exponents']))

    # Instantiate the task
    exponents = ExponentsTask(config)

    # Run the task
    exponents.initialize()
    exponents.execute()
    exponents.finalize()
