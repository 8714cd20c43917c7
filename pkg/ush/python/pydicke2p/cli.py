"""
Command-line front end of the two-photon Dicke toolkit.

Each subcommand maps to one task class in :mod:`pydicke2p.task`.  Options are
resolved in three layers: code defaults, then an optional ``--config`` file,
then the flags given on the command line.
"""
import os
import sys
from argparse import SUPPRESS, ArgumentDefaultsHelpFormatter, ArgumentParser
from dataclasses import dataclass, field, fields
from logging import getLogger
from typing import List, Optional, Sequence

from wxflow import AttrDict, Logger

from pydicke2p.core import Dicke2pError, ModelParams, UsageError
from pydicke2p.ed import EDConfig
from pydicke2p.fluctuations import FluctuationConfig
from pydicke2p.meanfield import MeanFieldConfig
from pydicke2p.sweep import FitConfig
from pydicke2p.task import TASKS, params_from_config
from pydicke2p.utils.config import normalize_key, read_config_file

logger = getLogger(__name__.split('.')[-1])

SUBCOMMANDS = tuple(TASKS)

EXIT_OK, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    'omega': 1.0, 'omega_q': None, 'n': None, 'g': 0.0, 'lambda': None, 'coupling_order': 'two', 'g1': None,
    'config': None, 'output': None, 'format': 'json', 'seed': 0, 'log_level': None, 'workers': 1,
    'guard_factor': 0.1, 'summary': None,
}

SUBCOMMAND_DEFAULTS = {
    'meanfield': {},
    'fluctuations': {},
    'sweep': {'points': 200, 'g_min': 0.0, 'g_max': None, 'tracks': 'analytic', 'cutoff': 200, 'parity': 'Both'},
    'ed': {'cutoff': 200, 'parity': 'Both', 'k': 6, 'cutoffs': None, 'dump_matrix': None},
    'exponents': {'n': 1000, 'lambda': 1.0, 'window_min': 1.0e-3, 'window_max': 1.0e-1, 'fit_points': 16,
                  'sides': 'Below', 'one_photon_n': 0},
    'collapse': {'cutoff': 200, 'parity': 'Both', 'k': 6, 'g_points': 8, 'g_max': None},
}


# solver settings a config file may set for each subcommand
TUNABLES = {
    'meanfield': (MeanFieldConfig,),
    'fluctuations': (MeanFieldConfig, FluctuationConfig),
    'sweep': (FluctuationConfig, EDConfig),
    'ed': (EDConfig,),
    'exponents': (FluctuationConfig, FitConfig),
    'collapse': (EDConfig,),
}


@dataclass
class RunConfig:
    subcommand: str
    params: ModelParams
    options: AttrDict = field(default_factory=AttrDict)
    output: Optional[str] = None
    fmt: str = 'json'
    seed: int = 0


def _model_parser() -> ArgumentParser:
    parser = ArgumentParser(add_help=False, argument_default=SUPPRESS)
    group = parser.add_argument_group('model')
    group.add_argument('--omega', type=float, help='cavity frequency')
    group.add_argument('--omega-q', type=float, help='qubit splitting')
    group.add_argument('--n', type=int, help='number of qubits')
    group.add_argument('--g', type=float, help='two-photon coupling')
    group.add_argument('--lambda', type=float, help='omega / (2 omega_q N); sets omega_q')
    group.add_argument('--coupling-order', type=str, choices=['one', 'two'], help='photon order of the coupling')
    group.add_argument('--g1', type=float, help='one-photon coupling of the linear extension')
    run = parser.add_argument_group('run')
    run.add_argument('--config', type=str, help='flat YAML or key = value file with option defaults')
    run.add_argument('--output', type=str, help='result file (stdout when omitted)')
    run.add_argument('--format', type=str, choices=['json', 'csv'], help='result format (default json)')
    run.add_argument('--seed', type=int, help='seed of the randomized eigensolver start vector')
    run.add_argument('--log-level', type=str, help='DEBUG, INFO, WARNING or ERROR')
    run.add_argument('--workers', type=int, help='processes for parallel sweeps')
    run.add_argument('--guard-factor', type=float, help='guard band |g-g_t|/g_t < guard_factor/N')
    run.add_argument('--summary', type=str, help='optional YAML summary path')
    return parser


def _ed_basis_flags(parser: ArgumentParser) -> None:
    parser.add_argument('--cutoff', type=int, help='highest Fock level kept')
    parser.add_argument('--parity', type=str, choices=['Even', 'Odd', 'Both'], help='photon-parity sector')


def input_args(*argv) -> ArgumentParser:
    """
    Argument parser of ``dicke2p.py``; flags not given on the command line are
    absent from the parsed namespace so that config-file values can fill them.
    """
    description = """
        Mean-field, fluctuation and exact-diagonalization analysis of the
        two-photon Dicke model, with parameter sweeps and critical-exponent fits.
        """
    parser = ArgumentParser(prog='dicke2p', description=description,
                            formatter_class=ArgumentDefaultsHelpFormatter)
    sub = parser.add_subparsers(dest='subcommand', metavar='subcommand')
    sub.required = True
    parent = _model_parser()
    helps = {'meanfield': 'mean-field order parameter',
             'fluctuations': 'squeezing and excitation energy beyond mean field',
             'sweep': 'g sweep of the analytic and/or ED tracks',
             'ed': 'exact diagonalization (one cutoff or a convergence scan)',
             'exponents': 'critical-exponent fits and the Table I comparison',
             'collapse': 'level spacing towards the spectral collapse'}
    parsers = {name: sub.add_parser(name, parents=[parent], help=helps[name], argument_default=SUPPRESS)
               for name in SUBCOMMANDS}

    sweep = parsers['sweep']
    sweep.add_argument('--points', type=int, help='grid points')
    sweep.add_argument('--g-min', type=float, help='first g of the grid')
    sweep.add_argument('--g-max', type=float, help='last g of the grid (default 0.49 omega)')
    sweep.add_argument('--tracks', type=str, help="comma-separated subset of 'analytic,ed'")
    _ed_basis_flags(sweep)

    ed = parsers['ed']
    _ed_basis_flags(ed)
    ed.add_argument('--k', type=int, help='number of eigenpairs')
    ed.add_argument('--cutoffs', type=str, help='comma-separated ascending cutoffs for a convergence scan')
    ed.add_argument('--dump-matrix', type=str, help='write the Hamiltonian in coordinate-list text format')

    exponents = parsers['exponents']
    exponents.add_argument('--window-min', type=float, help='smallest |g-g_t|/g_t of the fit window')
    exponents.add_argument('--window-max', type=float, help='largest |g-g_t|/g_t of the fit window')
    exponents.add_argument('--fit-points', type=int, help='log-uniform points per side')
    exponents.add_argument('--sides', type=str, help="comma-separated subset of 'Below,Above'")
    exponents.add_argument('--one-photon-n', type=int, help='N of the one-photon ED crossover (0 skips it)')

    collapse = parsers['collapse']
    _ed_basis_flags(collapse)
    collapse.add_argument('--k', type=int, help='number of levels per point')
    collapse.add_argument('--g-points', type=int, help='grid points between 0 and g-max')
    collapse.add_argument('--g-max', type=float, help='last g of the grid (default 0.49 omega)')
    return parser


def known_keys(subcommand: str) -> List[str]:
    tunables = {f.name for cls in TUNABLES[subcommand] for f in fields(cls)}
    return sorted(set(DEFAULTS) | set(SUBCOMMAND_DEFAULTS[subcommand]) | tunables)


def parse_config(argv: Sequence[str], config_file: Optional[str] = None) -> RunConfig:
    """
    Resolve command-line flags (and an optional config file) into a RunConfig.

    :raises UsageError: unknown config key or missing model parameter, with the offending flag
    :raises SystemExit: argparse usage errors (exit code 2)
    """
    namespace = input_args().parse_args(list(argv))
    flags = {normalize_key(key): value for key, value in vars(namespace).items()}
    subcommand = flags.pop('subcommand')
    config_file = flags.get('config', config_file)

    options = dict(DEFAULTS)
    options.update(SUBCOMMAND_DEFAULTS[subcommand])
    if config_file:
        file_keys = read_config_file(config_file)
        unknown = sorted(set(file_keys) - set(known_keys(subcommand)))
        if unknown:
            raise UsageError(f"unknown key(s) in {config_file} for '{subcommand}': {', '.join(unknown)}",
                             flag='--' + unknown[0].replace('_', '-'))
        options.update(file_keys)
    options.update(flags)

    if options['n'] is None:
        raise UsageError("--n is required", flag='--n')
    if options['omega_q'] is None and options['lambda'] is None:
        raise UsageError("one of --omega-q or --lambda is required", flag='--omega-q')
    params = params_from_config(options)
    return RunConfig(subcommand=subcommand, params=params, options=AttrDict(options), output=options['output'],
                     fmt=options['format'], seed=int(options['seed']))


def run(config: RunConfig) -> int:
    """Execute one subcommand; 0 on success, 1 on a computational error, 2 on a usage error."""
    try:
        task = TASKS[config.subcommand](config.options)
        task.initialize()
        task.execute()
        task.finalize()
    except UsageError as err:
        logger.error(f"{err.flag or config.subcommand}: {err}")
        return EXIT_USAGE
    except Dicke2pError as err:
        logger.error(f"{type(err).__name__}: {err}")
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    level = os.environ.get('LOGGING_LEVEL', 'INFO')
    if '--log-level' in argv and argv.index('--log-level') + 1 < len(argv):
        level = argv[argv.index('--log-level') + 1]
    Logger(level=level.upper(), colored_log=True)
    try:
        config = parse_config(argv)
    except UsageError as err:
        logger.error(f"{err.flag}: {err}")
        return EXIT_USAGE
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK
    return run(config)
