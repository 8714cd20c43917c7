from pydicke2p.task.base import Dicke2pTask, params_from_config  # noqa
from pydicke2p.task.analytic import MeanFieldTask, FluctuationsTask  # noqa
from pydicke2p.task.sweeps import SweepTask, ExponentsTask  # noqa
from pydicke2p.task.oracle import EDTask, CollapseTask  # noqa

TASKS = {
    'meanfield': MeanFieldTask,
    'fluctuations': FluctuationsTask,
    'sweep': SweepTask,
    'ed': EDTask,
    'exponents': ExponentsTask,
    'collapse': CollapseTask,
}
