import math
from dataclasses import dataclass
from typing import Any, Dict

from pydicke2p.core import ModelParams
from pydicke2p.fluctuations.phases import FluctuationSolution
from pydicke2p.meanfield import MeanFieldSolution


@dataclass(frozen=True)
class SpinFluctuations:
    jx_mean: float
    jy_mean: float
    jz_mean: float
    var_jx: float
    var_jy: float
    var_jz: float

    def to_dict(self) -> Dict[str, Any]:
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "SpinFluctuations":
        return cls(**data)


def spin_fluctuations(params: ModelParams, fl: FluctuationSolution, mf: MeanFieldSolution) -> SpinFluctuations:
    """
    Collective-spin moments from the d-mode quadratures, to linear order in d.

        J_x = beta sqrt(N - beta^2) + (N - 2 beta^2) / (2 sqrt(N - beta^2)) X_d
        J_y = -sqrt(N - beta^2) / 2 P_d
        J_z = beta^2 - N/2 + beta X_d

    Terms quadratic in d are dropped, so the variances are leading order only.
    The order parameter is taken from ``mf.beta`` (the selected branch).
    """
    n = params.n_qubits
    beta = mf.beta
    transverse = math.sqrt(n - beta ** 2)
    x_weight = (n - 2.0 * beta ** 2) / (2.0 * transverse)
    return SpinFluctuations(jx_mean=beta * transverse, jy_mean=0.0, jz_mean=beta ** 2 - n / 2.0,
                            var_jx=x_weight ** 2 * fl.var_xd,
                            var_jy=(n - beta ** 2) / 4.0 * fl.var_pd,
                            var_jz=beta ** 2 * fl.var_xd)
