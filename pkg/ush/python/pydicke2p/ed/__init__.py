from .basis import BasisSpec, ParitySector  # noqa
from .operators import spin_operators, boson_operators, su11_generators, su11_casimir, bargmann_index  # noqa
from .hamiltonian import build_hamiltonian, build_hamiltonian_reference, dump_coo, restrict  # noqa
from .solver import EDConfig, EDResult, solve_lowest, convergence_scan, observable_operators  # noqa
from .probes import (CollapseReport, collapse_probe, symmetry_broken_pair, crossover_estimate,  # noqa
                     sweep_observable, mean_spacing)
