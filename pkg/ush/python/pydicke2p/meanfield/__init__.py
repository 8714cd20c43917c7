from .solver import (MeanFieldConfig, MeanFieldSolution, coupling_of_beta, energy_of_beta,  # noqa
                     energy_landscape, grid_minimize, complex_phase_scan, analytic_beta0, minimize)
from .extension import (LinearExtensionSolution, solve_linear_extension, extension_at,  # noqa
                        extended_energy, linear_coupling_of_beta)
