from .bogoliubov import (QuadraticBosonForm, BogoliubovResult, bogoliubov_diagonalize,  # noqa
                         FockGroundState, fock_ground_state)
from .phases import (FluctuationConfig, FluctuationSolution, Lambda2Coefficients, phase1_effective,  # noqa
                     phase2_coefficients, phase2_effective, solve_fluctuations, excitation_energy_normal,
                     excitation_energy_superradiant, squeezing_normal, squeezing_superradiant)
from .spin import SpinFluctuations, spin_fluctuations  # noqa
from .decoupling import DecouplingCheck, phase1_generator, check_phase1_decoupling  # noqa
