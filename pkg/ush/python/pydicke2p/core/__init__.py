from .exceptions import (Dicke2pError, DomainError, CollapseError, PhaseError, InstabilityError,  # noqa
                         DimensionError, ConvergenceError, InsufficientDataError, UsageError)
from .params import (ModelParams, CouplingOrder, DerivedParams, RegimeLabel, ValidationReport,  # noqa
                     validate, derive, regime_classify, params_for_lambda)
