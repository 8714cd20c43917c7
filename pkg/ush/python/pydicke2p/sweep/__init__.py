from .sweep import (SweepResult, sweep_g, evaluate_point, g_grid_linear, TRACKS, CSV_COLUMNS, ED_COLUMNS,  # noqa
                    SCHEMA, SCHEMA_VERSION)
from .exponents import (Observable, Side, FitConfig, ExponentFit, Table1Report, critical_grid, fit_exponent,  # noqa
                        compare_table1, run_exponent_pipeline, one_photon_crossover,
                        REFERENCE_TWO_PHOTON, REFERENCE_ONE_PHOTON)
