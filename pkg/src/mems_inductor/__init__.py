"""Design and simulation of digitally switched MEMS micro-coil inductors."""

from .cantilever import (CantileverBeam, DeflectionResult, FrequencyResponse, Mode, ModeResult,
                         Plane, Side, actuation_symmetry_check, bending_stiffness,
                         calibrate_from_fundamental, clamped_free_eigenvalue, effective_mass,
                         frequency_response, modal_frequencies, pull_in_voltage,
                         static_deflection)
from .coil import (CoilGeometry, CoreMaterial, MaterialCatalog, inductance_from_energy,
                   lookup_material, magnetic_energy, quality_factor, solenoid_inductance,
                   wire_resistance)
from .constants import EPSILON_0, MU_0
from .errors import (BiasUnstableError, CalibrationError, MaterialNotFoundError, NoPathError,
                     SingularNetworkError, SwitchConflictError, ValidationError)
from .output import emit
from .reports import (ComparisonReport, ComparisonRow, check_energy_consistency,
                      reproduce_coil_table, reproduce_step_table)
from .sweep import SweepSpec, run_sweep
from .switching import (InductorNetwork, StepTable, SwitchConfiguration, SwitchWord,
                        build_network, effective_inductance, enumerate_steps,
                        parse_switch_word, step_count, total_inductance, word_for_config)

__version__ = "0.1.0"
