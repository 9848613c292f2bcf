"""Exact PT-symmetric Hulthen potential obtained from a shifted Poschl-Teller model.

The construction maps the Poschl-Teller problem on the line ``r = x - i*eps``
onto a generalized Hulthen problem posed on a down-bent arch in the complex
plane, via the change of variables ``sinh r = -i exp(i xi)``.
"""

__version__ = "0.1.0"

from .core_math import jacobi_eval, jacobi_deriv, complex_second_derivative
from .poschl_teller import PTModel, QuantumNumbers, SpectrumEntry
from .contour import ContourPoint, arch_map, sample_arch, xi_of_x
from .liouville import CoordinateMap, PhaseTracker
from .hulthen import HulthenModel

__all__ = [
    "jacobi_eval", "jacobi_deriv", "complex_second_derivative",
    "PTModel", "QuantumNumbers", "SpectrumEntry",
    "ContourPoint", "arch_map", "sample_arch", "xi_of_x",
    "CoordinateMap", "PhaseTracker", "HulthenModel",
]
