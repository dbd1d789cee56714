"""Exact Clifford-algebra toolkit for massless bispinors, two-qubit entangling
gates and four-mode Majorana braiding.

Canonical-frame quantities are computed exactly over Q(exp(i pi/4)); general
momentum directions use numpy complex128.
"""

from .matrix import BackendMismatchError, Mat, identity, kron, to_numpy
from .report import Check, Report
from .scalar import ExactScalar, PiFraction

__all__ = [
    "BackendMismatchError",
    "Check",
    "ExactScalar",
    "Mat",
    "PiFraction",
    "Report",
    "identity",
    "kron",
    "to_numpy",
]

__version__ = "0.1.0"
