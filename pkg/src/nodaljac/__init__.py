"""Fast group arithmetic on generalized Jacobians of nodal curves y^2 = x f(x)^2."""

from . import _backend
from .cantor import (
    HyperCurve,
    MumfordDivisor,
    cantor_add,
    cantor_compose,
    cantor_reduce,
    cantor_scalar_mul,
    divisor_validate,
)
from .field import FieldElement, PrimeModulus
from .nodal import IDENTITY, InvalidCurve, InvalidElement, JacElement, NodalCurve
from .poly import Poly

__version__ = "0.1.0"


def kernel_backend() -> str:
    """Name of the active polynomial kernel backend ("compiled" or "pure")."""
    return _backend.name


__all__ = [
    "FieldElement",
    "PrimeModulus",
    "Poly",
    "NodalCurve",
    "JacElement",
    "IDENTITY",
    "InvalidCurve",
    "InvalidElement",
    "HyperCurve",
    "MumfordDivisor",
    "divisor_validate",
    "cantor_compose",
    "cantor_reduce",
    "cantor_add",
    "cantor_scalar_mul",
    "kernel_backend",
]
