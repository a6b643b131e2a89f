"""Hall polynomials, inverse Kostka polynomials and Littlewood-Richardson
coefficients, each computed by several independent routes."""

from .constants import Kind, Route, cross_validate, hall, inv_kostka, lr
from .partitions import Partition
from .polyalg import MultiPoly, UniPoly

__all__ = ["Kind", "MultiPoly", "Partition", "Route", "UniPoly", "cross_validate", "hall",
           "inv_kostka", "lr"]
__version__ = "0.1.0"
