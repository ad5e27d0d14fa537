"""Exact equivariant Littlewood-Richardson coefficients.

Three independent routes to c_{lambda,mu}^nu(y): barred skew tableaux,
Knutson-Tao puzzles (and trapezoid puzzles), and expansion of a product of
factorial Schur functions.
"""

from .core import DomainError, partition, partitions_in_box
from .polyring import MPoly, Y, render, render_paired, specialize_y_to_Y, x, y
from .puzzles import (
    Puzzle,
    TrapezoidPuzzle,
    coefficient_by_puzzles,
    enumerate_puzzles,
    enumerate_trapezoid_puzzles,
    phi,
    phi_inverse,
    puzzle_weight,
)
from .schur import expand_product_oracle, factorial_schur
from .tableaux import BarredTableau, HattedTableau, SkewBarredTableau, enumerate_lr_tableaux
from .weights import coefficient_by_tableaux, coefficient_by_tableaux_Y, coefficient_table_by_tableaux, weight_c_L, weight_C_L

__version__ = "0.1.0"

__all__ = [
    "DomainError", "partition", "partitions_in_box",
    "MPoly", "x", "y", "Y", "render", "render_paired", "specialize_y_to_Y",
    "Puzzle", "TrapezoidPuzzle", "enumerate_puzzles", "enumerate_trapezoid_puzzles",
    "coefficient_by_puzzles", "puzzle_weight", "phi", "phi_inverse",
    "factorial_schur", "expand_product_oracle",
    "BarredTableau", "HattedTableau", "SkewBarredTableau", "enumerate_lr_tableaux",
    "coefficient_by_tableaux", "coefficient_by_tableaux_Y", "coefficient_table_by_tableaux",
    "weight_c_L", "weight_C_L",
]
