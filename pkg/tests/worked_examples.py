"""Worked instances shared by several test modules.

Tableau rows are written left to right, bottom row first; '~' marks a bar.
"""

from eqlr.puzzles import Puzzle
from eqlr.tableaux import BarredTableau, SkewBarredTableau

# c_{(1,1),(3,2)}^{(3,2,1)}, d=3: the four elements of LR+ and their weights
EX_LAM, EX_MU, EX_NU = (1, 1, 0), (3, 2, 0), (3, 2, 1)
EX_WEIGHTS = [[(6, 5)], [(5, 3)], [(4, 2)], [(3, 1)]]

# lambda=(2,1), mu=nu=(3,3,1): the 8-term sum from the tableau rule and the
# 6-term sum for the swapped product, each term a list of (e, f) = y_e - y_f
EIGHT_TERMS = [
    [(5, 3), (5, 1), (3, 1)], [(6, 4), (5, 1), (3, 1)],
    [(6, 4), (6, 3), (3, 1)], [(5, 3), (4, 3), (5, 1)],
    [(6, 4), (4, 3), (5, 1)], [(6, 4), (6, 3), (4, 3)],
    [(6, 4), (5, 4), (5, 1)], [(6, 4), (5, 4), (6, 3)],
]
SIX_TERMS = [
    [(6, 4), (6, 2), (5, 2)], [(5, 3), (6, 2), (5, 2)],
    [(6, 4), (6, 2), (2, 1)], [(5, 3), (6, 2), (2, 1)],
    [(6, 4), (5, 1), (2, 1)], [(5, 3), (5, 1), (2, 1)],
]
# the same coefficient by a different positive formula (mu = nu case)
TWO_TERMS = [[(6, 1), (6, 3), (5, 1)], [(6, 1), (5, 4), (5, 1)]]


def figure_L() -> SkewBarredTableau:
    """Shape (2,1,1)*(4,3,1), d=4, unbarred content (3,3,2,1)."""
    B = BarredTableau.from_rows(["2 2~ 3 4", "1 1~ 3~", "2"], 4)
    return SkewBarredTableau((2, 1, 1, 0), B)


# the n=9 puzzle: NE, NW, S words 001001100, 001010010, 101000100
N9_PIECES = (
    ("0down", 0, 5), ("0down", 0, 7), ("0down", 1, 0), ("0down", 1, 2), ("0down", 1, 3), ("0down", 2, 2),
    ("0down", 2, 3), ("0down", 2, 5), ("0down", 3, 0), ("0down", 3, 2), ("0down", 3, 4), ("0down", 4, 0),
    ("0down", 5, 1), ("0down", 5, 2), ("0down", 7, 0), ("0up", 0, 5), ("0up", 0, 6), ("0up", 0, 8),
    ("0up", 1, 0), ("0up", 1, 1), ("0up", 1, 3), ("0up", 1, 7), ("0up", 2, 2), ("0up", 2, 3),
    ("0up", 2, 4), ("0up", 3, 0), ("0up", 3, 2), ("0up", 3, 3), ("0up", 3, 5), ("0up", 4, 0),
    ("0up", 4, 4), ("0up", 5, 0), ("0up", 5, 2), ("0up", 7, 0), ("0up", 7, 1), ("0up", 8, 0),
    ("1down", 0, 2), ("1down", 1, 5), ("1down", 4, 1), ("1up", 0, 2), ("1up", 0, 4), ("1up", 1, 6),
    ("1up", 2, 1), ("1up", 4, 3), ("1up", 6, 0), ("DU", 1, 4), ("DU", 2, 6), ("DU", 3, 1),
    ("DU", 4, 1), ("DU", 5, 3), ("EQ", 1, 5), ("EQ", 6, 1), ("EQ", 6, 2), ("UD", 0, 0),
    ("UD", 0, 1), ("UD", 0, 3), ("UD", 2, 0), ("UD", 4, 2), ("V", 0, 7), ("V", 1, 2),
    ("V", 2, 5), ("V", 3, 4), ("V", 5, 1),
)


def n9_puzzle() -> Puzzle:
    return Puzzle(9, 3, "001001100", "001010010", "101000100", N9_PIECES)


N9_TABLEAU_ROWS = ["2 2 3~ 3~", "1 1~ 2", "1"]

# the n=13 trapezoid instance and its zero-weight tableau
N13 = dict(lam=(5, 2, 1), mu=(8, 5, 1), nu=(9, 4, 2), n=13, d=3)
N13_TABLEAU_ROWS = ["1 2~ 2 3~ 3 3~ 3~ 3~", "1 1 1~ 2~ 2", "1"]
