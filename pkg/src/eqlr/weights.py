"""Weights of barred and hatted tableaux and the tableau rule for c_{lambda,mu}^nu.

A weight factor is a pair (e, f) standing for y_e - y_f (or Y_e - Y_f in
the equivariant flavor). Factor lists follow the reading order of the
barred entries.
"""

from __future__ import annotations

from typing import Sequence

from .core import DomainError, add, in_box, ones, rho
from .polyring import ONE, MPoly, binomial, poly_sum, product, specialize_y_to_Y
from .tableaux import (
    HAT_LEFT,
    HAT_RIGHT,
    BarredTableau,
    Cell,
    HattedTableau,
    SkewBarredTableau,
    candidate_nus,
    enumerate_lr_tableaux,
)

CRITERIA = ("C1", "C2", "C3", "C4", "C5", "Molev")

Factor = tuple[int, int]


def factors_poly(factors: Sequence[Factor], family: str = "y") -> MPoly:
    return product(binomial(e, f, family) for e, f in factors)


def f_index(cell: Cell, value: int, d: int) -> int:
    """|a|' + c(a) - r(a)."""
    r, c = cell
    return d + 1 - value + c - r


def c_L_factors(L: SkewBarredTableau) -> list[Factor]:
    d = L.d
    pc = L.prefix_contents
    return [(d + 1 - v + pc[cell][v - 1], f_index(cell, v, d)) for cell, v, b in L.B.entries if b]


def weight_c_L(L: SkewBarredTableau) -> tuple[list[Factor], MPoly]:
    fs = c_L_factors(L)
    return fs, factors_poly(fs)


def _check_box(L: SkewBarredTableau, n: int):
    d = L.d
    for name, p in (("lambda", L.lam), ("mu", L.mu), ("nu", L.unbarred_content())):
        if not in_box(p, d, n):
            raise DomainError(f"{name}={p} is not in P_{{{d},{n}}}")


def weight_C_L(L: SkewBarredTableau, n: int) -> tuple[list[Factor], MPoly]:
    """Factors (p, q) meaning Y_p - Y_q, p = (n-d)+|a|-(c-r), q = (n-d)+|a|-omega."""
    _check_box(L, n)
    d = L.d
    pc = L.prefix_contents
    fs = []
    for (r, c), v, b in L.B.entries:
        if b:
            fs.append((n - d + v - (c - r), n - d + v - pc[(r, c)][v - 1]))
    return fs, factors_poly(fs, "Y")


def delta(L: SkewBarredTableau, cell: Cell) -> int:
    """omega(L^u_{<=a})_{|a|} - c(a) + r(a)."""
    if cell not in L.B.cells:
        raise DomainError(f"cell {cell} is not a cell of B")
    v, b = L.B.cells[cell]
    w = L.prefix_contents[cell][v - 1] + (0 if b else 1)
    r, c = cell
    return w - c + r


def is_positive(L: SkewBarredTableau, criterion: str) -> bool:
    if not L.is_yamanouchi():
        raise DomainError("positivity criteria need a Yamanouchi tableau")
    pc = L.prefix_contents
    barred = [(cell, v) for cell, v, b in L.B.entries if b]
    if criterion == "C1":
        return all(e > f for e, f in c_L_factors(L))
    if criterion == "C2":
        return all(pc[(r, c)][v - 1] > c - r for (r, c), v in barred)
    if criterion == "C3":
        return all(pc[(r, c)][v - 1] > c - r for (r, c), v in barred if r == 1)
    if criterion == "C4":
        return all(pc[(r, c)][v - 1] >= c for (r, c), v in barred)
    if criterion == "C5":
        return all(pc[(r, c)][v - 1] >= c for (r, c), v in barred if r == 1)
    if criterion == "Molev":
        # omega(L^u)'_{c(a)} >= |a|  <=>  omega(L^u)_{|a|} >= c(a)
        nu = L.unbarred_content()
        return all(nu[v - 1] >= c for (r, c), v, _ in L.B.entries if r == 1)
    raise DomainError(f"unknown criterion {criterion!r}")


def e_xi(xi: Sequence[int], B, cell: Cell) -> int:
    """e_{xi,B}(a) = (xi + omega(B^u_{<a}))_{|a|}; B barred or hatted."""
    counts = list(xi)
    for c, v, m in B.entries:
        if c == cell:
            return counts[v - 1]
        if not m:
            counts[v - 1] += 1
    raise DomainError(f"cell {cell} not in tableau")


def c_xi_B_factors(xi: Sequence[int], B: BarredTableau) -> list[Factor]:
    if len(xi) != B.d:
        raise DomainError("xi must have length d")
    d = B.d
    counts = list(xi)
    fs = []
    for cell, v, b in B.entries:
        if b:
            fs.append((counts[v - 1], f_index(cell, v, d)))
        else:
            counts[v - 1] += 1
    return fs


def weight_c_xi_B(xi: Sequence[int], B: BarredTableau) -> MPoly:
    return factors_poly(c_xi_B_factors(xi, B))


def weight_d_xi_H(xi: Sequence[int], H: HattedTableau) -> MPoly:
    """prod over left hats of y_e times prod over right hats of (-y_f)."""
    if len(xi) != H.d:
        raise DomainError("xi must have length d")
    d = H.d
    counts = list(xi)
    sign = 1
    out = ONE
    for cell, v, h in H.entries:
        if h == HAT_LEFT:
            out = out * MPoly.var("y", counts[v - 1])
        elif h == HAT_RIGHT:
            out = out * MPoly.var("y", f_index(cell, v, d))
            sign = -sign
        else:
            counts[v - 1] += 1
    return out if sign > 0 else -out


def lam_rho_one(lam: Sequence[int]) -> tuple[int, ...]:
    d = len(lam)
    return add(add(lam, rho(d)), ones(d))


def coefficient_by_tableaux(lam, mu, nu, d, positive_only: bool = False, kappa=None) -> MPoly:
    Ls = enumerate_lr_tableaux(lam, mu, nu, d, kappa)
    terms = []
    for L in Ls:
        fs = c_L_factors(L)
        if positive_only and not all(e > f for e, f in fs):
            continue
        terms.append(factors_poly(fs))
    return poly_sum(terms)


def coefficient_by_tableaux_Y(lam, mu, nu, d, n, positive_only: bool = False) -> MPoly:
    for name, p in (("lambda", lam), ("mu", mu), ("nu", nu)):
        if not in_box(tuple(p), d, n):
            raise DomainError(f"{name}={tuple(p)} is not in P_{{{d},{n}}}")
    Ls = enumerate_lr_tableaux(lam, mu, nu, d)
    terms = []
    for L in Ls:
        if positive_only and not is_positive(L, "C1"):
            continue
        terms.append(weight_C_L(L, n)[1])
    return poly_sum(terms)


def coefficient_table_by_tableaux(lam, mu, d, kappa=None, positive_only: bool = False) -> dict[tuple[int, ...], MPoly]:
    out = {}
    for nu in candidate_nus(lam, mu, d, kappa):
        c = coefficient_by_tableaux(lam, mu, nu, d, positive_only, kappa)
        if c:
            out[nu] = c
    return out


def table_to_Y(table: dict, n: int) -> dict:
    out = {}
    for nu, c in table.items():
        s = specialize_y_to_Y(c, n)
        if s:
            out[nu] = s
    return out
