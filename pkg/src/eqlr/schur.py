"""Factorial Schur functions, alternants, the product-expansion oracle and
instance checks of the alternant identities used in the proof of the rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .core import DomainError, add, content, is_partition, ones, rho
from .polyring import ONE, ZERO, MPoly, determinant, join_x, poly_sum, split_x, x, x_order_key, y
from .tableaux import BarredTableau, enumerate_barred_tableaux, enumerate_reverse_tableaux
from .weights import c_xi_B_factors, f_index, factors_poly, lam_rho_one, weight_c_xi_B


@lru_cache(maxsize=None)
def falling_product(j: int, k: int) -> MPoly:
    """(x_j|y)^k = (x_j - y_1)...(x_j - y_k)."""
    if k < 0:
        raise DomainError("negative falling power")
    if k == 0:
        return ONE
    return falling_product(j, k - 1) * (x(j) - y(k))


def tableau_monomial(R: BarredTableau) -> MPoly:
    """(x|y)^R = prod over filled cells of (x_a - y_{a'+c-r}); bars ignored."""
    out = ONE
    for cell, v, _ in R.entries:
        out = out * (x(v) - y(f_index(cell, v, R.d)))
    return out


@dataclass(frozen=True)
class FactorialSchur:
    mu: tuple[int, ...]
    d: int
    poly: MPoly
    kappa: tuple[int, ...] = ()


@lru_cache(maxsize=None)
def _factorial_schur_poly(mu: tuple, d: int, kappa: tuple | None) -> MPoly:
    return poly_sum(tableau_monomial(R) for R in enumerate_reverse_tableaux(mu, d, kappa))


def factorial_schur(mu: Sequence[int], d: int, kappa=None) -> FactorialSchur:
    mu = tuple(mu)
    if len(mu) != d or not is_partition(mu):
        raise DomainError(f"{mu} is not a length-{d} partition")
    k = tuple(kappa) if kappa and any(kappa) else None
    return FactorialSchur(mu, d, _factorial_schur_poly(mu, d, k), k or (0,) * d)


@dataclass(frozen=True)
class Alternant:
    xi: tuple[int, ...]
    poly: MPoly


@lru_cache(maxsize=None)
def _alternant_poly(xi: tuple) -> MPoly:
    d = len(xi)
    return determinant([[falling_product(j, xi[i]) for j in range(1, d + 1)] for i in range(d)])


def alternant(xi: Sequence[int], d: int | None = None) -> Alternant:
    xi = tuple(xi)
    if d is not None and len(xi) != d:
        raise DomainError(f"composition {xi} does not have length {d}")
    if any(v < 0 for v in xi):
        raise DomainError("alternant exponents must be nonnegative")
    return Alternant(xi, _alternant_poly(xi))


def verify_bialternant(mu: Sequence[int], d: int) -> bool:
    """a_rho * s_mu == a_{mu+rho}."""
    mu = tuple(mu)
    lhs = alternant(rho(d)).poly * factorial_schur(mu, d).poly
    return lhs == alternant(add(mu, rho(d))).poly


# oracle -------------------------------------------------------------


def _is_dominant(alpha) -> bool:
    return all(alpha[k] >= alpha[k + 1] for k in range(len(alpha) - 1))


@lru_cache(maxsize=None)
def _dominant_part(mu: tuple, d: int) -> dict:
    groups = split_x(_factorial_schur_poly(mu, d, None), d)
    return {a: c for a, c in groups.items() if _is_dominant(a)}


def _eliminate(P: dict, d: int, check: bool) -> dict[tuple[int, ...], MPoly]:
    table: dict[tuple[int, ...], MPoly] = {}
    while P:
        alpha = max(P, key=x_order_key)
        if check and not _is_dominant(alpha):
            raise AssertionError(f"leading exponent {alpha} is not a partition: product is not symmetric")
        c = P[alpha]
        table[alpha] = c
        for beta, coeff in _dominant_part(alpha, d).items():
            v = P.get(beta, ZERO) - c * coeff
            if v:
                P[beta] = v
            else:
                P.pop(beta, None)
        if alpha in P:
            raise AssertionError(f"elimination did not clear the leading term {alpha}")
    return table


def expand_product_oracle(lam, mu, d, kappa=None, full: bool = False) -> dict[tuple[int, ...], MPoly]:
    """Expand s_lambda * s_mu (or s_lambda * s_{mu/kappa}) in the basis s_nu(x|y).

    Greedy elimination of the leading x-monomial (total degree, then lex
    with x_1 > x_2 > ...). Both factors are symmetric in x, so the work is
    done on the dominant exponents only; with full=True the complete
    product is reduced instead and every leading exponent is checked to be
    a partition.
    """
    lam, mu = tuple(lam), tuple(mu)
    s_lam = factorial_schur(lam, d).poly
    s_mu = factorial_schur(mu, d, kappa).poly
    if full:
        groups = split_x(s_lam * s_mu, d)
        P = dict(groups)
        table: dict[tuple[int, ...], MPoly] = {}
        while P:
            alpha = max(P, key=x_order_key)
            if not _is_dominant(alpha):
                raise AssertionError(f"leading exponent {alpha} is not a partition")
            c = P[alpha]
            table[alpha] = c
            for beta, coeff in split_x(factorial_schur(alpha, d).poly, d).items():
                v = P.get(beta, ZERO) - c * coeff
                if v:
                    P[beta] = v
                else:
                    P.pop(beta, None)
        return table
    A = split_x(s_lam, d)
    B = split_x(s_mu, d)
    P: dict = {}
    for beta, ca in A.items():
        for gamma, cb in B.items():
            alpha = tuple(p + q for p, q in zip(beta, gamma))
            if not _is_dominant(alpha):
                continue
            v = P.get(alpha, ZERO) + ca * cb
            if v:
                P[alpha] = v
            else:
                P.pop(alpha, None)
    return _eliminate(P, d, check=False)


def rebuild_product(table: dict, d: int) -> MPoly:
    """Sum of c_nu * s_nu(x|y) over a coefficient table."""
    return poly_sum(c * factorial_schur(nu, d).poly for nu, c in table.items())


# lemma identities ---------------------------------------------------


def verify_lemma_product_alternant(lam, mu, d) -> bool:
    """a_{lambda+rho} s_mu == sum over B in B(mu) of c_{lambda*B} a_{lambda+rho+omega(B^u)}."""
    lam, mu = tuple(lam), tuple(mu)
    lr = add(lam, rho(d))
    xi = lam_rho_one(lam)
    lhs = alternant(lr).poly * factorial_schur(mu, d).poly
    grouped: dict[tuple, list[MPoly]] = {}
    for B in enumerate_barred_tableaux(mu, d):
        w = B.unbarred_content()
        grouped.setdefault(w, []).append(factors_poly(c_xi_B_factors(xi, B)))
    rhs = poly_sum(poly_sum(cs) * alternant(add(lr, w)).poly for w, cs in grouped.items())
    return lhs == rhs


def xy_power(xi: Sequence[int]) -> MPoly:
    """(x|y)^xi = prod_j (x_j|y)^{xi_j}."""
    out = ONE
    for j, k in enumerate(xi, start=1):
        out = out * falling_product(j, k)
    return out


def verify_lemma_induction(R: BarredTableau, xi: Sequence[int]) -> bool:
    """(x|y)^xi (x|y)^R == sum over bar patterns B of R of c_{xi+1,B} (x|y)^{xi+omega(B^u)}."""
    xi = tuple(xi)
    d = R.d
    if len(xi) != d:
        raise DomainError("xi must have length d")
    lhs = xy_power(xi) * tableau_monomial(R)
    xi1 = add(xi, ones(d))
    m = len(R.entries)
    grouped: dict[tuple, list[MPoly]] = {}
    for pattern in range(1 << m):
        B = BarredTableau(
            R.mu, d, tuple((cell, v, bool(pattern >> k & 1)) for k, (cell, v, _) in enumerate(R.entries)), R.kappa, sub=True
        )
        w = content(B.unbarred_word(), d)
        grouped.setdefault(w, []).append(weight_c_xi_B(xi1, B))
    rhs = poly_sum(poly_sum(cs) * xy_power(add(xi, w)) for w, cs in grouped.items())
    return lhs == rhs


def verify_bad_guys_vanish(lam, mu, d, check_pairing: bool = True) -> bool:
    """Sum over Bad Guys H of d_{lambda+rho+1,H} a_{lambda+rho+omega(H^u)} is zero.

    With check_pairing the involution H -> H* is also checked on every Bad
    Guy: H* is a Bad Guy, H** = H, the d-weights agree and the alternant
    exponents differ by the transposition sigma_i.
    """
    from .involutions import bad_guy_data, bad_guy_star
    from .tableaux import enumerate_hatted
    from .weights import weight_d_xi_H

    lam, mu = tuple(lam), tuple(mu)
    lr = add(lam, rho(d))
    xi = lam_rho_one(lam)
    grouped: dict[tuple, list[MPoly]] = {}
    bad = []
    for H in enumerate_hatted(mu, d):
        if bad_guy_data(H, lam) is None:
            continue
        bad.append(H)
        w = content(H.unhatted_word(), d)
        grouped.setdefault(w, []).append(weight_d_xi_H(xi, H))
    total = poly_sum(poly_sum(ds) * alternant(add(lr, w)).poly for w, ds in grouped.items())
    if total:
        return False
    if not check_pairing:
        return True
    for H in bad:
        j, i = bad_guy_data(H, lam)
        Hs = bad_guy_star(H, lam)
        if Hs is None or bad_guy_data(Hs, lam) != (j, i):
            return False
        if bad_guy_star(Hs, lam) != H:
            return False
        if weight_d_xi_H(xi, H) != weight_d_xi_H(xi, Hs):
            return False
        e1 = add(lr, content(H.unhatted_word(), d))
        e2 = add(lr, content(Hs.unhatted_word(), d))
        sw = list(e1)
        sw[i - 1], sw[i] = sw[i], sw[i - 1]
        if tuple(sw) != e2:
            return False
    return True
