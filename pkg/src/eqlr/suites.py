"""Verification suites shared by the command line and the test-suite.

A suite expands a SuiteConfig into a list of cases; every case is checked
independently (optionally in worker processes) and reported in the order
the cases were generated.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product as iproduct
from typing import Callable

from .core import DomainError, partition, partitions_in_box, partitions_inside, size
from .polyring import ONE, MPoly, permute_x, set_family_zero, x

SUITES = ("bialternant", "lra", "induction", "badguys", "involutions", "bijection", "positivity", "symmetry")


@dataclass(frozen=True)
class SuiteConfig:
    d: int = 3
    n: int | None = None
    max_shape: tuple[int, ...] | None = None
    seed: int = 0
    samples: int = 200
    threads: int = 1
    # the product-alternant identity expands full x-polynomials, so it is
    # only checked when |lambda| + |mu| is at most this
    lemma_size: int = 8

    def box(self) -> tuple[int, ...]:
        if self.max_shape is not None:
            # shapes have at most d rows, so extra rows of the bound are dropped
            return partition(self.max_shape[: self.d], self.d)
        return (2,) * self.d

    def side(self) -> int:
        return self.n if self.n is not None else self.d + 3


@dataclass
class CaseResult:
    suite: str
    case: str
    ok: bool
    detail: str = ""
    data: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "case": self.case, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        if self.data:
            out["data"] = self.data
        return out


def _fmt(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _shapes(cfg: SuiteConfig) -> list[tuple[int, ...]]:
    return [partition(m, cfg.d) for m in partitions_inside(cfg.box())]


# case generators -------------------------------------------------------


def _cases_bialternant(cfg):
    return [("bialternant", (mu, cfg.d)) for mu in _shapes(cfg)]


def _cases_lra(cfg):
    shapes = _shapes(cfg)
    return [("lra", (lam, mu, cfg.d, size(lam) + size(mu) <= cfg.lemma_size)) for lam in shapes for mu in shapes]


def _cases_induction(cfg):
    """Exhaustive sub-tableaux of small shapes with a fixed xi, plus random (R, xi)."""
    from .tableaux import BarredTableau, enumerate_reverse_tableaux

    d = cfg.d
    cases = []
    small = [partition(m, d) for m in partitions_inside(partition((2, 1), d) if d > 1 else (2,))]
    for mu in small:
        for R in enumerate_reverse_tableaux(mu, d):
            m = len(R.entries)
            for mask in range(1 << m):
                entries = tuple(e for k, e in enumerate(R.entries) if mask >> k & 1)
                S = BarredTableau(mu, d, entries, R.kappa, sub=True)
                cases.append(("induction", (S, tuple(range(d, 0, -1)))))
    rng = random.Random(cfg.seed)
    shapes = _shapes(cfg)
    for _ in range(cfg.samples):
        mu = rng.choice(shapes)
        Rs = enumerate_reverse_tableaux(mu, d)
        R = rng.choice(Rs)
        entries = tuple(e for e in R.entries if rng.random() < 0.75)
        S = BarredTableau(mu, d, entries, R.kappa, sub=True)
        xi = tuple(rng.randint(0, 4) for _ in range(d))
        cases.append(("induction", (S, xi)))
    return cases


def _cases_badguys(cfg):
    d = cfg.d
    lams = [partition(m, d) for m in partitions_in_box(d, 2)]
    return [("badguys", (lam, mu, d)) for lam in lams for mu in _shapes(cfg)]


def _cases_involutions(cfg):
    return [("involutions", (mu, cfg.d)) for mu in _shapes(cfg)]


def _cases_bijection(cfg):
    n, d = cfg.side(), cfg.d
    box = list(partitions_in_box(d, n - d))
    return [("bijection", (lam, mu, nu, n, d)) for lam in box for mu in box for nu in box]


def _cases_positivity(cfg):
    shapes = _shapes(cfg)
    return [("positivity", (lam, mu, cfg.d)) for lam in shapes for mu in shapes]


def _cases_symmetry(cfg):
    shapes = _shapes(cfg)
    cases = [("schur-symmetry", (mu, cfg.d)) for mu in shapes]
    cases += [("lr-symmetry", (lam, mu, cfg.d)) for k, lam in enumerate(shapes) for mu in shapes[k + 1 :]]
    return cases


GENERATORS: dict[str, Callable] = {
    "bialternant": _cases_bialternant,
    "lra": _cases_lra,
    "induction": _cases_induction,
    "badguys": _cases_badguys,
    "involutions": _cases_involutions,
    "bijection": _cases_bijection,
    "positivity": _cases_positivity,
    "symmetry": _cases_symmetry,
}


# checkers --------------------------------------------------------------


def _check_bialternant(mu, d):
    from .schur import verify_bialternant

    return CaseResult("bialternant", f"mu={_fmt(mu)}", verify_bialternant(mu, d))


def _check_lra(lam, mu, d, lemma=True):
    from .schur import expand_product_oracle, verify_lemma_product_alternant
    from .weights import coefficient_table_by_tableaux

    case = f"lambda={_fmt(lam)} mu={_fmt(mu)}"
    if lemma and not verify_lemma_product_alternant(lam, mu, d):
        return CaseResult("lra", case, False, "product-alternant identity fails")
    oracle = expand_product_oracle(lam, mu, d)
    table = coefficient_table_by_tableaux(lam, mu, d)
    if oracle != table:
        diff = sorted(set(oracle) ^ set(table) | {nu for nu in oracle if table.get(nu) != oracle[nu]})
        return CaseResult("lra", case, False, f"tableau rule differs from the oracle at nu={_fmt(diff[0])}")
    return CaseResult("lra", case, True, data={"terms": len(table), "lemma": lemma})


def _check_induction(S, xi):
    from .schur import verify_lemma_induction

    cells = ",".join(f"{r}{c}:{v}" for (r, c), v, _ in S.entries)
    return CaseResult("induction", f"mu={_fmt(S.mu)} R=[{cells}] xi={_fmt(xi)}", verify_lemma_induction(S, xi))


def _check_badguys(lam, mu, d):
    from .schur import verify_bad_guys_vanish

    return CaseResult("badguys", f"lambda={_fmt(lam)} mu={_fmt(mu)}", verify_bad_guys_vanish(lam, mu, d))


def _reduced_words(d: int) -> dict[tuple, list[tuple[int, ...]]]:
    """Words of length <= 3 over 1..d-1, grouped by the permutation they spell."""
    groups: dict[tuple, list] = {}
    for length in range(4):
        for w in iproduct(range(1, d), repeat=length):
            perm = list(range(d))
            for i in reversed(w):
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
            groups.setdefault(tuple(perm), []).append(w)
    return groups


def _check_involutions(mu, d):
    from .involutions import apply_s_i, bender_knuth, check_s_i_properties, check_sigma_words
    from .tableaux import HAT_NONE, enumerate_hatted

    case = f"mu={_fmt(mu)}"
    xis = [tuple(range(d + 2, 2, -1)), tuple((3 * k + 1) % 5 for k in range(d))]
    words = _reduced_words(d) if d > 1 else {}
    count = 0
    for H in enumerate_hatted(mu, d):
        for i in range(1, d):
            count += 1
            for xi in xis:
                bad = check_s_i_properties(H, i, xi)
                if bad:
                    return CaseResult("involutions", case, False, f"{','.join(bad)} fails on s_{i} at {H.key()}")
            if all(h == HAT_NONE for _, _, h in H.entries):
                if apply_s_i(H, i)[0] != bender_knuth(H, i):
                    return CaseResult("involutions", case, False, f"Bender-Knuth disagrees at {H.key()}")
        for ws in words.values():
            if not check_sigma_words(H, ws, xis[0]):
                return CaseResult("involutions", case, False, f"sigma action depends on the word at {H.key()}")
    return CaseResult("involutions", case, True, data={"pairs": count})


def _check_bijection(lam, mu, nu, n, d):
    from .puzzles import check_bijection

    r = check_bijection(lam, mu, nu, n, d)
    fails = r.pop("failures")
    case = f"n={n} lambda={_fmt(lam)} mu={_fmt(mu)} nu={_fmt(nu)}"
    return CaseResult("bijection", case, not fails, "; ".join(sorted(set(fails))), r)


def _check_positivity(lam, mu, d):
    from .tableaux import candidate_nus, enumerate_lr_tableaux
    from .weights import CRITERIA, c_L_factors, coefficient_by_tableaux, is_positive

    case = f"lambda={_fmt(lam)} mu={_fmt(mu)}"
    count = 0
    for nu in candidate_nus(lam, mu, d):
        for L in enumerate_lr_tableaux(lam, mu, nu, d):
            count += 1
            verdict = {c: is_positive(L, c) for c in CRITERIA}
            if len(set(verdict.values())) != 1:
                return CaseResult("positivity", case, False, f"criteria disagree at nu={_fmt(nu)}: {verdict}")
            fs = c_L_factors(L)
            if not (all(e > f for e, f in fs) or any(e == f for e, f in fs)):
                return CaseResult("positivity", case, False, f"c_L has a negative factor at nu={_fmt(nu)}")
            if len(fs) != size(lam) + size(mu) - size(nu):
                return CaseResult("positivity", case, False, f"bar count differs from the degree at nu={_fmt(nu)}")
        c = coefficient_by_tableaux(lam, mu, nu, d)
        if c != coefficient_by_tableaux(lam, mu, nu, d, positive_only=True):
            return CaseResult("positivity", case, False, f"LR+ sum differs from the LR sum at nu={_fmt(nu)}")
        if c and (not c.is_homogeneous() or c.degree() != size(lam) + size(mu) - size(nu)):
            return CaseResult("positivity", case, False, f"degree law fails at nu={_fmt(nu)}")
    return CaseResult("positivity", case, True, data={"tableaux": count})


def _check_schur_symmetry(mu, d):
    from .schur import factorial_schur
    from .tableaux import enumerate_reverse_tableaux

    s = factorial_schur(mu, d).poly
    case = f"s_{_fmt(mu)}"
    for perm in permutations(range(1, d + 1)):
        if permute_x(s, dict(zip(range(1, d + 1), perm))) != s:
            return CaseResult("symmetry", case, False, "not symmetric in x")
    if s and (not s.is_homogeneous() or s.degree() != size(mu)):
        return CaseResult("symmetry", case, False, "not homogeneous of degree |mu|")
    # y = 0 gives the Schur polynomial: sum of x^content over reverse tableaux
    plain = MPoly()
    for R in enumerate_reverse_tableaux(mu, d):
        term = ONE
        for _, v, _ in R.entries:
            term = term * x(v)
        plain = plain + term
    if set_family_zero(s, "y") != plain:
        return CaseResult("symmetry", case, False, "y=0 is not the Schur polynomial")
    return CaseResult("symmetry", case, True)


def _check_lr_symmetry(lam, mu, d):
    from .weights import coefficient_table_by_tableaux

    ok = coefficient_table_by_tableaux(lam, mu, d) == coefficient_table_by_tableaux(mu, lam, d)
    return CaseResult("symmetry", f"lambda={_fmt(lam)} mu={_fmt(mu)}", ok, "" if ok else "c_{lambda,mu} != c_{mu,lambda}")


CHECKERS: dict[str, Callable] = {
    "bialternant": _check_bialternant,
    "lra": _check_lra,
    "induction": _check_induction,
    "badguys": _check_badguys,
    "involutions": _check_involutions,
    "bijection": _check_bijection,
    "positivity": _check_positivity,
    "schur-symmetry": _check_schur_symmetry,
    "lr-symmetry": _check_lr_symmetry,
}


def run_case(case) -> CaseResult:
    kind, args = case
    return CHECKERS[kind](*args)


def cases(suite: str, cfg: SuiteConfig) -> list:
    if suite not in GENERATORS:
        raise DomainError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    return GENERATORS[suite](cfg)


def run_suite(suite: str, cfg: SuiteConfig) -> list[CaseResult]:
    todo = cases(suite, cfg)
    if cfg.threads > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            return list(pool.map(run_case, todo, chunksize=max(1, len(todo) // (4 * cfg.threads))))
    return [run_case(c) for c in todo]
