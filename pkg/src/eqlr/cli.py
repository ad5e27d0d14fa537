"""Command line: eqlr {coeff,enumerate,verify}.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
invariant breach (including disagreement between methods).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .core import DomainError, in_box, parse_parts, partition, partitions_in_box
from .polyring import MPoly, render, render_factors, render_paired, specialize_y_to_Y

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
METHODS = ("tableaux", "puzzles", "trapezoid", "oracle", "all")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Request:
    command: str
    d: int | None = None
    n: int | None = None
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    nu: tuple[int, ...] | None = None
    kappa: tuple[int, ...] | None = None
    method: str = "tableaux"
    flavor: str = "y"
    positive_only: bool = False
    fmt: str = "text"
    seed: int = 0
    threads: int = 1
    suite: str | None = None
    max_shape: tuple[int, ...] | None = None
    samples: int = 200
    extra: dict = field(default_factory=dict)


def _threads_default() -> int:
    raw = os.environ.get("EQLR_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-d", type=int, help="number of rows d")
    common.add_argument("-n", type=int, help="side n (shapes in P_{d,n})")
    common.add_argument("--format", dest="fmt", choices=("text", "json", "ascii"), default="text")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: $EQLR_THREADS or 1)")
    common.add_argument("--seed", type=int, default=0)

    shapes = argparse.ArgumentParser(add_help=False)
    shapes.add_argument("--lambda", dest="lam", help="parts of lambda, e.g. 3,2,1")
    shapes.add_argument("--mu", help="parts of mu")
    shapes.add_argument("--nu", help="parts of nu (omit for the whole table)")
    shapes.add_argument("--kappa", help="inner shape: use the skew shape mu/kappa")
    shapes.add_argument("--method", choices=METHODS, default="tableaux")
    shapes.add_argument("--flavor", choices=("y", "Y"), default="y")
    shapes.add_argument("--positive-only", action="store_true")

    p = argparse.ArgumentParser(prog="eqlr", description="Equivariant Littlewood-Richardson coefficients.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("coeff", parents=[common, shapes], help="compute c_{lambda,mu}^nu or the table over nu")
    sub.add_parser("enumerate", parents=[common, shapes], help="list tableaux or puzzles with their weights")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", help="bialternant, lra, induction, badguys, involutions, bijection, positivity, symmetry or all")
    v.add_argument("--max-shape", help="bound for the shapes of the sweep, e.g. 3,3,3")
    v.add_argument("--samples", type=int, default=200, help="randomized cases (induction suite)")
    return p


def _parse_shape(name: str, text: str | None, d: int | None) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        parts = parse_parts(text)
        return partition(parts, d if d is not None else len(parts))
    except DomainError as exc:
        raise UsageError(f"--{name}: {exc}") from None


def to_request(ns: argparse.Namespace) -> Request:
    threads = ns.threads if ns.threads is not None else _threads_default()
    if threads < 1:
        raise UsageError("--threads must be at least 1")
    if ns.command == "verify":
        d = ns.d if ns.d is not None else 3
        ms = _parse_shape("max-shape", ns.max_shape, None) if ns.max_shape else None
        return Request("verify", d=d, n=ns.n, fmt=ns.fmt, seed=ns.seed, threads=threads, suite=ns.suite, max_shape=ms, samples=ns.samples)
    texts = [t for t in (ns.lam, ns.mu, ns.nu) if t]
    d = ns.d
    if d is None:
        d = max([len(parse_parts(t)) for t in texts] + [0]) if texts else None
        if d is None:
            raise UsageError("-d is required")
    if d < 0:
        raise UsageError("-d must be nonnegative")
    lam = _parse_shape("lambda", ns.lam, d)
    mu = _parse_shape("mu", ns.mu, d)
    nu = _parse_shape("nu", ns.nu, d)
    kappa = _parse_shape("kappa", ns.kappa, d)
    if lam is None or mu is None:
        raise UsageError("--lambda and --mu are required")
    if ns.command == "enumerate" and nu is None:
        raise UsageError("enumerate needs --nu")
    if kappa is not None:
        if any(k > m for k, m in zip(kappa, mu)):
            raise UsageError(f"--kappa: {kappa} is not contained in mu={mu}")
        if ns.method not in ("tableaux", "oracle", "all"):
            raise UsageError("--kappa (skew shapes) is not available for puzzles")
    n = ns.n
    needs_n = ns.flavor == "Y" or ns.method in ("puzzles", "trapezoid")
    if n is None and needs_n:
        if ns.flavor == "Y":
            raise UsageError("--flavor Y needs -n")
        widest = max(lam[0] + mu[0] if d else 0, nu[0] if nu and d else 0)
        n = d + widest
    if n is not None:
        for name, p in (("lambda", lam), ("mu", mu), ("nu", nu)):
            if p is not None and not in_box(p, d, n):
                raise UsageError(f"--{name}: {p} is not in P_{{{d},{n}}} (largest part must be at most n-d={n - d})")
    return Request(
        ns.command, d=d, n=n, lam=lam, mu=mu, nu=nu, kappa=kappa, method=ns.method, flavor=ns.flavor,
        positive_only=ns.positive_only, fmt=ns.fmt, seed=ns.seed, threads=threads,
    )


# computing --------------------------------------------------------------


def _fmt(p) -> str:
    return "(" + ",".join(map(str, p)) + ")"


def _nus(req: Request) -> list[tuple[int, ...]]:
    from .tableaux import candidate_nus

    if req.nu is not None:
        return [req.nu]
    out = candidate_nus(req.lam, req.mu, req.d, req.kappa)
    if req.n is not None:
        out = [nu for nu in out if in_box(nu, req.d, req.n)]
    return out


def _by_method(method: str, req: Request, nu) -> tuple[MPoly, list | None]:
    """(coefficient, per-object factor lists or None) for one nu."""
    from .puzzles import enumerate_puzzles, enumerate_trapezoid_puzzles, puzzle_factors
    from .tableaux import enumerate_lr_tableaux
    from .weights import c_L_factors, factors_poly, weight_C_L

    lam, mu, d, n = req.lam, req.mu, req.d, req.n
    if method == "tableaux":
        lists = []
        for L in enumerate_lr_tableaux(lam, mu, nu, d, req.kappa):
            fs = c_L_factors(L)
            if req.positive_only and not all(e > f for e, f in fs):
                continue
            lists.append(weight_C_L(L, n)[0] if req.flavor == "Y" else fs)
    elif method in ("puzzles", "trapezoid"):
        enum = enumerate_trapezoid_puzzles if method == "trapezoid" else enumerate_puzzles
        lists = []
        for P in enum(lam, mu, nu, n, d):
            fs = puzzle_factors(P)
            if req.positive_only and not all(e > f for e, f in fs):
                continue
            lists.append(puzzle_factors(P, req.flavor))
    elif method == "oracle":
        c = _oracle_table(req).get(nu, MPoly())
        return (specialize_y_to_Y(c, n) if req.flavor == "Y" else c), None
    else:
        raise UsageError(f"unknown method {method!r}")
    total = MPoly()
    for fs in lists:
        total = total + factors_poly(fs, req.flavor)
    return total, lists


_ORACLE_CACHE: dict = {}


def _oracle_table(req: Request) -> dict:
    from .schur import expand_product_oracle

    key = (req.lam, req.mu, req.d, req.kappa)
    if key not in _ORACLE_CACHE:
        _ORACLE_CACHE[key] = expand_product_oracle(req.lam, req.mu, req.d, req.kappa)
    return _ORACLE_CACHE[key]


def _methods(req: Request) -> list[str]:
    if req.method != "all":
        return [req.method]
    out = ["tableaux", "oracle"]
    if req.n is not None and req.kappa is None:
        out += ["puzzles", "trapezoid"]
    return out


def render_coefficient(c: MPoly, lists: list | None, family: str) -> str:
    """Text form: a paired linear form when possible, else a sum of factored
    products when the weights are known, else the expanded polynomial."""
    if not c:
        return "0"
    if c.degree() == 0:
        return str(c.constant_term())
    paired = render_paired(c)
    if paired is not None:
        return paired
    if lists is not None:
        nonzero = [fs for fs in lists if all(e != f for e, f in fs)]
        if all(fs for fs in nonzero):
            return "+".join(render_factors(fs, family) for fs in nonzero)
    return render(c)


def _coeff_worker(args):
    method, req, nu = args
    c, lists = _by_method(method, req, nu)
    return method, nu, c, lists


def compute(req: Request) -> tuple[dict, dict]:
    """Coefficient table {nu: (poly, lists)} of the primary method and the
    per-method polynomials {method: {nu: poly}} used for cross-checking."""
    methods = _methods(req)
    jobs = [(m, req, nu) for m in methods for nu in _nus(req)]
    if req.threads > 1 and len(jobs) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=req.threads) as pool:
            results = list(pool.map(_coeff_worker, jobs))
    else:
        results = [_coeff_worker(j) for j in jobs]
    per: dict[str, dict] = {m: {} for m in methods}
    primary: dict = {}
    for m, nu, c, lists in results:
        per[m][nu] = c
        if m == methods[0]:
            primary[nu] = (c, lists)
    return primary, per


def cmd_coeff(req: Request, out) -> int:
    primary, per = compute(req)
    ref = per[_methods(req)[0]]
    for m, table in per.items():
        for nu in ref:
            if table[nu] != ref[nu]:
                print(f"internal error: methods disagree at nu={_fmt(nu)}: {_methods(req)[0]} gives {ref[nu]}, {m} gives {table[nu]}", file=sys.stderr)
                return EXIT_INTERNAL
    rows = [(nu, c, lists) for nu, (c, lists) in primary.items() if c or req.nu is not None]
    rows.sort(key=lambda r: (-sum(r[0]), tuple(-v for v in r[0])))
    if req.fmt == "json":
        doc = {
            "lambda": list(req.lam), "mu": list(req.mu), "d": req.d, "n": req.n,
            "kappa": list(req.kappa) if req.kappa else None, "flavor": req.flavor,
            "methods": _methods(req),
            "coefficients": [
                {
                    "nu": list(nu),
                    "poly": {
                        "expanded": render(c),
                        "terms": c.to_json(),
                        **({"factored": [[list(f) for f in fs] for fs in lists]} if lists is not None else {}),
                    },
                }
                for nu, c, lists in rows
            ],
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return EXIT_OK
    if req.nu is not None:
        (nu, c, lists), = rows
        out.write(render_coefficient(c, lists, req.flavor) + "\n")
        return EXIT_OK
    for nu, c, lists in rows:
        out.write(f"{_fmt(nu)}: {render_coefficient(c, lists, req.flavor)}\n")
    if not rows:
        out.write("(empty)\n")
    return EXIT_OK


def cmd_enumerate(req: Request, out) -> int:
    from .puzzles import enumerate_puzzles, enumerate_trapezoid_puzzles, puzzle_factors
    from .tableaux import enumerate_lr_tableaux
    from .weights import c_L_factors, weight_C_L

    method = "tableaux" if req.method in ("all", "oracle") else req.method
    if req.method == "oracle":
        raise UsageError("enumerate lists combinatorial objects; use --method tableaux, puzzles or trapezoid")
    items = []
    if method == "tableaux":
        for L in enumerate_lr_tableaux(req.lam, req.mu, req.nu, req.d, req.kappa):
            fs = c_L_factors(L)
            if req.positive_only and not all(e > f for e, f in fs):
                continue
            shown = weight_C_L(L, req.n)[0] if req.flavor == "Y" else fs
            items.append((L.to_json(), L.render(unicode=req.fmt == "text"), shown))
    else:
        enum = enumerate_trapezoid_puzzles if method == "trapezoid" else enumerate_puzzles
        for P in enum(req.lam, req.mu, req.nu, req.n, req.d):
            fs = puzzle_factors(P)
            if req.positive_only and not all(e > f for e, f in fs):
                continue
            items.append((P.to_json(), P.render(), puzzle_factors(P, req.flavor)))
    if req.fmt == "json":
        doc = {
            "method": method, "count": len(items), "flavor": req.flavor,
            "items": [{"object": obj, "factors": [list(f) for f in fs], "weight": render_factors(fs, req.flavor) if fs else "1"} for obj, _, fs in items],
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return EXIT_OK
    out.write(f"lambda={_fmt(req.lam)} mu={_fmt(req.mu)} nu={_fmt(req.nu)} d={req.d} n={req.n} method={method}\n\n")
    for k, (_, pic, fs) in enumerate(items, start=1):
        weight = render_factors(fs, req.flavor) if fs else "1"
        out.write(f"#{k}  weight {weight}\n")
        out.write(pic + "\n\n")
    out.write(f"count: {len(items)}\n")
    return EXIT_OK


def cmd_verify(req: Request, out) -> int:
    from .suites import SUITES, SuiteConfig, run_suite

    names = list(SUITES) if req.suite == "all" else [req.suite]
    for name in names:
        if name not in SUITES:
            raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    n = req.n
    if n is None and "bijection" in names:
        n = req.d + 3
    cfg = SuiteConfig(d=req.d, n=n, max_shape=req.max_shape, seed=req.seed, samples=req.samples, threads=req.threads)
    results = []
    for name in names:
        results.extend(run_suite(name, cfg))
    failed = [r for r in results if not r.ok]
    if req.fmt == "json":
        doc = {
            "suites": names, "d": req.d, "n": n, "seed": req.seed,
            "passed": len(results) - len(failed), "failed": len(failed),
            "cases": [r.to_json() for r in results],
        }
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for name in names:
            mine = [r for r in results if r.suite == name]
            bad = [r for r in mine if not r.ok]
            out.write(f"{name}: {'pass' if not bad else 'FAIL'} ({len(mine) - len(bad)}/{len(mine)} cases)\n")
            if name == "bijection":
                for r in mine:
                    c = r.data
                    out.write(f"  {r.case}: |LP+|={c['LP+']} |LR+|={c['LR+']} |LP|={c['LP']} |LR|={c['LR']}\n")
            for r in bad:
                out.write(f"  failed {r.case}: {r.detail}\n")
    return EXIT_FAIL if failed else EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        req = to_request(ns)
        handler = {"coeff": cmd_coeff, "enumerate": cmd_enumerate, "verify": cmd_verify}[req.command]
        return handler(req, sys.stdout)
    except (UsageError, DomainError) as exc:
        print(f"eqlr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"eqlr: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
