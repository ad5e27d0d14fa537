"""Tabulate |LP+|, |LR+|, |LP| and |LR| for every triple in a (d, n-d) box,
checking the bijection Phi on each one.

    python scripts/bijection_counts.py --n 5 --d 2
"""

import argparse
import csv
import sys
from dataclasses import dataclass

from eqlr.core import partitions_in_box
from eqlr.puzzles import check_bijection


@dataclass(frozen=True)
class CountConfig:
    n: int = 5
    d: int = 2
    nonzero_only: bool = True


def rows(cfg: CountConfig):
    box = list(partitions_in_box(cfg.d, cfg.n - cfg.d))
    for lam in box:
        for mu in box:
            for nu in box:
                r = check_bijection(lam, mu, nu, cfg.n, cfg.d)
                if cfg.nonzero_only and not r["LR"]:
                    continue
                yield lam, mu, nu, r


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=5)
    ap.add_argument("--d", type=int, default=2)
    ap.add_argument("--all", action="store_true", help="include triples with no tableaux")
    a = ap.parse_args(argv)
    cfg = CountConfig(a.n, a.d, not a.all)
    w = csv.writer(sys.stdout)
    w.writerow(["lambda", "mu", "nu", "LP+", "LR+", "LP", "LR", "failures"])
    bad = 0
    for lam, mu, nu, r in rows(cfg):
        bad += bool(r["failures"])
        fmt = lambda p: ",".join(map(str, p))  # noqa: E731
        w.writerow([fmt(lam), fmt(mu), fmt(nu), r["LP+"], r["LR+"], r["LP"], r["LR"], "; ".join(r["failures"])])
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
