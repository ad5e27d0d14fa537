"""Run every verification suite for d = 1..3 and print a pass/fail summary
with timings. A quicker, report-style companion to the acceptance tests.

    python scripts/criteria_sweep.py --threads 2
"""

import argparse
import time
from dataclasses import dataclass

from eqlr.suites import SUITES, SuiteConfig, run_suite

# (suite, max_shape, n) per run; n only matters for the bijection suite
PLAN = {
    "bialternant": ((3, 3, 3), None),
    "lra": ((3, 3, 3), None),
    "induction": ((3, 2), None),
    "badguys": ((2, 2), None),
    "involutions": ((3, 2), None),
    "positivity": ((3, 3, 3), None),
    "symmetry": ((3, 2), None),
    "bijection": (None, 5),
}


@dataclass(frozen=True)
class RunConfig:
    dims: tuple[int, ...] = (1, 2, 3)
    threads: int = 1
    seed: int = 0


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", default="1,2,3")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--only", nargs="*", choices=SUITES)
    a = ap.parse_args(argv)
    cfg = RunConfig(tuple(int(t) for t in a.dims.split(",")), a.threads, a.seed)
    failed = 0
    for suite in a.only or PLAN:
        shape, n = PLAN.get(suite, (None, None))
        for d in cfg.dims:
            if suite == "bijection" and d > 2:
                continue
            sc = SuiteConfig(d=d, n=n, max_shape=shape, seed=cfg.seed, threads=cfg.threads)
            t0 = time.perf_counter()
            res = run_suite(suite, sc)
            bad = [r for r in res if not r.ok]
            failed += len(bad)
            status = "pass" if not bad else "FAIL"
            print(f"{suite:12s} d={d}  {status}  {len(res) - len(bad)}/{len(res)}  {time.perf_counter() - t0:6.1f}s")
            for r in bad[:5]:
                print(f"    {r.case}: {r.detail}")
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
