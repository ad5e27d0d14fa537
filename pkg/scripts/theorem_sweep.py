"""Compare the barred-tableau rule with the factorial Schur oracle on every
pair of shapes inside a box, and report timings and coefficient statistics.

    python scripts/theorem_sweep.py --d 3 --box 3,3,3
"""

import argparse
import json
import time
from dataclasses import asdict, dataclass

from eqlr.core import parse_parts, partition, partitions_inside
from eqlr.schur import expand_product_oracle
from eqlr.weights import coefficient_table_by_tableaux


@dataclass(frozen=True)
class SweepConfig:
    d: int = 3
    box: tuple[int, ...] = (3, 3, 3)
    out: str | None = None


def sweep(cfg: SweepConfig) -> dict:
    shapes = [partition(p, cfg.d) for p in partitions_inside(cfg.box[: cfg.d])]
    pairs = mismatches = nonzero = 0
    max_terms = 0
    t_rule = t_oracle = 0.0
    for lam in shapes:
        for mu in shapes:
            t0 = time.perf_counter()
            rule = coefficient_table_by_tableaux(lam, mu, cfg.d)
            t1 = time.perf_counter()
            oracle = expand_product_oracle(lam, mu, cfg.d)
            t2 = time.perf_counter()
            t_rule += t1 - t0
            t_oracle += t2 - t1
            pairs += 1
            if rule != oracle:
                mismatches += 1
                print(f"MISMATCH lam={lam} mu={mu}")
            nonzero += sum(1 for c in rule.values() if c)
            max_terms = max([max_terms] + [len(c.terms()) for c in rule.values()])
    return dict(
        config=asdict(cfg),
        pairs=pairs,
        mismatches=mismatches,
        nonzero_coefficients=nonzero,
        max_terms=max_terms,
        seconds_rule=round(t_rule, 2),
        seconds_oracle=round(t_oracle, 2),
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--box", type=parse_parts, default=(3, 3, 3))
    ap.add_argument("--out", help="write the summary as JSON here")
    a = ap.parse_args(argv)
    cfg = SweepConfig(a.d, a.box, a.out)
    summary = sweep(cfg)
    print(json.dumps(summary, indent=2))
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(summary, fh, indent=2)
    return 1 if summary["mismatches"] else 0


if __name__ == "__main__":
    raise SystemExit(main())
