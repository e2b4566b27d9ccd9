"""Rebuild the short-spine census and compare it with the embedded reference tables.

    python3 scripts/reproduce_tables.py --m-max 12 --out results/census
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from tree_einstein.census import DEFAULT_GUARD, diff_against_golden, run_census, write_census, zero_candidates


@dataclass
class Config:
    m_min: int = 3
    m_max: int = 12
    guard: int = DEFAULT_GUARD
    out: Path | None = None


def parse_args(argv=None) -> Config:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-min", type=int, default=Config.m_min)
    ap.add_argument("--m-max", type=int, default=Config.m_max)
    ap.add_argument("--guard", type=int, default=Config.guard)
    ap.add_argument("--out", type=Path, default=None)
    a = ap.parse_args(argv)
    return Config(a.m_min, a.m_max, a.guard, a.out)


def main(argv=None) -> int:
    cfg = parse_args(argv)
    t0 = time.perf_counter()
    all_ok = True
    print(f"{'m':>3} {'classified':>10} {'neg':>5} {'max':>4} {'bdry':>5} {'zero':>4}  maximal negatives")
    for m in range(cfg.m_min, cfg.m_max + 1):
        r = run_census(m, guard=cfg.guard)
        d = diff_against_golden(r)
        all_ok &= d.ok
        s = r.stats
        tops = " ".join(f"({p})" for p in sorted(r.maximal_negative))
        print(f"{m:>3} {s['classified']:>10} {s['negatives']:>5} {s['maximal']:>4} {s['boundary']:>5} "
              f"{len(zero_candidates(r)):>4}  {tops}")
        if not d.ok:
            print(d.report())
        if cfg.out is not None:
            write_census(r, cfg.out)
    print(f"reference tables {'reproduced' if all_ok else 'NOT reproduced'} in {time.perf_counter() - t0:.2f}s")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
