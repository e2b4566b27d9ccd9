"""Double-star sign grid next to the (a-1)(b-1) = 4 hyperbola, as CSV and a text map."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from tree_einstein.classify import SignClass, double_star_phase
from tree_einstein.cli import phase_csv

GLYPH = {SignClass.NEGATIVE: "-", SignClass.ZERO: "0", SignClass.POSITIVE: "+"}


@dataclass
class Config:
    size: int = 20
    out: Path | None = None


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=Config.size)
    ap.add_argument("--out", type=Path, default=None)
    a = ap.parse_args(argv)
    cfg = Config(a.size, a.out)

    grid = double_star_phase(cfg.size)
    if cfg.out is not None:
        cfg.out.parent.mkdir(parents=True, exist_ok=True)
        cfg.out.write_text(phase_csv(grid))
    # rows a = size..1 so the picture reads like a plot
    for x in range(cfg.size, 0, -1):
        print(f"{x:>3} " + "".join(GLYPH[grid.computed[(x, y)]] for y in range(1, cfg.size + 1)))
    print("    " + "".join(str(y % 10) for y in range(1, cfg.size + 1)))
    print(f"mismatches against the hyperbola rule: {len(grid.mismatches)}")
    return 0 if not grid.mismatches else 1


if __name__ == "__main__":
    sys.exit(main())
