"""Write the built-in null-vector certificates to a text file and re-verify them from disk."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from tree_einstein.certs import builtin_certificates, format_certificates, read_certificates, verify_certificate

HEADER = """\
# Positive integer null vectors of zero-level trees.
# param|spine weights|pendant groups (only vertices with leaves, spine order)
# @s32|center edge weights|leaf edge weights (same arm order)
"""


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("data/zero_certificates.txt"))
    ap.add_argument("--stable-max-m", type=int, default=6)
    args = ap.parse_args(argv)
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(HEADER + format_certificates(builtin_certificates(args.stable_max_m)))
    back = read_certificates(args.out)
    bad = [c.label for c in back if not verify_certificate(c)]
    print(f"wrote {len(back)} certificates to {args.out}; failing: {bad or 'none'}")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
