"""Breadth-first census of negative caterpillars at fixed spine order.

Starting from ``(1, 0, ..., 0, 1)``, every reached canonical parameter is
classified exactly; only negative parameters are expanded, since the
nonnegative region is closed under leaf attachment.
"""

from __future__ import annotations

import csv
import io
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import golden
from .classify import SignClass, classify_caterpillar
from .trees import CaterpillarParam, canonical, children, predecessors


class GuardExceeded(RuntimeError):
    def __init__(self, param: CaterpillarParam, guard: int):
        super().__init__(f"parameter {param} has leaf total {sum(param.a)} > guard {guard}")
        self.param = param
        self.guard = guard


DEFAULT_GUARD = 64
THREADS_ENV = "EINSTEIN_TREE_THREADS"


@dataclass(frozen=True)
class CensusResult:
    m: int
    negatives: frozenset[CaterpillarParam]
    maximal_negative: frozenset[CaterpillarParam]
    boundary: frozenset[CaterpillarParam]
    signs: dict[CaterpillarParam, SignClass] = field(repr=False, compare=False)
    stats: dict = field(default_factory=dict, compare=False)


def _sign_of(p: CaterpillarParam) -> SignClass:
    return classify_caterpillar(p).sign


def _workers(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(THREADS_ENV)
    return max(1, int(env)) if env else 1


def run_census(m: int, guard: int = DEFAULT_GUARD, workers: int | None = None) -> CensusResult:
    if m < 3:
        raise ValueError("census needs spine order m >= 3")
    t0 = time.perf_counter()
    start = canonical((1,) + (0,) * (m - 2) + (1,))
    signs: dict[CaterpillarParam, SignClass] = {}
    frontier = [start]
    nworkers = _workers(workers)
    pool = ProcessPoolExecutor(nworkers) if nworkers > 1 else None
    try:
        while frontier:
            for p in frontier:
                if sum(p.a) > guard:
                    raise GuardExceeded(p, guard)
            if pool is not None:
                results = list(pool.map(_sign_of, frontier, chunksize=64))
            else:
                results = [_sign_of(p) for p in frontier]
            signs.update(zip(frontier, results))
            nxt = set()
            for p, s in zip(frontier, results):
                if s is SignClass.NEGATIVE:
                    nxt.update(c for c in children(p) if c not in signs)
            frontier = sorted(nxt)
    finally:
        if pool is not None:
            pool.shutdown()
    negatives = frozenset(p for p, s in signs.items() if s is SignClass.NEGATIVE)
    maximal = frozenset(p for p in negatives if not (children(p) & negatives))
    boundary = frozenset(
        p for p, s in signs.items()
        if s is not SignClass.NEGATIVE and predecessors(p) <= negatives
    )
    stats = {
        "classified": len(signs),
        "negatives": len(negatives),
        "maximal": len(maximal),
        "boundary": len(boundary),
        "seconds": time.perf_counter() - t0,
    }
    return CensusResult(m, negatives, maximal, boundary, signs, stats)


def zero_candidates(r: CensusResult) -> set[CaterpillarParam]:
    return {p for p in r.boundary if r.signs[p] is SignClass.ZERO}


def check_downward_closed(r: CensusResult) -> list[CaterpillarParam]:
    """Negative parameters with a predecessor outside the negative set."""
    return sorted(p for p in r.negatives if not predecessors(p) <= r.negatives)


def check_maximal_children(r: CensusResult) -> list[CaterpillarParam]:
    """Maximal elements having some child that does not classify nonnegative."""
    bad = []
    for p in r.maximal_negative:
        for c in children(p):
            if classify_caterpillar(c).sign is SignClass.NEGATIVE:
                bad.append(p)
                break
    return sorted(bad)


# ---------------------------------------------------------------------------
# golden comparison
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CategoryDiff:
    category: str
    missing: tuple[CaterpillarParam, ...]  # in golden, not computed
    extra: tuple[CaterpillarParam, ...]  # computed, not in golden

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


@dataclass(frozen=True)
class CensusDiff:
    m: int
    categories: tuple[CategoryDiff, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.categories)

    def report(self) -> str:
        lines = []
        for c in self.categories:
            status = "ok" if c.ok else "MISMATCH"
            lines.append(f"m={self.m} {c.category}: {status}")
            for p in c.missing:
                lines.append(f"  missing {p}")
            for p in c.extra:
                lines.append(f"  extra   {p}")
        return "\n".join(lines)


def _diff(category: str, computed, expected) -> CategoryDiff:
    computed = set(computed)
    expected = {canonical(a) for a in expected}
    return CategoryDiff(category, tuple(sorted(expected - computed)), tuple(sorted(computed - expected)))


def diff_against_golden(r: CensusResult, tables: dict | None = None) -> CensusDiff:
    """Symmetric differences against the reference tables (overridable for testing)."""
    tables = tables or {
        "maximal": golden.MAXIMAL_NEGATIVE,
        "boundary": golden.BOUNDARY,
    }
    if r.m not in tables["maximal"]:
        raise KeyError(f"no reference tables for m={r.m}")
    cats = [
        _diff("maximal", r.maximal_negative, tables["maximal"][r.m]),
        _diff("boundary", r.boundary, tables["boundary"][r.m]),
        _diff("zero", zero_candidates(r), golden.zero_parameters(r.m)),
    ]
    return CensusDiff(r.m, tuple(cats))


# ---------------------------------------------------------------------------
# CSV output
# ---------------------------------------------------------------------------


CATEGORIES = ("negatives", "maximal", "boundary", "zero")


def census_rows(r: CensusResult, category: str) -> list[CaterpillarParam]:
    source = {
        "negatives": r.negatives,
        "maximal": r.maximal_negative,
        "boundary": r.boundary,
        "zero": zero_candidates(r),
    }[category]
    return sorted(source)


def format_csv(m: int, params) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "a"])
    for p in sorted(params):
        w.writerow([m, str(p)])
    return buf.getvalue()


def write_census(r: CensusResult, out_dir: str | Path) -> list[Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for cat in CATEGORIES:
        path = out / f"m{r.m:02d}_{cat}.csv"
        path.write_text(format_csv(r.m, census_rows(r, cat)))
        paths.append(path)
    return paths


def read_csv_params(path: str | Path) -> list[CaterpillarParam]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    return [CaterpillarParam.parse(a) for _, a in rows[1:]]
