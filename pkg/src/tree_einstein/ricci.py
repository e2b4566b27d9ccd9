"""Edge-indexed Ricci matrix of a tree and the closed Lin-Lu-Yau curvature formula."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import RationalMatrix
from .trees import Tree


def ricci_matrix(t: Tree) -> RationalMatrix:
    """Symmetric matrix indexed by the tree's edge order.

    Diagonal ``-(1/d_x + 1/d_y)`` for edge ``xy``; ``1/d_z`` between two edges
    meeting at ``z``; zero for disjoint edges.
    """
    if t.edge_count == 0:
        raise ValueError("Ricci matrix needs at least one edge")
    d = t.degrees
    E = t.edges
    n = len(E)
    R = [[Fraction(0)] * n for _ in range(n)]
    for k, (x, y) in enumerate(E):
        R[k][k] = -(Fraction(1, d[x]) + Fraction(1, d[y]))
    for v, inc in enumerate(t.incident_edges()):
        w = Fraction(1, d[v]) if inc else None
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                R[inc[i]][inc[j]] = R[inc[j]][inc[i]] = w
    return RationalMatrix(R)


def _vec(t: Tree, f: Sequence) -> list[Fraction]:
    if len(f) != t.edge_count:
        raise ValueError(f"expected {t.edge_count} edge values, got {len(f)}")
    return [x if isinstance(x, Fraction) else Fraction(x) for x in f]


def vertex_sums(t: Tree, f: Sequence) -> tuple[list[Fraction], list[Fraction]]:
    """Per-vertex ``S_v = sum f_e`` and ``A_v = sum f_e^2`` over incident edges."""
    f = _vec(t, f)
    S = [Fraction(0)] * t.vertex_count
    A = [Fraction(0)] * t.vertex_count
    for k, (x, y) in enumerate(t.edges):
        for v in (x, y):
            S[v] += f[k]
            A[v] += f[k] * f[k]
    return S, A


def lly_curvature(t: Tree, w: Sequence) -> list[Fraction]:
    """Per-edge Lin-Lu-Yau curvature for strictly positive weights."""
    w = _vec(t, w)
    if any(x <= 0 for x in w):
        raise ValueError("curvature needs strictly positive edge weights")
    S, _ = vertex_sums(t, w)
    d = t.degrees
    out = []
    for k, (x, y) in enumerate(t.edges):
        wk = w[k]
        out.append(-((S[x] - 2 * wk) / (d[x] * wk) + (S[y] - 2 * wk) / (d[y] * wk)))
    return out


def rayleigh_form(t: Tree, f: Sequence) -> Fraction:
    """``<f, R f>`` through the vertex decomposition ``sum_v (S_v^2 - 2 A_v) / d_v``."""
    S, A = vertex_sums(t, f)
    d = t.degrees
    return sum(
        ((S[v] * S[v] - 2 * A[v]) / d[v] for v in range(t.vertex_count) if d[v]),
        Fraction(0),
    )


def leaf_attach_delta(t: Tree, v: int, f: Sequence, y) -> Fraction:
    """Change of the quadratic form when a pendant edge with value ``y`` is attached at ``v``."""
    S, A, d = _local(t, v, f)
    y = Fraction(y)
    return -(S * S - 2 * A) / (d * (d + 1)) + 2 * S * y / (d + 1) - (d + 2) * y * y / (d + 1)


def leaf_attach_max(t: Tree, v: int, f: Sequence) -> tuple[Fraction, Fraction]:
    """Maximizer ``y* = S/(d+2)`` and maximum ``2 (A - S^2/(d+2)) / (d (d+1))``."""
    S, A, d = _local(t, v, f)
    return S / (d + 2), 2 * (A - S * S / (d + 2)) / (d * (d + 1))


def _local(t: Tree, v: int, f: Sequence) -> tuple[Fraction, Fraction, int]:
    f = _vec(t, f)
    d = t.degrees[v]
    if d == 0:
        raise ValueError("attachment vertex must already carry an edge")
    S = Fraction(0)
    A = Fraction(0)
    for k, (x, y) in enumerate(t.edges):
        if v in (x, y):
            S += f[k]
            A += f[k] * f[k]
    return S, A, d


def residual(t: Tree, w: Sequence, lam) -> list[Fraction]:
    """``R_T w - lam w``, exactly."""
    w = _vec(t, w)
    lam = Fraction(lam)
    Rw = ricci_matrix(t) @ w
    return [r - lam * x for r, x in zip(Rw, w)]


# ---- weight vector files: one rational per line, EdgeIndex order ----

def parse_weights(text: str) -> list[Fraction]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            out.append(Fraction(line))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"line {lineno}: not a rational: {raw!r}") from exc
    return out


def read_weights(path: str | Path) -> list[Fraction]:
    return parse_weights(Path(path).read_text())


def format_weights(w: Sequence) -> str:
    return "".join(f"{Fraction(x)}\n" for x in w)
