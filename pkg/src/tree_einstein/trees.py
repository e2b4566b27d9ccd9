"""Finite trees, caterpillar parameters, and the fixed edge ordering.

Edge order for caterpillars: spine edges ``s_1..s_{m-1}`` first, then pendant
edges grouped by spine vertex ``v_1..v_m``. Vertex ids are dense integers; spine
vertices come first (left to right), leaves after them grouped by attachment.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence


class TreeError(ValueError):
    pass


@dataclass(frozen=True)
class Tree:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = self.vertex_count
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if n < 1:
            raise TreeError("a tree needs at least one vertex")
        if len(edges) != n - 1:
            raise TreeError(f"{n} vertices need {n - 1} edges, got {len(edges)}")
        seen = set()
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        deg = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise TreeError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise TreeError(f"self-loop at {u}")
            key = frozenset((u, v))
            if key in seen:
                raise TreeError(f"duplicate edge ({u}, {v})")
            seen.add(key)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise TreeError("edges contain a cycle")
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
        object.__setattr__(self, "degrees", tuple(deg))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def incident_edges(self) -> list[list[int]]:
        """Edge indices at each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for k, (u, v) in enumerate(self.edges):
            inc[u].append(k)
            inc[v].append(k)
        return inc

    def attach_leaf(self, v: int) -> "Tree":
        """New tree with one pendant edge at ``v``, appended last in edge order."""
        if not 0 <= v < self.vertex_count:
            raise TreeError(f"no vertex {v}")
        n = self.vertex_count
        return Tree(n + 1, self.edges + ((v, n),))


@dataclass(frozen=True, order=True)
class CaterpillarParam:
    """Leaf counts ``(a_1, ..., a_m)`` along a spine of order ``m``."""

    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if not a:
            raise TreeError("spine order must be at least 1")
        if any(x < 0 for x in a):
            raise TreeError(f"negative leaf count in {a}")
        if len(a) >= 2 and (a[0] < 1 or a[-1] < 1):
            raise TreeError(f"spine endpoints need at least one leaf: {a}")

    @property
    def m(self) -> int:
        return len(self.a)

    def __iter__(self):
        return iter(self.a)

    def __str__(self) -> str:
        return ",".join(map(str, self.a))

    @classmethod
    def parse(cls, text: str) -> "CaterpillarParam":
        try:
            return cls(tuple(int(tok) for tok in text.replace(" ", "").strip("()").split(",")))
        except ValueError as exc:
            raise TreeError(f"cannot parse caterpillar parameter {text!r}") from exc


def _valid(a: Sequence[int]) -> bool:
    if any(x < 0 for x in a):
        return False
    if len(a) == 1:
        return a[0] >= 1
    return a[0] >= 1 and a[-1] >= 1


def canonicalize(p: CaterpillarParam) -> CaterpillarParam:
    r = p.a[::-1]
    return p if p.a <= r else CaterpillarParam(r)


def canonical(a: Iterable[int]) -> CaterpillarParam:
    return canonicalize(CaterpillarParam(tuple(a)))


def children(p: CaterpillarParam) -> set[CaterpillarParam]:
    out = set()
    for i in range(p.m):
        b = list(p.a)
        b[i] += 1
        out.add(canonical(b))
    return out


def predecessors(p: CaterpillarParam) -> set[CaterpillarParam]:
    """Canonical ``p - e_i`` that are still valid caterpillar parameters."""
    out = set()
    for i in range(p.m):
        if p.a[i] == 0:
            continue
        b = list(p.a)
        b[i] -= 1
        if _valid(b):
            out.add(canonical(b))
    return out


def leq_up_to_reversal(p: Sequence[int], q: Sequence[int]) -> bool:
    """``p <= q`` coordinatewise, for ``p`` or its reversal."""
    if len(p) != len(q):
        return False
    return all(x <= y for x, y in zip(p, q)) or all(x <= y for x, y in zip(reversed(p), q))


def iter_params(m: int, max_total: int, canonical_only: bool = True) -> Iterator[CaterpillarParam]:
    """Valid parameters of spine order ``m`` with ``sum(a) <= max_total``, in lexicographic order."""
    if m < 1:
        raise TreeError("spine order must be at least 1")

    def rec(prefix: list[int], left: int):
        k = len(prefix)
        if k == m:
            yield tuple(prefix)
            return
        lo = 1 if (k == 0 or k == m - 1) else 0
        for x in range(lo, left + 1):
            prefix.append(x)
            yield from rec(prefix, left - x)
            prefix.pop()

    for a in rec([], max_total):
        if not canonical_only or a <= a[::-1]:
            yield CaterpillarParam(a)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def build_caterpillar(p: CaterpillarParam | Sequence[int]) -> Tree:
    if not isinstance(p, CaterpillarParam):
        p = CaterpillarParam(tuple(p))
    m = p.m
    edges = [(i, i + 1) for i in range(m - 1)]
    nxt = m
    for i, k in enumerate(p.a):
        for _ in range(k):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, tuple(edges))


def spine_edge_count(p: CaterpillarParam) -> int:
    return p.m - 1


def star(k: int) -> Tree:
    if k < 1:
        raise TreeError("star needs k >= 1")
    return build_caterpillar(CaterpillarParam((k,)))


def double_star(a: int, b: int) -> Tree:
    return build_caterpillar(CaterpillarParam((a, b)))


def path(n: int) -> Tree:
    """Path on ``n`` vertices ``0 - 1 - ... - n-1``, edges in path order."""
    if n < 1:
        raise TreeError("path needs n >= 1")
    return Tree(n, tuple((i, i + 1) for i in range(n - 1)))


def s32() -> Tree:
    """Three-leaf star with every edge subdivided.

    Center 0, middle vertices 1..3, leaves 4..6. Edges: the three center edges,
    then the three leaf edges in the same arm order.
    """
    return Tree(7, ((0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)))


def eta(m: int, i: int) -> CaterpillarParam:
    """Minimal internal defect: one leaf at each endpoint and at ``v_i`` (1-based)."""
    if m < 3 or not 2 <= i <= m - 1:
        raise TreeError(f"eta needs m >= 3 and 2 <= i <= m-1, got m={m}, i={i}")
    a = [0] * m
    a[0] = a[-1] = 1
    a[i - 1] = 1
    return CaterpillarParam(tuple(a))


def endpoint_family(m: int, a: int, b: int) -> CaterpillarParam:
    if m < 2 or a < 1 or b < 1:
        raise TreeError(f"endpoint family needs m >= 2, a, b >= 1; got {m}, {a}, {b}")
    return CaterpillarParam((a,) + (0,) * (m - 2) + (b,))


NAMED = {
    "star": (1, lambda k: star(k)),
    "double_star": (2, lambda a, b: double_star(a, b)),
    "path": (1, lambda n: path(n)),
    "s32": (0, lambda: s32()),
    "eta": (2, lambda m, i: build_caterpillar(eta(m, i))),
    "endpoint": (3, lambda m, a, b: build_caterpillar(endpoint_family(m, a, b))),
}


def build_named(name: str, *params: int) -> Tree:
    """Build a named tree. ``name`` may also carry parameters: ``"eta:6,3"``."""
    if ":" in name:
        name, rest = name.split(":", 1)
        params = tuple(int(x) for x in rest.split(",") if x.strip()) + tuple(params)
    name = name.strip().lower()
    if name not in NAMED:
        raise TreeError(f"unknown tree name {name!r}; known: {', '.join(sorted(NAMED))}")
    arity, fn = NAMED[name]
    if len(params) != arity:
        raise TreeError(f"{name} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


# ---------------------------------------------------------------------------
# recognition
# ---------------------------------------------------------------------------


def caterpillar_param_of(t: Tree) -> CaterpillarParam | None:
    """Canonical parameter of ``t`` if it is a caterpillar, else ``None``.

    ``K_1`` maps to ``(0,)`` and ``K_2`` to ``(1,)``; a path on ``n >= 3`` vertices
    maps to ``(1, 0, ..., 0, 1)`` of spine order ``n - 2``.
    """
    n = t.vertex_count
    if n == 1:
        return CaterpillarParam((0,))
    if n == 2:
        return CaterpillarParam((1,))
    adj = t.neighbors()
    inner = [v for v in range(n) if t.degrees[v] >= 2]
    inner_set = set(inner)
    inner_adj = {v: [u for u in adj[v] if u in inner_set] for v in inner}
    if any(len(ns) > 2 for ns in inner_adj.values()):
        return None
    leaves = {v: sum(1 for u in adj[v] if u not in inner_set) for v in inner}
    if len(inner) == 1:
        return CaterpillarParam((leaves[inner[0]],))
    start = next(v for v in inner if len(inner_adj[v]) == 1)
    order = [start]
    prev = None
    while True:
        nxt = [u for u in inner_adj[order[-1]] if u != prev]
        if not nxt:
            break
        prev = order[-1]
        order.append(nxt[0])
    return canonical(leaves[v] for v in order)


def contains_s32(t: Tree) -> bool:
    """Whether some vertex has three neighbours that are not leaves."""
    adj = t.neighbors()
    return any(sum(1 for u in adj[v] if t.degrees[u] >= 2) >= 3 for v in range(t.vertex_count))


# ---------------------------------------------------------------------------
# file formats
# ---------------------------------------------------------------------------


def parse_edge_list(text: str) -> Tree:
    """One edge per line, two integer vertex ids; ``#`` comments and blanks ignored."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise TreeError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise TreeError(f"line {lineno}: non-integer vertex id in {raw!r}") from exc
        if u < 0 or v < 0:
            raise TreeError(f"line {lineno}: negative vertex id")
        edges.append((u, v))
    if not edges:
        raise TreeError("edge list is empty")
    n = max(max(e) for e in edges) + 1
    return Tree(n, tuple(edges))


def read_edge_list(path: str | Path) -> Tree:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(t: Tree) -> str:
    return "".join(f"{u} {v}\n" for u, v in t.edges)
