"""Caterpillar quotient by sibling pendant-edge orbits.

Coordinates: spine edges ``x_1..x_{m-1}`` first, then one orbit coordinate
``y_i`` per spine vertex with ``a_i > 0``, in spine order.

Three matrices describe the same restricted operator:

* ``M``  common-value coordinates (rational, not symmetric in general);
* ``Q``  orthonormal orbit basis ``D M D^{-1}`` with ``D = diag(1, sqrt(a_i))``.
  Its off-diagonal spine/orbit entries are ``sqrt(a_i)/d_i``, so ``Q`` is kept
  as signed squares: entry ``r`` stands for ``sign(r) * sqrt(|r|)``;
* ``H = D^2 M = D Q D``  rational symmetric and congruent to ``Q``, hence with
  the same inertia. Schur complements are taken on ``H``; eliminating orbit
  coordinates from ``H`` or from ``Q`` yields the same spine block.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import Polynomial, RationalMatrix, char_poly
from .ricci import ricci_matrix
from .trees import CaterpillarParam, build_caterpillar


@dataclass(frozen=True)
class QuotientMatrices:
    m: int
    a: tuple[int, ...]
    M: RationalMatrix
    H: RationalMatrix
    Q_squares: RationalMatrix
    orbit_index: tuple[tuple[str, int], ...]  # ("spine", j) or ("pendant", i), 1-based

    @property
    def dim(self) -> int:
        return self.M.order

    @property
    def spine_indices(self) -> list[int]:
        return [k for k, (kind, _) in enumerate(self.orbit_index) if kind == "spine"]

    @property
    def pendant_indices(self) -> list[int]:
        return [k for k, (kind, _) in enumerate(self.orbit_index) if kind == "pendant"]

    def check_similarity(self) -> bool:
        """``Q = D M D^{-1}`` entrywise, via ``Q_uu = M_uu`` and ``Q_uv^2 = M_uv M_vu``."""
        n = self.dim
        M, Q2 = self.M, self.Q_squares
        for u in range(n):
            if Q2[u, u] != M[u, u] * abs(M[u, u]):
                return False
            for v in range(n):
                if u == v:
                    continue
                if Q2[u, v] != Q2[v, u]:
                    return False
                if abs(Q2[u, v]) != M[u, v] * M[v, u]:
                    return False
                if (Q2[u, v] > 0) != (M[u, v] > 0) or (Q2[u, v] < 0) != (M[u, v] < 0):
                    return False
        return True


def degrees(a: tuple[int, ...]) -> list[int]:
    m = len(a)
    return [(1 if i in (0, m - 1) else 2) + a[i] for i in range(m)]


def build_quotient(p: CaterpillarParam) -> QuotientMatrices:
    if not isinstance(p, CaterpillarParam):
        p = CaterpillarParam(tuple(p))
    m, a = p.m, p.a
    if m < 2:
        raise ValueError("quotient needs spine order m >= 2; stars are handled directly")
    q = [1 if i in (0, m - 1) else 2 for i in range(m)]
    d = [q[i] + a[i] for i in range(m)]
    index: list[tuple[str, int]] = [("spine", j + 1) for j in range(m - 1)]
    orbit_of: dict[int, int] = {}
    for i in range(m):
        if a[i] > 0:
            orbit_of[i] = len(index)
            index.append(("pendant", i + 1))
    n = len(index)
    M = [[Fraction(0)] * n for _ in range(n)]
    # spine edge s_j (0-based j) joins v_j and v_{j+1}
    for j in range(m - 1):
        M[j][j] = -(Fraction(1, d[j]) + Fraction(1, d[j + 1]))
        if j > 0:
            M[j][j - 1] = Fraction(1, d[j])
        if j < m - 2:
            M[j][j + 1] = Fraction(1, d[j + 1])
        for v in (j, j + 1):
            if a[v] > 0:
                M[j][orbit_of[v]] = Fraction(a[v], d[v])
    for i, k in orbit_of.items():
        M[k][k] = -Fraction(q[i] + 2, d[i])
        if i > 0:
            M[k][i - 1] = Fraction(1, d[i])
        if i < m - 1:
            M[k][i] = Fraction(1, d[i])
    weight = [Fraction(1)] * n  # D^2
    for i, k in orbit_of.items():
        weight[k] = Fraction(a[i])
    H = [[weight[u] * M[u][v] for v in range(n)] for u in range(n)]
    Q2 = [[Fraction(0)] * n for _ in range(n)]
    for u in range(n):
        for v in range(n):
            # Q_uv = sqrt(w_u / w_v) M_uv
            val = M[u][v] * M[u][v] * weight[u] / weight[v]
            Q2[u][v] = val if M[u][v] >= 0 else -val
    return QuotientMatrices(
        m=m,
        a=a,
        M=RationalMatrix(M),
        H=RationalMatrix(H),
        Q_squares=RationalMatrix(Q2),
        orbit_index=tuple(index),
    )


def sibling_spectrum(p: CaterpillarParam) -> list[tuple[Fraction, int]]:
    """Eigenvalues ``-1 - 2/d_i`` (multiplicity ``a_i - 1``) of sibling differences."""
    if not isinstance(p, CaterpillarParam):
        p = CaterpillarParam(tuple(p))
    d = [p.a[0]] if p.m == 1 else degrees(p.a)
    return [(-1 - Fraction(2, d[i]), k - 1) for i, k in enumerate(p.a) if k >= 2]


def sibling_factor(p: CaterpillarParam) -> Polynomial:
    out = Polynomial([1])
    for ev, mult in sibling_spectrum(p):
        out = out * Polynomial([-ev, 1]) ** mult
    return out


def spectrum_factorization_check(p: CaterpillarParam) -> bool:
    """``char(R_T) == char(M) * prod (x + 1 + 2/d_i)^(a_i - 1)`` exactly."""
    full = char_poly(ricci_matrix(build_caterpillar(p)))
    return full == char_poly(build_quotient(p).M) * sibling_factor(p)


def _imul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _isub(p: list[int], q: list[int]) -> list[int]:
    if len(p) < len(q):
        p = p + [0] * (len(q) - len(p))
    else:
        p = list(p)
    for i, y in enumerate(q):
        p[i] -= y
    return p


def quotient_char_poly(p: CaterpillarParam) -> Polynomial:
    """``det(x I - M)`` for the caterpillar quotient in O(m) polynomial steps.

    Each orbit coordinate couples only to the (at most two) spine edges at its
    vertex, so eliminating the orbits leaves a tridiagonal spine matrix whose
    entries are rational in ``x`` with denominators ``x + (q_v + 2)/d_v``.
    Clearing those denominators turns the leading-minor recurrence into an
    integer polynomial three-term recurrence

        R_{k+1} = A_k R_k - d_{k-1} d_{k+1} (G_k + a_k)^2 G_{k-1} G_{k+1} R_{k-1}

    with ``G_v = d_v x + q_v + 2`` on orbit vertices (``G_v = d_v`` otherwise) and
    ``A_k = (d_k d_{k+1} x + d_k + d_{k+1}) G_k G_{k+1} - a_k d_{k+1} G_{k+1}
    - a_{k+1} d_k G_k``. The last minor equals the characteristic polynomial
    times the interior orbit factors and a positive constant.
    """
    if not isinstance(p, CaterpillarParam):
        p = CaterpillarParam(tuple(p))
    m, a = p.m, p.a
    if m < 2:
        raise ValueError("quotient needs spine order m >= 2")
    d = degrees(a)
    G = []
    for v in range(m):
        if a[v] > 0:
            G.append([(1 if v in (0, m - 1) else 2) + 2, d[v]])
        else:
            G.append([d[v]])
    n = m - 1
    A = []
    for k in range(n):
        t = _imul(_imul([d[k] + d[k + 1], d[k] * d[k + 1]], G[k]), G[k + 1])
        if a[k]:
            t = _isub(t, [a[k] * d[k + 1] * c for c in G[k + 1]])
        if a[k + 1]:
            t = _isub(t, [a[k + 1] * d[k] * c for c in G[k]])
        A.append(t)
    prev, cur = [1], A[0]
    for k in range(1, n):
        B = list(G[k])
        B[0] += a[k]
        c = d[k - 1] * d[k + 1]
        gamma = _imul(_imul(_imul(B, B), G[k - 1]), G[k + 1])
        prev, cur = cur, _isub(_imul(A[k], cur), _imul([c * x for x in gamma], prev))
    coeffs = [Fraction(x) for x in cur]
    for v in range(1, m - 1):
        if a[v] > 0:
            coeffs = _divide_linear(coeffs, Fraction(G[v][0], G[v][1]))
    lead = coeffs[-1]
    return Polynomial([x / lead for x in coeffs])


def _divide_linear(p: list[Fraction], c: Fraction) -> list[Fraction]:
    """Exact quotient of ``p`` by ``x + c``."""
    n = len(p) - 1
    out = [Fraction(0)] * n
    acc = Fraction(0)
    for i in range(n, 0, -1):
        acc = p[i] - c * acc if i < n else p[i]
        out[i - 1] = acc
    if p[0] - c * acc != 0:
        raise ArithmeticError("orbit factor does not divide the spine minor")
    return out
