"""Exact rational linear algebra: polynomials, Sturm counts, determinants.

Scalars are :class:`fractions.Fraction`. Nothing in this module ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


class SingularBlockError(ArithmeticError):
    """The principal block to be eliminated in a Schur complement is singular."""


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial with exact rational coefficients, ascending degree."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-_as_fraction(r), 1])
        return p

    @classmethod
    def monomial(cls, k: int, c=1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Polynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = _as_fraction(other)
            return Polynomial(c * x for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * y
        return Polynomial(quot), Polynomial(rem[:dq])

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return Polynomial(c / self.lead for c in self.coeffs)

    def shift(self, c) -> "Polynomial":
        """Return ``p(x + c)``."""
        c = _as_fraction(c)
        out = Polynomial()
        lin = Polynomial([c, 1])
        for coef in reversed(self.coeffs):
            out = out * lin + Polynomial([coef])
        return out

    def scale_argument(self, s) -> "Polynomial":
        """Return ``p(s*x)``."""
        s = _as_fraction(s)
        return Polynomial(c * s**i for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "Polynomial(0)"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}")
        return "Polynomial(" + " + ".join(terms) + ")"


# ---- integer polynomial kernels (ascending coefficient lists) ----

def _to_primitive_int(p: Polynomial) -> list[int]:
    """Positive-multiple of ``p`` with coprime integer coefficients."""
    dens = [c.denominator for c in p.coeffs]
    L = reduce(lcm, dens, 1)
    ints = [c.numerator * (L // c.denominator) for c in p.coeffs]
    return _primitive(ints)


def _primitive(ints: list[int]) -> list[int]:
    g = reduce(gcd, ints, 0)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def _strip(ints: list[int]) -> list[int]:
    while ints and ints[-1] == 0:
        ints.pop()
    return ints


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Sign-preserving pseudo-remainder: ``|lc(b)|^k * a mod b`` for suitable k."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    alb = abs(lb)
    sgn = 1 if lb > 0 else -1
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        # r <- |lb| * r - sgn * c * x^shift * b
        r = [alb * x for x in r]
        f = sgn * c
        for j, y in enumerate(b):
            r[shift + j] -= f * y
        _strip(r)
    return r


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    a, b = _primitive(list(a)), _primitive(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _primitive(r) if r else r
    return a if a[-1] > 0 else [-x for x in a]


def _int_exact_div(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (rational quotient, then primitive)."""
    q, r = divmod(Polynomial(a), Polynomial(b))
    if not r.is_zero():
        raise ArithmeticError("inexact polynomial division")
    return _to_primitive_int(q)


def _sign_at_zero(p: list[int]) -> int:
    return (p[0] > 0) - (p[0] < 0) if p else 0


def _variations(signs: Iterable[int]) -> int:
    count, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


# ---- public polynomial operations ----

def zero_multiplicity(p: Polynomial) -> int:
    """Largest ``k`` with ``x**k`` dividing ``p``."""
    if p.is_zero():
        raise ValueError("zero polynomial has no finite root multiplicity")
    k = 0
    while p.coeffs[k] == 0:
        k += 1
    return k


def square_free_part(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise ValueError("zero polynomial")
    ints = _to_primitive_int(p)
    if len(ints) <= 2:
        return Polynomial(ints)
    d = [i * c for i, c in enumerate(ints) if i]
    g = _int_gcd(ints, d)
    if len(g) == 1:
        return Polynomial(ints)
    return Polynomial(_int_exact_div(ints, g))


@dataclass(frozen=True)
class SturmChain:
    """Sturm sequence of the square-free part of a polynomial.

    Entries are positive rescalings of the classical chain
    ``p0, p0', -rem(p0, p1), ...``; positive rescaling leaves every sign unchanged.
    """

    polys: tuple[Polynomial, ...]

    @classmethod
    def of(cls, p: Polynomial) -> "SturmChain":
        return cls(tuple(Polynomial(q) for q in _int_sturm(_to_primitive_int(square_free_part(p)))))

    def variations_at(self, x) -> int:
        x = _as_fraction(x)
        return _variations(_sign(q(x)) for q in self.polys)

    def variations_at_infinity(self) -> int:
        return _variations(_sign(q.lead) for q in self.polys)

    def variations_at_neg_infinity(self) -> int:
        return _variations(_sign(q.lead) * (-1) ** q.degree for q in self.polys)

    def count_roots(self, lo, hi) -> int:
        """Distinct roots in the half-open interval ``(lo, hi]``."""
        return self.variations_at(lo) - self.variations_at(hi)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _int_sturm(p0: list[int]) -> list[list[int]]:
    chain = [p0]
    if len(p0) <= 1:
        return chain
    p1 = _primitive([i * c for i, c in enumerate(p0) if i])
    chain.append(p1)
    while len(chain[-1]) > 1:
        r = _int_prem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_primitive([-x for x in r]))
    return chain


def count_roots_positive(p: Polynomial) -> int:
    """Number of distinct real roots of ``p`` in the open interval ``(0, inf)``."""
    k = zero_multiplicity(p)
    ints = _to_primitive_int(Polynomial(p.coeffs[k:]))
    if len(ints) <= 1:
        return 0
    if len(ints) > 2:
        d = [i * c for i, c in enumerate(ints) if i]
        g = _int_gcd(ints, d)
        if len(g) > 1:
            ints = _int_exact_div(ints, g)
    chain = _int_sturm(ints)
    # p(0) != 0 after stripping x^k, so the chain may be evaluated at 0 itself.
    v0 = _variations(_sign_at_zero(q) for q in chain)
    vinf = _variations(_sign(q[-1]) for q in chain)
    return v0 - vinf


def count_roots_above(p: Polynomial, c) -> int:
    """Distinct real roots of ``p`` in ``(c, inf)``."""
    return count_roots_positive(p.shift(c))


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class RationalMatrix:
    """Dense square matrix of exact rationals (immutable)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence]):
        rows = tuple(tuple(_as_fraction(x) for x in r) for r in rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        self.rows = rows

    @classmethod
    def zeros(cls, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> "RationalMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @property
    def order(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"RationalMatrix([{body}])"

    def is_symmetric(self) -> bool:
        n = self.order
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self.rows)))

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[x + y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return RationalMatrix(
            [[x - y for x, y in zip(r, s)] for r, s in zip(self.rows, other.rows)]
        )

    def scaled(self, c) -> "RationalMatrix":
        c = _as_fraction(c)
        return RationalMatrix([[c * x for x in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            cols = list(zip(*other.rows))
            return RationalMatrix(
                [[sum((x * y for x, y in zip(r, c)), Fraction(0)) for c in cols] for r in self.rows]
            )
        vec = [_as_fraction(v) for v in other]
        if len(vec) != self.order:
            raise ValueError("dimension mismatch")
        return [sum((x * y for x, y in zip(r, vec)), Fraction(0)) for r in self.rows]

    def submatrix(self, idx: Sequence[int], jdx: Sequence[int] | None = None) -> list[list[Fraction]]:
        jdx = idx if jdx is None else jdx
        return [[self.rows[i][j] for j in jdx] for i in idx]

    def principal(self, idx: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix(self.submatrix(idx))

    def leading_minors(self) -> list[Fraction]:
        """Leading principal minors ``P_1, ..., P_n``."""
        return [fraction_free_det(self.principal(range(k))) for k in range(1, self.order + 1)]

    def quadratic_form(self, v: Sequence) -> Fraction:
        vec = [_as_fraction(x) for x in v]
        return sum((x * y for x, y in zip(vec, self @ vec)), Fraction(0))


def char_poly(M: RationalMatrix) -> Polynomial:
    """Monic characteristic polynomial ``det(x I - M)``.

    Reduces to upper Hessenberg form by exact similarity transforms, then runs
    the standard Hessenberg determinant recurrence.
    """
    n = M.order
    if n == 0:
        return Polynomial([1])
    H = [list(r) for r in M.rows]
    for k in range(1, n - 1):
        piv = next((i for i in range(k, n) if H[i][k - 1] != 0), None)
        if piv is None:
            continue
        if piv != k:
            H[piv], H[k] = H[k], H[piv]
            for row in H:
                row[piv], row[k] = row[k], row[piv]
        pivot = H[k][k - 1]
        Hk = H[k]
        for i in range(k + 1, n):
            Hi = H[i]
            if Hi[k - 1] == 0:
                continue
            u = Hi[k - 1] / pivot
            for j in range(k - 1, n):
                if Hk[j]:
                    Hi[j] -= u * Hk[j]
            for row in H:
                if row[i]:
                    row[k] += u * row[i]
    # p[k] = det(x I - H[:k, :k]) as ascending coefficient lists
    p: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        prev = p[k - 1]
        h = H[k - 1][k - 1]
        cur = [Fraction(0)] + prev  # x * p[k-1]
        for j, c in enumerate(prev):
            cur[j] -= h * c
        t = Fraction(1)
        for i in range(k - 1, 0, -1):
            t *= H[i][i - 1]
            if t == 0:
                break
            coef = H[i - 1][k - 1] * t
            if coef:
                for j, c in enumerate(p[i - 1]):
                    cur[j] -= coef * c
        p.append(cur)
    return Polynomial(p[n])


def fraction_free_det(M: RationalMatrix) -> Fraction:
    """Exact determinant by Bareiss elimination on a row-scaled integer matrix."""
    n = M.order
    if n == 0:
        return Fraction(1)
    rows = []
    scale = 1
    for r in M.rows:
        L = reduce(lcm, (x.denominator for x in r), 1)
        scale *= L
        rows.append([x.numerator * (L // x.denominator) for x in r])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if rows[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pk = rows[k][k]
        rk = rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - rik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return Fraction(sign * rows[n - 1][n - 1], scale)


def solve(A: Sequence[Sequence[Fraction]], B: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Solve ``A X = B`` exactly by Gauss-Jordan; raises SingularBlockError."""
    n = len(A)
    k = len(B[0]) if B else 0
    aug = [list(map(_as_fraction, A[i])) + list(map(_as_fraction, B[i])) for i in range(n)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise SingularBlockError("eliminated block is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:n + k] for row in aug]


def schur_complement(M: RationalMatrix, keep: Iterable[int]) -> RationalMatrix:
    """``A - C D^{-1} C'`` where ``A`` is the block on ``keep`` and ``D`` the rest."""
    keep = sorted(set(keep))
    n = M.order
    if any(i < 0 or i >= n for i in keep):
        raise IndexError("keep index out of range")
    drop = [i for i in range(n) if i not in set(keep)]
    if not drop:
        return RationalMatrix(M.submatrix(keep))
    A = M.submatrix(keep)
    C = M.submatrix(keep, drop)
    Ct = M.submatrix(drop, keep)
    D = M.submatrix(drop)
    X = solve(D, Ct) if keep else []  # D^{-1} C'
    if not keep:
        solve(D, [[0] for _ in drop])  # still reject a singular block
        return RationalMatrix([])
    out = [
        [A[i][j] - sum((C[i][t] * X[t][j] for t in range(len(drop))), Fraction(0)) for j in range(len(keep))]
        for i in range(len(keep))
    ]
    return RationalMatrix(out)
