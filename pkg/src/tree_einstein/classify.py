"""Sign of the top eigenvalue of the Ricci matrix, decided exactly.

Three engines:

* ``classify_exact``        characteristic polynomial of the full edge matrix;
* ``classify_caterpillar``  characteristic polynomial of the orbit quotient;
* ``classify_by_theorem``   closed-form rules plus the embedded tables.

Both polynomial engines use the same test: ``x = 0`` root multiplicity plus a
Sturm count of distinct roots in ``(0, inf)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import golden
from .algebra import Polynomial, char_poly, count_roots_positive, zero_multiplicity
from .quotient import quotient_char_poly
from .ricci import residual, ricci_matrix
from .trees import CaterpillarParam, Tree, build_caterpillar, canonicalize, leq_up_to_reversal


class SignClass(enum.Enum):
    NEGATIVE = "NEGATIVE"
    ZERO = "ZERO"
    POSITIVE = "POSITIVE"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ClassificationResult:
    sign: SignClass
    zero_multiplicity: int
    positive_root_count: int
    matrix_dim: int
    source: str  # "full_matrix" | "quotient"

    def __post_init__(self):
        expected = sign_from_counts(self.zero_multiplicity, self.positive_root_count)
        if expected is not self.sign:
            raise AssertionError(f"inconsistent classification {self}")


def sign_from_counts(zero_mult: int, positive_roots: int) -> SignClass:
    if positive_roots > 0:
        return SignClass.POSITIVE
    return SignClass.ZERO if zero_mult > 0 else SignClass.NEGATIVE


def classify_polynomial(chi: Polynomial, dim: int, source: str) -> ClassificationResult:
    z = zero_multiplicity(chi)
    pos = count_roots_positive(chi)
    return ClassificationResult(sign_from_counts(z, pos), z, pos, dim, source)


def classify_exact(t: Tree) -> ClassificationResult:
    """Sign test on the full Ricci matrix."""
    R = ricci_matrix(t)
    return classify_polynomial(char_poly(R), R.order, "full_matrix")


def caterpillar_char_poly(p: CaterpillarParam | tuple[int, ...]) -> Polynomial:
    """Characteristic polynomial of the orbit-restricted operator (``[-2/k]`` for a star)."""
    if not isinstance(p, CaterpillarParam):
        p = CaterpillarParam(tuple(p))
    if p.m == 1:
        k = p.a[0]
        if k < 1:
            raise ValueError("a single vertex has no edges")
        return Polynomial([Fraction(2, k), 1])
    return quotient_char_poly(p)


def classify_caterpillar(p: CaterpillarParam | tuple[int, ...]) -> ClassificationResult:
    """Sign test on the orbit quotient; agrees with ``classify_exact`` on the full tree."""
    chi = caterpillar_char_poly(p)
    return classify_polynomial(chi, chi.degree, "quotient")


def _stable(a: tuple[int, ...]) -> bool:
    return len(a) >= 2 and a[0] == 3 and a[-1] == 3 and not any(a[1:-1])


def classify_by_theorem(p: CaterpillarParam | tuple[int, ...]) -> SignClass:
    """Sign from the closed-form classification rules, no matrix work."""
    if not isinstance(p, CaterpillarParam):
        p = CaterpillarParam(tuple(p))
    a = canonicalize(p).a
    m = len(a)
    if m == 1:
        return SignClass.NEGATIVE
    if m == 2:
        s = (a[0] - 1) * (a[1] - 1) - 4
        return SignClass.NEGATIVE if s < 0 else SignClass.ZERO if s == 0 else SignClass.POSITIVE
    if _stable(a) or a in golden.ZERO_EXCEPTIONS.get(m, ()):
        return SignClass.ZERO
    if m <= 11:
        if any(leq_up_to_reversal(a, top) for top in golden.MAXIMAL_NEGATIVE[m]):
            return SignClass.NEGATIVE
        return SignClass.POSITIVE
    endpoint_only = not any(a[1:-1])
    if endpoint_only and 1 <= a[0] <= 3 and 1 <= a[-1] <= 3:
        return SignClass.NEGATIVE
    return SignClass.POSITIVE


# ---------------------------------------------------------------------------
# numerical Einstein metric (Perron vector); never used for classification
# ---------------------------------------------------------------------------


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class EinsteinMetric:
    weights: tuple[float, ...]
    lambda_estimate: float
    residual_bound: float
    iterations: int

    @property
    def curvature(self) -> float:
        return -self.lambda_estimate


SHIFT = 2.0


def einstein_metric(t: Tree, tol: float = 1e-12, max_iter: int = 1_000_000) -> EinsteinMetric:
    """Perron vector of ``R_T`` by power iteration on ``R_T + 2 I``.

    Iterates are normalized to max entry 1; iteration stops once successive
    iterates differ by less than ``tol`` in the max norm. The residual bound is
    ``||R w - lam w||_inf`` evaluated exactly on the returned floats.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    R = ricci_matrix(t)
    n = R.order
    A = np.array([[float(x) for x in row] for row in R.rows]) + SHIFT * np.eye(n)
    w = np.ones(n)
    it = 0
    if n > 1:
        for it in range(1, max_iter + 1):
            nxt = A @ w
            nxt /= nxt.max()
            if np.max(np.abs(nxt - w)) < tol:
                w = nxt
                break
            w = nxt
        else:
            raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")
    lam = float(w @ (A @ w) / (w @ w)) - SHIFT
    wq = [Fraction(float(x)) for x in w]
    res = residual(t, wq, Fraction(lam))
    bound = float(max(abs(r) for r in res))
    if np.any(w <= 0):
        raise ConvergenceError("iterate lost strict positivity")
    return EinsteinMetric(tuple(float(x) for x in w), lam, bound, it)


# ---------------------------------------------------------------------------
# double stars
# ---------------------------------------------------------------------------


def double_star_rule(a: int, b: int) -> SignClass:
    s = (a - 1) * (b - 1)
    return SignClass.NEGATIVE if s < 4 else SignClass.ZERO if s == 4 else SignClass.POSITIVE


@dataclass(frozen=True)
class PhaseGrid:
    max_a: int
    max_b: int
    computed: dict[tuple[int, int], SignClass]
    predicted: dict[tuple[int, int], SignClass]

    @property
    def mismatches(self) -> list[tuple[int, int]]:
        return sorted(k for k in self.computed if self.computed[k] is not self.predicted[k])


def double_star_phase(max_a: int, max_b: int | None = None) -> PhaseGrid:
    max_b = max_a if max_b is None else max_b
    if max_a < 1 or max_b < 1:
        raise ValueError("bounds must be >= 1")
    computed, predicted = {}, {}
    for a in range(1, max_a + 1):
        for b in range(1, max_b + 1):
            computed[(a, b)] = classify_caterpillar((a, b)).sign
            predicted[(a, b)] = double_star_rule(a, b)
    return PhaseGrid(max_a, max_b, computed, predicted)


def lambda_estimate_is_decisive(metric: EinsteinMetric, tol: float) -> bool:
    return math.fabs(metric.lambda_estimate) > 100 * tol
