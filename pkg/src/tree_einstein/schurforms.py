"""Spine-edge Schur complements of short-defect and endpoint caterpillars.

Both matrices are built through the generic ``schur_complement`` of the
quotient ``H`` (never from a hand stencil), and the closed forms below are
checked against them exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import RationalMatrix, fraction_free_det, schur_complement
from .quotient import build_quotient
from .trees import endpoint_family, eta


def _check_defect_range(m: int, i: int) -> None:
    if m < 4 or not 2 <= i <= m - 1:
        raise ValueError(f"defect form needs m >= 4 and 2 <= i <= m-1, got m={m}, i={i}")


def _check_endpoint_range(m: int, a: int, b: int) -> None:
    if m < 2 or a < 1 or b < 1:
        raise ValueError(f"endpoint form needs m >= 2 and a, b >= 1, got m={m}, a={a}, b={b}")


# ---------------------------------------------------------------------------
# single internal defect
# ---------------------------------------------------------------------------


def defect_B(m: int, i: int) -> Fraction:
    _check_defect_range(m, i)
    return Fraction(8 * i * i - 8 * i * m - 8 * i + 13 * m + 20)


def defect_det_closed(m: int, i: int) -> Fraction:
    return (-1) ** (m + 1) * defect_B(m, i) / (81 * Fraction(2) ** (m - 2))


def forces_nonnegative(m: int, i: int) -> tuple[bool, bool]:
    """``(top eigenvalue >= 0 forced, > 0 forced)`` from the sign of ``B``.

    Negative definiteness of the ``(m-1)``-square spine block needs its
    determinant to have sign ``(-1)^(m-1)``, i.e. ``B > 0``. ``B = 0`` gives a
    kernel; ``B < 0`` gives a positive eigenvalue, which survives in the
    quotient since the eliminated orbit block is negative definite.
    """
    B = defect_B(m, i)
    return B <= 0, B < 0


@dataclass(frozen=True)
class DefectForm:
    m: int
    i: int

    def __post_init__(self):
        _check_defect_range(self.m, self.i)

    @property
    def B(self) -> Fraction:
        return defect_B(self.m, self.i)

    @property
    def det_closed(self) -> Fraction:
        return defect_det_closed(self.m, self.i)

    def matrix(self) -> RationalMatrix:
        return build_defect_schur(self.m, self.i)

    def check(self) -> bool:
        return fraction_free_det(self.matrix()) == self.det_closed


def build_defect_schur(m: int, i: int) -> RationalMatrix:
    """Spine block of the ``eta(m, i)`` quotient after eliminating the three orbits."""
    _check_defect_range(m, i)
    qm = build_quotient(eta(m, i))
    return schur_complement(qm.H, qm.spine_indices)


def max_defect_B(m: int) -> Fraction:
    return max(defect_B(m, i) for i in range(2, m))


# ---------------------------------------------------------------------------
# leaves at the two endpoints only
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EndpointForm:
    m: int
    a: int
    b: int

    def __post_init__(self):
        _check_endpoint_range(self.m, self.a, self.b)

    @property
    def n(self) -> int:
        return self.m - 1

    @property
    def rho(self) -> Fraction:
        return Fraction(2 * (3 - self.a), self.a + 1)

    @property
    def sigma(self) -> Fraction:
        return Fraction(2 * (self.b - 3), self.b + 1)

    @property
    def alpha_a(self) -> Fraction:
        return -Fraction(self.a + 9, 6 * (self.a + 1))

    @property
    def alpha_b(self) -> Fraction:
        return -Fraction(self.b + 9, 6 * (self.b + 1))

    def r(self, k: int) -> Fraction:
        return 1 + k * self.rho / 3

    @property
    def t(self) -> Fraction:
        return (self.rho - self.sigma * self.r(self.n - 1)) / 3

    def minors(self) -> list[Fraction]:
        n = self.n
        half = Fraction(-1, 2)
        out = [half**k * self.r(k) for k in range(1, n)]
        out.append(half**n * self.t)
        return out

    def matrix(self) -> RationalMatrix:
        return build_endpoint_schur(self.m, self.a, self.b)

    def check(self) -> bool:
        return self.matrix().leading_minors() == self.minors()


def build_endpoint_schur(m: int, a: int, b: int) -> RationalMatrix:
    """Spine block of the endpoint-family quotient after eliminating both orbits."""
    _check_endpoint_range(m, a, b)
    qm = build_quotient(endpoint_family(m, a, b))
    return schur_complement(qm.H, qm.spine_indices)


def endpoint_minors(m: int, a: int, b: int) -> list[Fraction]:
    return EndpointForm(m, a, b).minors()


def endpoint_semidefinite(m: int, a: int, b: int) -> tuple[bool, bool]:
    """``(negative semidefinite, singular)`` read off the closed-form minors."""
    f = EndpointForm(m, a, b)
    ok = all(f.r(k) > 0 for k in range(1, f.n)) and f.t >= 0
    return ok, f.t == 0


# ---------------------------------------------------------------------------
# batch checks used by the CLI
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchurCheckReport:
    defect_failures: tuple[tuple[int, int], ...]
    endpoint_failures: tuple[tuple[int, int, int], ...]
    convexity_failures: tuple[int, ...]
    checked: dict

    @property
    def ok(self) -> bool:
        return not (self.defect_failures or self.endpoint_failures or self.convexity_failures)


def check_all(m_max: int = 20, ab_max: int = 8, convexity_m_max: int | None = None) -> SchurCheckReport:
    conv_max = max(m_max, 40) if convexity_m_max is None else convexity_m_max
    bad_d, bad_e, bad_c = [], [], []
    nd = ne = 0
    for m in range(4, m_max + 1):
        for i in range(2, m):
            nd += 1
            if fraction_free_det(build_defect_schur(m, i)) != defect_det_closed(m, i):
                bad_d.append((m, i))
    for m in range(2, m_max + 1):
        for a in range(1, ab_max + 1):
            for b in range(1, ab_max + 1):
                ne += 1
                if not EndpointForm(m, a, b).check():
                    bad_e.append((m, a, b))
    for m in range(4, conv_max + 1):
        top = max_defect_B(m)
        if not (top == defect_B(m, 2) == defect_B(m, m - 1) == 36 - 3 * m):
            bad_c.append(m)
    return SchurCheckReport(
        tuple(bad_d), tuple(bad_e), tuple(bad_c),
        {"defect": nd, "endpoint": ne, "convexity": max(0, conv_max - 3)},
    )
