"""Positive integer null vectors for zero-level trees, and their exact check.

Record format, one per line::

    1,4,1|6,6|2;3,3,3,3;2
    @s32|3,3,3|1,1,1

Caterpillar records: parameter, spine weights, then pendant groups for the
vertices with ``a_i > 0`` in spine order. ``@s32`` records: the three center
edge weights, then the three leaf edge weights in the same arm order.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .classify import SignClass, classify_exact
from .ricci import residual
from .trees import CaterpillarParam, Tree, build_caterpillar, s32


class CertificateError(ValueError):
    pass


@dataclass(frozen=True)
class ZeroCertificate:
    tree_spec: CaterpillarParam | str  # parameter, or a tree name such as "s32"
    spine_weights: tuple[int, ...]
    pendant_weights: tuple[tuple[int, ...], ...]

    @property
    def label(self) -> str:
        if isinstance(self.tree_spec, str):
            return "@" + self.tree_spec
        return str(self.tree_spec)

    def tree(self) -> Tree:
        if isinstance(self.tree_spec, str):
            if self.tree_spec != "s32":
                raise CertificateError(f"unknown named tree {self.tree_spec!r}")
            return s32()
        return build_caterpillar(self.tree_spec)

    def weights(self) -> list[int]:
        """Weights in edge order; raises on a shape mismatch with the tree."""
        if isinstance(self.tree_spec, str):
            if len(self.spine_weights) != 3 or len(self.pendant_weights) != 1 or len(self.pendant_weights[0]) != 3:
                raise CertificateError(f"{self.label}: expects 3 center and 3 leaf weights")
            return list(self.spine_weights) + list(self.pendant_weights[0])
        p = self.tree_spec
        if len(self.spine_weights) != p.m - 1:
            raise CertificateError(
                f"{self.label}: {len(self.spine_weights)} spine weights for {p.m - 1} spine edges"
            )
        sizes = [k for k in p.a if k > 0]
        if [len(g) for g in self.pendant_weights] != sizes:
            raise CertificateError(
                f"{self.label}: pendant groups {[len(g) for g in self.pendant_weights]} do not match {sizes}"
            )
        out = list(self.spine_weights)
        for g in self.pendant_weights:
            out.extend(g)
        return out

    def to_line(self) -> str:
        spine = ",".join(map(str, self.spine_weights))
        groups = ";".join(",".join(map(str, g)) for g in self.pendant_weights)
        return f"{self.label}|{spine}|{groups}"


def parse_certificate(line: str) -> ZeroCertificate:
    parts = line.strip().split("|")
    if len(parts) != 3:
        raise CertificateError(f"expected three '|'-separated fields: {line!r}")
    head, spine, groups = parts
    try:
        spine_w = tuple(int(x) for x in spine.split(",") if x.strip())
        group_w = tuple(tuple(int(x) for x in g.split(",") if x.strip()) for g in groups.split(";"))
    except ValueError as exc:
        raise CertificateError(f"non-integer weight in {line!r}") from exc
    if head.startswith("@"):
        spec: CaterpillarParam | str = head[1:]
    else:
        spec = CaterpillarParam.parse(head)
    return ZeroCertificate(spec, spine_w, group_w)


def parse_certificates(text: str) -> list[ZeroCertificate]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(parse_certificate(line))
    return out


def read_certificates(path: str | Path) -> list[ZeroCertificate]:
    return parse_certificates(Path(path).read_text())


def format_certificates(certs) -> str:
    return "".join(c.to_line() + "\n" for c in certs)


_BUILTIN = """\
2,5|3|1,1;1,1,1,1,1
1,4,1|6,6|2;3,3,3,3;2
1,0,9|9,15|3;5,5,5,5,5,5,5,5,5
1,0,0,6|9,15,21|3;7,7,7,7,7,7
1,0,0,0,5|3,5,7,9|1;3,3,3,3,3
2,0,0,0,4|9,11,13,15|3,3;5,5,5,5
1,0,0,0,0,0,0,4|3,5,7,9,11,13,15|1;5,5,5,5
1,1,0,0,0,0,0,0,2|15,21,19,17,15,13,11,9|5;9;3,3
1,0,0,0,0,0,0,0,0,0,1,1|3,5,7,9,11,13,15,17,19,21,15|1;9;5
"""


def finite_exception_certificates() -> list[ZeroCertificate]:
    return parse_certificates(_BUILTIN)


def s32_certificate() -> ZeroCertificate:
    return ZeroCertificate("s32", (3, 3, 3), ((1, 1, 1),))


def stable_family_certificate(m: int) -> ZeroCertificate:
    """``(3, 0, ..., 0, 3)``: spine weights 3, pendant weights 1."""
    if m < 2:
        raise CertificateError("stable family needs m >= 2")
    p = CaterpillarParam((3,) + (0,) * (m - 2) + (3,))
    return ZeroCertificate(p, (3,) * (m - 1), ((1, 1, 1), (1, 1, 1)))


def builtin_certificates(stable_max_m: int = 2) -> list[ZeroCertificate]:
    out = finite_exception_certificates() + [s32_certificate()]
    out += [stable_family_certificate(m) for m in range(2, stable_max_m + 1)]
    return out


def certificate_residual(c: ZeroCertificate) -> list:
    return residual(c.tree(), c.weights(), 0)


def verify_certificate(c: ZeroCertificate) -> bool:
    """Positive weights, exact null vector, and an independent ZERO classification."""
    w = c.weights()
    if any(x <= 0 for x in w):
        return False
    if any(certificate_residual(c)):
        return False
    return classify_exact(c.tree()).sign is SignClass.ZERO
