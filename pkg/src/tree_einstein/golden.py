"""Reference tables for the short-spine census (canonical representatives).

``MAXIMAL_NEGATIVE[m]``  maximal parameters with negative top eigenvalue, 3 <= m <= 12.
``ZERO_EXCEPTIONS[m]``   zero-level caterpillars outside the (3,0,...,0,3) family.
``BOUNDARY[m]``          first nonnegative boundary, 3 <= m <= 12.
"""

from __future__ import annotations


def _rows(text: str) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(x) for x in item.split(",")) for item in text.split())


MAXIMAL_NEGATIVE: dict[int, tuple[tuple[int, ...], ...]] = {
    3: _rows("1,1,2 1,3,1 2,0,4 1,0,8"),
    4: _rows("1,0,2,1 1,1,0,2 1,0,0,5 2,0,0,4"),
    5: _rows("1,0,1,0,1 1,1,0,0,2 1,0,0,0,4 2,0,0,0,3"),
    6: _rows("1,0,0,1,0,1 1,1,0,0,0,2 1,0,0,0,0,4 2,0,0,0,0,3"),
    7: _rows("1,1,0,0,0,0,2 1,0,0,0,0,0,4 2,0,0,0,0,0,3"),
    8: _rows("1,1,0,0,0,0,0,2 2,0,0,0,0,0,0,3"),
    9: _rows("1,0,0,0,0,0,0,1,1 2,0,0,0,0,0,0,0,3"),
    10: _rows("1,0,0,0,0,0,0,0,1,1 2,0,0,0,0,0,0,0,0,3"),
    11: _rows("1,0,0,0,0,0,0,0,0,1,1 2,0,0,0,0,0,0,0,0,0,3"),
    12: _rows("2,0,0,0,0,0,0,0,0,0,0,3"),
}

ZERO_EXCEPTIONS: dict[int, tuple[tuple[int, ...], ...]] = {
    2: _rows("2,5"),
    3: _rows("1,4,1 1,0,9"),
    4: _rows("1,0,0,6"),
    5: _rows("2,0,0,0,4 1,0,0,0,5"),
    8: _rows("1,0,0,0,0,0,0,4"),
    9: _rows("1,1,0,0,0,0,0,0,2"),
    12: _rows("1,0,0,0,0,0,0,0,0,0,1,1"),
}

BOUNDARY: dict[int, tuple[tuple[int, ...], ...]] = {
    3: _rows("1,1,3 1,2,2 2,1,2 1,4,1 3,0,3 2,0,5 1,0,9"),
    4: _rows("1,0,1,2 1,1,1,1 1,0,3,1 1,1,0,3 1,2,0,2 3,0,0,3 1,0,0,6 2,0,0,5"),
    5: _rows(
        "1,0,0,1,2 1,0,0,2,1 1,0,1,0,2 1,0,1,1,1 1,0,2,0,1 1,1,0,1,1 1,1,0,0,3"
        " 1,0,0,0,5 2,0,0,0,4 3,0,0,0,3"
    ),
    6: _rows(
        "1,0,0,0,1,2 1,0,0,0,2,1 1,0,0,1,0,2 1,0,0,1,1,1 1,0,0,2,0,1 1,0,1,0,0,2"
        " 1,0,1,0,1,1 1,0,1,1,0,1 1,1,0,0,1,1 1,1,0,0,0,3 1,0,0,0,0,5 2,0,0,0,0,4"
        " 3,0,0,0,0,3"
    ),
    7: _rows(
        "1,0,0,0,1,0,1 1,0,0,1,0,0,1 1,0,0,0,0,1,2 1,0,0,0,0,2,1 1,1,0,0,0,1,1"
        " 1,1,0,0,0,0,3 1,0,0,0,0,0,5 2,0,0,0,0,0,4 3,0,0,0,0,0,3"
    ),
    8: _rows(
        "1,0,0,0,0,1,0,1 1,0,0,0,1,0,0,1 1,0,0,0,0,0,1,2 1,0,0,0,0,0,2,1"
        " 1,1,0,0,0,0,1,1 1,0,0,0,0,0,0,4 1,1,0,0,0,0,0,3 3,0,0,0,0,0,0,3"
    ),
    9: _rows(
        "1,0,0,0,0,0,1,0,1 1,0,0,0,0,1,0,0,1 1,0,0,0,1,0,0,0,1"
        " 1,0,0,0,0,0,0,1,2 1,0,0,0,0,0,0,2,1 1,1,0,0,0,0,0,0,2"
        " 1,1,0,0,0,0,0,1,1 1,0,0,0,0,0,0,0,4 3,0,0,0,0,0,0,0,3"
    ),
    10: _rows(
        "1,0,0,0,0,0,0,1,0,1 1,0,0,0,0,0,1,0,0,1 1,0,0,0,0,1,0,0,0,1"
        " 1,0,0,0,1,0,0,0,0,1 1,0,0,0,0,0,0,0,1,2 1,0,0,0,0,0,0,0,2,1"
        " 1,1,0,0,0,0,0,0,0,2 1,1,0,0,0,0,0,0,1,1 1,0,0,0,0,0,0,0,0,4"
        " 3,0,0,0,0,0,0,0,0,3"
    ),
    11: _rows(
        "1,0,0,0,0,0,0,0,1,0,1 1,0,0,0,0,0,0,1,0,0,1 1,0,0,0,0,0,1,0,0,0,1"
        " 1,0,0,0,0,1,0,0,0,0,1 1,0,0,0,1,0,0,0,0,0,1 1,0,0,0,0,0,0,0,0,1,2"
        " 1,0,0,0,0,0,0,0,0,2,1 1,1,0,0,0,0,0,0,0,0,2 1,1,0,0,0,0,0,0,0,1,1"
        " 1,0,0,0,0,0,0,0,0,0,4 3,0,0,0,0,0,0,0,0,0,3"
    ),
    12: _rows(
        "1,0,0,0,0,0,0,0,0,0,1,1 1,0,0,0,0,0,0,0,0,1,0,1"
        " 1,0,0,0,0,0,0,0,1,0,0,1 1,0,0,0,0,0,0,1,0,0,0,1"
        " 1,0,0,0,0,0,1,0,0,0,0,1 1,0,0,0,0,0,0,0,0,0,0,4"
        " 3,0,0,0,0,0,0,0,0,0,0,3"
    ),
}


def stable_zero(m: int) -> tuple[int, ...]:
    return (3,) + (0,) * (m - 2) + (3,)


def zero_parameters(m: int) -> set[tuple[int, ...]]:
    """All zero-level caterpillar parameters of spine order ``m >= 2``."""
    out = set(ZERO_EXCEPTIONS.get(m, ()))
    if m >= 2:
        out.add(stable_zero(m))
    return out
