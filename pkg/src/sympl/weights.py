"""Weights for the rank-n symplectic group over a field with d real places.

A weight is a d x n matrix of exact rationals, one row per place, with
integral successive differences within each row. Entry denominators are
restricted to 1 or 2; that covers every statement in scope (integral
weights and the half-integral ones the unitarity tests need).
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    InvalidWeight,
    NonConstantBottomEntry,
    NonIntegral,
)
from .scalars import as_scalar, format_scalar


def _coerce_row(row):
    return tuple(as_scalar(x) for x in row)


@dataclass(frozen=True)
class Weight:
    """d rows (places) of n entries each, weakly structured by the lattice rule."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(_coerce_row(r) for r in self.rows)
        if not rows:
            raise InvalidWeight("a weight needs at least one place")
        n = len(rows[0])
        if n < 1:
            raise InvalidWeight("a weight needs at least one entry per place")
        for row in rows:
            if len(row) != n:
                raise InvalidWeight("all places must have the same rank")
            for x in row:
                if x.denominator not in (1, 2):
                    raise InvalidWeight(f"entry {x} has denominator {x.denominator}, only 1 or 2 allowed")
            for a, b in zip(row, row[1:]):
                if (a - b).denominator != 1:
                    raise InvalidWeight(f"difference {a} - {b} is not an integer")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, *rows):
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def single(cls, row):
        """Weight with one place (d = 1)."""
        return cls((tuple(row),))

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def d(self) -> int:
        return len(self.rows)

    def row(self, v: int):
        return self.rows[v]

    def bottom_entries(self):
        """The entries lambda_{n,v}, one per place."""
        return tuple(row[-1] for row in self.rows)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.rows for x in row)

    def __str__(self):
        return format_weight(self)


class VanishingVerdict(Enum):
    NEARLY_HOLOMORPHIC_SPACE_VANISHES = "NearlyHolomorphicSpaceVanishes"
    HOLOMORPHIC_ZERO_OR_CONSTANT = "HolomorphicZeroOrConstant"
    NO_CONCLUSION = "NoConclusion"


def rho(n: int):
    """The shift vector (-1, -2, ..., -n), half the sum of the positive roots."""
    if n < 1:
        raise InvalidWeight("rank must be at least 1")
    return tuple(Fraction(-i) for i in range(1, n + 1))


def _row_dominant(row) -> bool:
    return all(a - b >= 0 and (a - b).denominator == 1 for a, b in zip(row, row[1:]))


def is_k_dominant(w: Weight) -> bool:
    """True iff per place all successive differences are non-negative integers."""
    return all(_row_dominant(row) for row in w.rows)


def is_integral(w: Weight) -> bool:
    """True iff every entry is an integer."""
    return all(x.denominator == 1 for row in w.rows for x in row)


def parity_class(w: Weight) -> int:
    """(-1)**lambda_n, defined when the bottom entry is one integer across places."""
    if not is_integral(w):
        raise NonIntegral("parity class needs an integral weight")
    bottoms = set(w.bottom_entries())
    if len(bottoms) != 1:
        raise NonConstantBottomEntry(f"bottom entries differ across places: {sorted(bottoms)}")
    return -1 if int(bottoms.pop()) % 2 else 1


def holomorphy_vanishing(w: Weight) -> VanishingVerdict:
    """Vanishing verdict for the spaces attached to a k-dominant integral weight.

    Rank one with the zero weight falls through to the zero-or-constant
    branch; the stronger statement assumes n > 1.
    """
    bottoms = w.bottom_entries()
    if w.n > 1 and not w.is_zero() and any(b == 0 for b in bottoms):
        return VanishingVerdict.NEARLY_HOLOMORPHIC_SPACE_VANISHES
    if any(b <= 0 for b in bottoms):
        return VanishingVerdict.HOLOMORPHIC_ZERO_OR_CONSTANT
    return VanishingVerdict.NO_CONCLUSION


def parse_weight(text: str) -> Weight:
    """Parse "5,3;5,4" (rows by ';', entries by ',', halves as "a/2")."""
    rows = []
    for part in text.strip().split(";"):
        entries = [e for e in part.split(",")]
        if not part.strip():
            raise ValueError("empty weight row")
        rows.append(tuple(as_scalar(e) for e in entries))
    return Weight(tuple(rows))


def format_weight(w: Weight) -> str:
    return ";".join(",".join(format_scalar(x) for x in row) for row in w.rows)
