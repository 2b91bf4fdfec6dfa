"""First reduction point and unitarizability of highest weight modules.

A k-dominant half-integral vector lambda is normalized by the scalar shift
r = n - lambda_n to a base vector with bottom entry n; the counts
p = #{entries = n} and q = #{entries = n+1} of the base drive both tests.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import BottomEntryNotRank, NotDominant, NotHalfIntegral
from .scalars import as_scalar


@dataclass(frozen=True)
class EhwProfile:
    base: tuple
    p: int
    q: int
    r: Fraction


def _coerce_dominant_half_integral(lam):
    lam = tuple(as_scalar(x) for x in lam)
    if any(x.denominator not in (1, 2) for x in lam):
        raise NotHalfIntegral(f"entries must lie in (1/2)Z: {lam}")
    if not all(a - b >= 0 and (a - b).denominator == 1 for a, b in zip(lam, lam[1:])):
        raise NotDominant(f"not k-dominant: {lam}")
    return lam


def ehw_normalize(lam) -> EhwProfile:
    lam = _coerce_dominant_half_integral(lam)
    n = len(lam)
    r = Fraction(n) - lam[-1]
    base = tuple(x + r for x in lam)
    p = sum(1 for x in base if x == n)
    q = sum(1 for x in base if x == n + 1)
    return EhwProfile(base, p, q, r)


def first_reduction_point(base) -> Fraction:
    """(p + q + 1)/2 for a base vector with bottom entry equal to the rank."""
    base = _coerce_dominant_half_integral(base)
    n = len(base)
    if base[-1] != n:
        raise BottomEntryNotRank(f"bottom entry {base[-1]} must equal the rank {n}")
    p = sum(1 for x in base if x == n)
    q = sum(1 for x in base if x == n + 1)
    return Fraction(p + q + 1, 2)


def _second_unitarity_bound(p: int, q: int) -> Fraction:
    # Reading fixed here on purpose: p + q/2, not (p + q)/2. The zero weight
    # normalizes to r = n with p = n, q = 0 and must pass, which the other
    # precedence fails already at n = 2.
    return Fraction(p) + Fraction(q, 2)


def is_unitary_highest_weight(lam) -> bool:
    """Unitarity test: r <= (p+q+1)/2, or half-integral lambda with r <= p + q/2."""
    profile = ehw_normalize(lam)
    if profile.r <= Fraction(profile.p + profile.q + 1, 2):
        return True
    return profile.r <= _second_unitarity_bound(profile.p, profile.q)
