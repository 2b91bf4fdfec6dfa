"""Highest weight vector data for principal and parabolic inductions.

Operations here take single-place vectors; multi-place weights are mapped
over places by the callers that need it. Characters of the real line are
reduced to (parity, exponent) pairs: parity is the sign-character power,
exponent the power of the absolute value.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    IndexOutOfRange,
    LengthMismatch,
    NonIntegral,
    NotDominant,
    NotScalarWeight,
    TailNotConstant,
)
from .scalars import as_scalar


@dataclass(frozen=True)
class CharacterDatum:
    parity: int
    exponent: Fraction

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise ValueError("parity must be 0 or 1")
        object.__setattr__(self, "exponent", as_scalar(self.exponent))


@dataclass(frozen=True)
class InductionDatum:
    n: int
    i: int
    character: CharacterDatum
    inner_weight: tuple


def _coerce_vector(lam):
    return tuple(as_scalar(x) for x in lam)


def _vector_dominant(lam) -> bool:
    return all(a - b >= 0 and (a - b).denominator == 1 for a, b in zip(lam, lam[1:]))


def _require_dominant_integral(lam):
    if any(x.denominator != 1 for x in lam):
        raise NonIntegral("entries must be integers")
    if not _vector_dominant(lam):
        raise NotDominant(f"not k-dominant: {lam}")


def principal_series_datum(lam):
    """Character list for the principal series containing the weight.

    Position k (1-based) carries the character attached to lambda_{n+1-k},
    with parity lambda_{n+1-k} mod 2 and exponent lambda_{n+1-k} - (n+1-k).
    """
    lam = _coerce_vector(lam)
    _require_dominant_integral(lam)
    n = len(lam)
    out = []
    for k in range(1, n + 1):
        entry = int(lam[n - k])
        out.append(CharacterDatum(entry % 2, Fraction(entry - (n + 1 - k))))
    return out


def klingen_embedding_datum(lam, i: int) -> InductionDatum:
    """Induction datum whose section space holds a highest weight vector.

    Requires the last i entries equal; the character exponent is
    lambda_n - n + (i-1)/2 and the inner weight is the first n-i entries.
    """
    lam = _coerce_vector(lam)
    n = len(lam)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    _require_dominant_integral(lam)
    tail = lam[n - i:]
    if any(t != tail[-1] for t in tail):
        raise TailNotConstant(f"last {i} entries differ: {tail}")
    bottom = int(lam[-1])
    character = CharacterDatum(bottom % 2, Fraction(bottom - n) + Fraction(i - 1, 2))
    return InductionDatum(n, i, character, lam[: n - i])


def klingen_embedding_inverse(n: int, i: int, mu: CharacterDatum, omega):
    """The unique weight candidate for given induction data, or None.

    Solves t = mu.exponent + n - (i-1)/2 and returns (omega, t, ..., t) when
    t is an integer of the right parity and the result is k-dominant.
    """
    omega = _coerce_vector(omega) if omega else ()
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    if len(omega) != n - i:
        raise LengthMismatch(f"inner weight must have length {n - i}")
    if not _vector_dominant(omega):
        raise NotDominant(f"inner weight not k-dominant: {omega}")
    t = mu.exponent + n - Fraction(i - 1, 2)
    if t.denominator != 1:
        return None
    if int(t) % 2 != mu.parity:
        return None
    lam = omega + (t,) * i
    if not _vector_dominant(lam):
        return None
    return lam


def siegel_degenerate_datum(lam) -> CharacterDatum:
    """Character of the degenerate series holding a scalar-weight vector."""
    lam = _coerce_vector(lam)
    _require_dominant_integral(lam)
    if any(x != lam[-1] for x in lam):
        raise NotScalarWeight(f"entries differ: {lam}")
    n = len(lam)
    bottom = int(lam[-1])
    return CharacterDatum(bottom % 2, Fraction(bottom) - Fraction(n + 1, 2))


def klingen_convergence(s, n: int, j: int) -> bool:
    """Absolute convergence range of the rank-j Eisenstein sum: s > n - (j-1)/2."""
    if not 1 <= j <= n:
        raise IndexOutOfRange(f"j must satisfy 1 <= j <= {n}, got {j}")
    return as_scalar(s) > Fraction(n) - Fraction(j - 1, 2)


def gl_degenerate_convergence(s, t, n: int) -> bool:
    """Degenerate series on the linear group converges for s - t > n/2."""
    return as_scalar(s) - as_scalar(t) > Fraction(n, 2)
