"""The Weyl group of type C_n as signed permutations.

Elements are pairs (perm, signs). The action convention is fixed once:

    act(w, x)_i = signs_i * x_{perm^{-1}(i)}

so signs apply after the permutation. The dot action shifts by rho.
Infinitesimal characters are encoded canonically as the sorted absolute
values of lambda + rho, one row per place.
"""

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product

from .errors import (
    HypothesisViolated,
    IndexOutOfRange,
    InvalidWeight,
    NonIntegral,
    NotDominant,
    RankMismatch,
    RankTooLarge,
    ShapeMismatch,
)
from .weights import Weight, is_integral, is_k_dominant, rho

DEFAULT_ORBIT_CAP = 8


def orbit_cap() -> int:
    """Active rank cap for orbit enumeration (SYMPL_ORBIT_CAP overrides)."""
    raw = os.environ.get("SYMPL_ORBIT_CAP")
    if raw is None:
        return DEFAULT_ORBIT_CAP
    cap = int(raw)
    if cap < 1:
        raise ValueError("SYMPL_ORBIT_CAP must be a positive integer")
    return cap


def _check_cap(n: int, cap) -> None:
    limit = orbit_cap() if cap is None else cap
    if n > limit:
        raise RankTooLarge(f"rank {n} exceeds the orbit cap {limit}")


@dataclass(frozen=True)
class WeylElement:
    """perm maps position to image on {1..n}; signs are +-1 per coordinate."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        perm = tuple(int(p) for p in self.perm)
        signs = tuple(int(s) for s in self.signs)
        n = len(perm)
        if n < 1 or sorted(perm) != list(range(1, n + 1)):
            raise InvalidWeight(f"not a permutation of 1..{n}: {perm}")
        if len(signs) != n or any(s not in (1, -1) for s in signs):
            raise InvalidWeight(f"signs must be +-1 vectors of length {n}: {signs}")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @property
    def n(self) -> int:
        return len(self.perm)


def identity(n: int) -> WeylElement:
    return WeylElement(tuple(range(1, n + 1)), (1,) * n)


def _perm_inverse(perm):
    inv = [0] * len(perm)
    for k, image in enumerate(perm):
        inv[image - 1] = k + 1
    return tuple(inv)


def inverse(w: WeylElement) -> WeylElement:
    inv_perm = _perm_inverse(w.perm)
    signs = tuple(w.signs[w.perm[k] - 1] for k in range(w.n))
    return WeylElement(inv_perm, signs)


def compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """Composition with act(compose(w1, w2), x) = act(w1, act(w2, x))."""
    if w1.n != w2.n:
        raise RankMismatch(f"ranks {w1.n} and {w2.n}")
    perm = tuple(w1.perm[w2.perm[k] - 1] for k in range(w1.n))
    inv1 = _perm_inverse(w1.perm)
    signs = tuple(w1.signs[i] * w2.signs[inv1[i] - 1] for i in range(w1.n))
    return WeylElement(perm, signs)


def act(w: WeylElement, x):
    if len(x) != w.n:
        raise RankMismatch(f"vector length {len(x)} vs rank {w.n}")
    inv = _perm_inverse(w.perm)
    return tuple(w.signs[i] * x[inv[i] - 1] for i in range(w.n))


def dot_act(w: WeylElement, lam, n: int):
    """The shifted action w(lambda + rho) - rho."""
    if len(lam) != n or w.n != n:
        raise RankMismatch(f"expected rank {n}")
    r = rho(n)
    moved = act(w, tuple(Fraction(a) + b for a, b in zip(lam, r)))
    return tuple(a - b for a, b in zip(moved, r))


def enumerate_weyl(n: int, cap=None):
    """All 2^n n! elements, lexicographic by (perm, signs)."""
    _check_cap(n, cap)
    out = []
    for perm in permutations(range(1, n + 1)):
        for signs in product((-1, 1), repeat=n):
            out.append(WeylElement(perm, signs))
    return out


@dataclass(frozen=True)
class InfChar:
    """Canonical form: per place, |lambda_v + rho| sorted weakly decreasing."""

    canonical: tuple

    @property
    def n(self) -> int:
        return len(self.canonical[0])

    @property
    def d(self) -> int:
        return len(self.canonical)


def _canonical_row(row, n):
    shifted = [Fraction(a) + b for a, b in zip(row, rho(n))]
    return tuple(sorted((abs(v) for v in shifted), reverse=True))


def infchar_canonical(w: Weight) -> InfChar:
    return InfChar(tuple(_canonical_row(row, w.n) for row in w.rows))


def infchar_equal(a: Weight, b: Weight) -> bool:
    if (a.n, a.d) != (b.n, b.d):
        raise ShapeMismatch(f"shapes ({a.d},{a.n}) and ({b.d},{b.n})")
    return infchar_canonical(a) == infchar_canonical(b)


def is_regular(w: Weight) -> bool:
    """Full orbit size, i.e. per place |lambda + rho| distinct and nonzero."""
    for row in w.rows:
        vals = _canonical_row(row, w.n)
        if any(v == 0 for v in vals) or len(set(vals)) != len(vals):
            return False
    return True


def _dominant_row_reps(row, n):
    """Dominant representatives sharing the row's infinitesimal character.

    mu is k-dominant iff mu + rho is strictly decreasing, so enumerate sign
    patterns on the multiset of |lambda + rho| and keep the strictly
    decreasing arrangements.
    """
    avals = sorted((abs(v) for v in (Fraction(a) + b for a, b in zip(row, rho(n)))), reverse=True)
    reps = set()
    for signs in product((1, -1), repeat=n):
        cand = tuple(sorted((s * a for s, a in zip(signs, avals)), reverse=True))
        if all(cand[t] > cand[t + 1] for t in range(n - 1)):
            reps.add(tuple(c - r for c, r in zip(cand, rho(n))))
    return sorted(reps, reverse=True)


def dominant_orbit_elements(w: Weight, cap=None):
    """All k-dominant weights with the same infinitesimal character."""
    _check_cap(w.n, cap)
    per_place = [_dominant_row_reps(row, w.n) for row in w.rows]
    return [Weight(rows) for rows in product(*per_place)]


def is_sufficiently_regular(w: Weight, i: int, cap=None) -> bool:
    """Some dominant representative has every bottom entry above 2n - i + 1."""
    n = w.n
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    _check_cap(n, cap)
    threshold = 2 * n - i + 1
    return all(
        any(rep[-1] > threshold for rep in _dominant_row_reps(row, n))
        for row in w.rows
    )


def orbit_dichotomy_check(w: Weight, cap=None) -> bool:
    """Every dominant orbit element is the weight itself or dips below zero.

    Testing utility for large-bottom dominant integral weights; a false
    return falsifies either the implementation or the dichotomy.
    """
    if not is_k_dominant(w):
        raise NotDominant("the dichotomy is stated for k-dominant weights")
    if not is_integral(w):
        raise NonIntegral("the dichotomy is stated for integral weights")
    bound = 2 * w.n
    if any(b <= bound for b in w.bottom_entries()):
        raise HypothesisViolated(f"needs every bottom entry > {bound}")
    for omega in dominant_orbit_elements(w, cap=cap):
        if omega == w:
            continue
        if not any(row[-1] < 0 for row in omega.rows):
            return False
    return True
