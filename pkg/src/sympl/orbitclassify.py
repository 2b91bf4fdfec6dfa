"""Induction-level classification, decomposition reports, surjectivity.

Three layers of bookkeeping on top of the Weyl-orbit machinery: grouping
induction points s by the dot orbit of their Harish-Chandra parameter,
structured hypothesis reports for the isotypic decomposition along a
Klingen parabolic, and the square-free-level surjectivity criterion for
the Siegel operator.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .errors import (
    IndexOutOfRange,
    LengthMismatch,
    NonIntegral,
    NotDominant,
    RankOne,
)
from .scalars import as_scalar, is_integer
from .weights import Weight, is_integral, is_k_dominant, rho
from .weyl import dominant_orbit_elements, is_sufficiently_regular

HYPOTHESIS_NAMES = (
    "k_dominant_integral",
    "tail_constant_per_place",
    "bottom_entry_uniform",
    "sufficiently_regular",
    "inner_weight_bound",
)

SURJECTIVITY_CONDITIONS = (
    "level_squarefree",
    "bottom_entry_bound",
    "bottom_entry_uniform",
    "weight_alternative",
)

CUSPIDAL_DATUM_ASSUMPTION = (
    "assumes a cuspidal datum whose archimedean components realize the "
    "listed inner weights; existence of that datum is not verified here"
)


def _canon(vec):
    return tuple(sorted((abs(v) for v in vec), reverse=True))


def hc_parameter(inner, s, n, i):
    """The parameter rho + (inner_1, ..., inner_{n-i}, s, ..., s)."""
    n = int(n)
    i = int(i)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    inner = tuple(as_scalar(v) for v in inner)
    if len(inner) != n - i:
        raise LengthMismatch(f"inner weight must have {n - i} entries, got {len(inner)}")
    s = as_scalar(s)
    full = inner + (s,) * i
    return tuple(a + b for a, b in zip(full, rho(n)))


def _validated_inner(inner, n, i):
    n = int(n)
    i = int(i)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    inner = tuple(as_scalar(v) for v in inner)
    if len(inner) != n - i:
        raise LengthMismatch(f"inner weight must have {n - i} entries, got {len(inner)}")
    if i < n:
        if not all(is_integer(v) for v in inner):
            raise NonIntegral(f"inner weight {inner} has non-integer entries")
        if any(inner[t] < inner[t + 1] for t in range(len(inner) - 1)):
            raise NotDominant(f"inner weight {inner} is not weakly decreasing")
        if inner[-1] < 0:
            raise NotDominant(f"inner weight {inner} has negative bottom entry")
    return tuple(int(v) for v in inner) if i < n else inner


@dataclass(frozen=True)
class OrbitClassification:
    n: int
    i: int
    inner: tuple
    x_max: int
    classes: tuple
    y: tuple
    bijective: bool

    @property
    def x(self):
        return tuple(range(self.x_max + 1))


def classify_levels(inner, n, i, x_max=None):
    """Partition the levels {0..x_max} by equality of induced orbits.

    For i < n the range ends at the bottom inner entry and x_max must be
    left unset. The i = n case has no inner entry to read the bound off,
    so there an explicit x_max is required instead.
    """
    inner = _validated_inner(inner, n, i)
    n = int(n)
    i = int(i)
    if i == n:
        if x_max is None:
            raise ValueError("x_max is required when i = n")
        x_max = int(x_max)
        if x_max < 0:
            raise ValueError("x_max must be nonnegative")
    else:
        if x_max is not None:
            raise ValueError("x_max is only accepted when i = n")
        x_max = int(inner[-1])

    seen = {}
    classes = []
    for x in range(x_max + 1):
        key = _canon(hc_parameter(inner, x, n, i))
        if key in seen:
            classes[seen[key]].append(x)
        else:
            seen[key] = len(classes)
            classes.append([x])

    low = Fraction(2 * n - i + 1, 2)
    y = tuple(x for x in range(x_max + 1) if x <= low or x >= 2 * n - i + 2)
    yset = set(y)
    bijective = all(sum(1 for x in cls if x in yset) == 1 for cls in classes)
    return OrbitClassification(
        n=n,
        i=i,
        inner=inner,
        x_max=x_max,
        classes=tuple(tuple(cls) for cls in classes),
        y=y,
        bijective=bijective,
    )


def duality_check(inner, n, i, s) -> bool:
    """Levels s and 2n-i+1-s induce the same infinitesimal character."""
    inner = _validated_inner(inner, n, i)
    n = int(n)
    i = int(i)
    s = as_scalar(s)
    dual = 2 * n - i + 1 - s
    return _canon(hc_parameter(inner, s, n, i)) == _canon(hc_parameter(inner, dual, n, i))


def theorem_main_necessary(w: Weight, i, cap=None):
    """Dominant orbit elements passing the tail and bottom-entry filters.

    An empty result certifies that no highest weight vector along the
    index-i parabolic shares this infinitesimal character.
    """
    n = w.n
    i = int(i)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    if not is_integral(w):
        raise NonIntegral(f"{w} has non-integer entries")
    survivors = []
    for omega in dominant_orbit_elements(w, cap):
        tails_ok = all(
            all(row[t] == row[-1] for t in range(n - i, n)) for row in omega.rows
        )
        bottoms = {row[-1] for row in omega.rows}
        if tails_ok and len(bottoms) == 1:
            survivors.append(omega)
    return survivors


@dataclass(frozen=True)
class DecompositionReport:
    n: int
    d: int
    i: int
    weight: Weight
    hypotheses: tuple
    parity_class: object
    exponent: object
    inner_weight: object
    conclusion: str
    assumption: str

    def passed(self, name) -> bool:
        for label, ok in self.hypotheses:
            if label == name:
                return ok
        raise KeyError(name)


def decomposition_report(w: Weight, i, character_parity=None):
    """Evaluate the decomposition hypotheses and describe the outcome.

    The report is descriptive data, not a proof object. When a character
    parity (+1 or -1) is supplied and disagrees with (-1)^(bottom entry),
    the space it would contribute to is zero and the conclusion says so.
    """
    n = w.n
    i = int(i)
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"i must satisfy 1 <= i <= {n}, got {i}")
    if character_parity is not None and character_parity not in (1, -1):
        raise ValueError("character parity must be +1 or -1")

    checks = {
        "k_dominant_integral": is_k_dominant(w) and is_integral(w),
        "tail_constant_per_place": all(
            all(row[t] == row[-1] for t in range(n - i, n)) for row in w.rows
        ),
        "bottom_entry_uniform": len({row[-1] for row in w.rows}) == 1,
        "sufficiently_regular": is_sufficiently_regular(w, i),
        "inner_weight_bound": i == n
        or all(row[n - i - 1] > 2 * n - i + 1 for row in w.rows),
    }
    hypotheses = tuple((name, bool(checks[name])) for name in HYPOTHESIS_NAMES)

    if not all(ok for _, ok in hypotheses):
        return DecompositionReport(
            n=n,
            d=w.d,
            i=i,
            weight=w,
            hypotheses=hypotheses,
            parity_class=None,
            exponent=None,
            inner_weight=None,
            conclusion="HypothesesFail",
            assumption=CUSPIDAL_DATUM_ASSUMPTION,
        )

    bottom = w.rows[0][-1]
    parity_class = 1 if bottom % 2 == 0 else -1
    exponent = bottom - n + Fraction(i - 1, 2)
    inner_weight = tuple(tuple(row[: n - i]) for row in w.rows)
    conclusion = "IsotypicDescription"
    if character_parity is not None and character_parity != parity_class:
        conclusion = "VanishesWrongParity"
    return DecompositionReport(
        n=n,
        d=w.d,
        i=i,
        weight=w,
        hypotheses=hypotheses,
        parity_class=parity_class,
        exponent=exponent,
        inner_weight=inner_weight,
        conclusion=conclusion,
        assumption=CUSPIDAL_DATUM_ASSUMPTION,
    )


@dataclass(frozen=True)
class SurjectivityVerdict:
    tag: str
    failed_conditions: tuple

    def __bool__(self):
        return self.tag == "SurjectiveByTheorem"


def is_squarefree(n: int) -> bool:
    n = int(n)
    if n < 1:
        raise ValueError("need a positive integer")
    d = 2
    while d * d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        d += 1
    # remaining cofactor is 1, p, p*q, or p^2 with p, q above the cube root
    return n == 1 or isqrt(n) ** 2 != n


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def level_from_primes(primes):
    """Product of the listed primes; they must be distinct and prime."""
    primes = [int(p) for p in primes]
    if len(set(primes)) != len(primes):
        raise ValueError("prime factors must be distinct")
    level = 1
    for p in primes:
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        level *= p
    return level


def siegel_surjectivity_check(w: Weight, level) -> SurjectivityVerdict:
    """Check the square-free-level sufficient conditions for surjectivity."""
    n = w.n
    if n == 1:
        raise RankOne("the criterion needs rank at least 2")
    if not is_integral(w):
        raise NonIntegral(f"{w} has non-integer entries")
    if not is_k_dominant(w):
        raise NotDominant(f"{w} is not dominant")
    level = int(level)
    if level < 1:
        raise ValueError("level must be a positive integer")

    bottoms = [row[-1] for row in w.rows]
    nexts = [row[-2] for row in w.rows]
    failed = []
    if not is_squarefree(level):
        failed.append("level_squarefree")
    if not all(b > 2 * n for b in bottoms):
        failed.append("bottom_entry_bound")
    if len(set(bottoms)) != 1:
        failed.append("bottom_entry_uniform")
    tail_equal_everywhere = all(a == b for a, b in zip(nexts, bottoms))
    next_row_varies = len(set(nexts)) > 1
    if not (tail_equal_everywhere or next_row_varies):
        failed.append("weight_alternative")
    tag = "SurjectiveByTheorem" if not failed else "NotCovered"
    return SurjectivityVerdict(tag=tag, failed_conditions=tuple(failed))
