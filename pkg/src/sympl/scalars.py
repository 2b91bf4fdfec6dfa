"""Exact scalar helpers.

All arithmetic in the library is exact rational arithmetic on
fractions.Fraction. Floats are rejected at every entry point.
"""

from fractions import Fraction


def as_scalar(x) -> Fraction:
    """Coerce an int, Fraction or "p/q" string to a Fraction. No floats."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def format_scalar(x: Fraction) -> str:
    """Render exactly, "p" for integers and "p/q" otherwise."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_integer(x) -> bool:
    return Fraction(x).denominator == 1


def is_half_integral(x) -> bool:
    """True iff 2x is an integer."""
    return Fraction(x).denominator in (1, 2)
