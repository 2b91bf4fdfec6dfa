"""Sparse multivariate Laurent polynomials over the rationals.

Terms are kept in a dict from integer exponent vectors (negatives allowed)
to nonzero Fraction coefficients. The representation is canonical: the
generator tuple is sorted, generators that appear in no term are dropped,
and zero coefficients are never stored, so equality is structural.
"""

import re
from fractions import Fraction

from .errors import MissingAssignment, PoleAtPoint
from .scalars import as_scalar, format_scalar

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<num>\d+(?:/\d+)?)|(?P<op>[-+*^]))")


class LaurentPoly:
    __slots__ = ("gens", "terms")

    def __init__(self, gens=(), terms=None):
        gens = tuple(gens)
        raw = {} if terms is None else terms
        cleaned = {}
        for exps, coeff in raw.items():
            coeff = as_scalar(coeff)
            if coeff == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(gens):
                raise ValueError("exponent vector length does not match generators")
            cleaned[exps] = cleaned.get(exps, Fraction(0)) + coeff
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        used = [k for k in range(len(gens)) if any(e[k] != 0 for e in cleaned)]
        order = sorted(used, key=lambda k: gens[k])
        object.__setattr__(self, "gens", tuple(gens[k] for k in order))
        object.__setattr__(
            self, "terms", {tuple(e[k] for k in order): c for e, c in cleaned.items()}
        )

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def zero(cls):
        return cls((), {})

    @classmethod
    def one(cls):
        return cls.constant(1)

    @classmethod
    def constant(cls, c):
        return cls((), {(): as_scalar(c)})

    @classmethod
    def generator(cls, name):
        return cls((name,), {(1,): Fraction(1)})

    @classmethod
    def monomial(cls, coeff, exps=None):
        exps = dict(exps or {})
        gens = tuple(exps)
        return cls(gens, {tuple(exps[g] for g in gens): as_scalar(coeff)})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(): Fraction(1)}

    def is_constant(self):
        return not self.gens

    def constant_value(self):
        if self.gens:
            raise ValueError("not a constant polynomial")
        return self.terms.get((), Fraction(0))

    def key(self):
        """Hashable canonical key, used for factor multiset bookkeeping."""
        return (self.gens, tuple(sorted(self.terms.items())))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    @staticmethod
    def _coerce(x):
        if isinstance(x, LaurentPoly):
            return x
        return LaurentPoly.constant(as_scalar(x))

    def _aligned(self, other):
        gens = tuple(sorted(set(self.gens) | set(other.gens)))

        def remap(poly):
            idx = [poly.gens.index(g) if g in poly.gens else None for g in gens]
            return {
                tuple(0 if k is None else e[k] for k in idx): c
                for e, c in poly.terms.items()
            }

        return gens, remap(self), remap(other)

    def __add__(self, other):
        other = self._coerce(other)
        gens, a, b = self._aligned(other)
        out = dict(a)
        for e, c in b.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(gens, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        gens, a, b = self._aligned(other)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = out.get(e, Fraction(0)) + ca * cb
        return LaurentPoly(gens, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            raise ValueError("negative powers are not defined for polynomials")
        result = LaurentPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def degree(self, name) -> int:
        """Largest exponent of the named generator (0 if it never appears)."""
        if name not in self.gens or not self.terms:
            return 0
        k = self.gens.index(name)
        return max(e[k] for e in self.terms)

    def evaluate(self, assignment) -> Fraction:
        values = []
        for g in self.gens:
            if g not in assignment:
                raise MissingAssignment(f"no value for {g}")
            values.append(as_scalar(assignment[g]))
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            term = coeff
            for v, e in zip(values, exps):
                if v == 0 and e < 0:
                    raise PoleAtPoint(f"negative power of 0 in {self}")
                term *= v ** e
            total += term
        return total

    def _term_str(self, exps, coeff):
        parts = []
        for g, e in zip(self.gens, exps):
            if e == 0:
                continue
            parts.append(g if e == 1 else f"{g}^{e}")
        mono = "*".join(parts)
        if not mono:
            return format_scalar(coeff)
        if coeff == 1:
            return mono
        if coeff == -1:
            return f"-{mono}"
        return f"{format_scalar(coeff)}*{mono}"

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        # constant first, then monomials lexicographically descending,
        # which renders the L-factor binomials as "1 - (monomial)"
        order = sorted(
            self.terms, key=lambda e: (any(x != 0 for x in e), tuple(-x for x in e))
        )
        for exps in order:
            rendered = self._term_str(exps, self.terms[exps])
            if not chunks:
                chunks.append(rendered)
            elif rendered.startswith("-"):
                chunks.append(f" - {rendered[1:]}")
            else:
                chunks.append(f" + {rendered}")
        return "".join(chunks)

    def __repr__(self):
        return f"LaurentPoly({self})"

    @classmethod
    def parse(cls, text):
        """Parse sums of products like "x_1_1^2*x_1_2 - 3/2*x_2_2 + 1"."""
        tokens = []
        pos = 0
        while pos < len(text):
            if text[pos:].strip() == "":
                break
            m = _TOKEN.match(text, pos)
            if not m:
                raise ValueError(f"cannot read polynomial at: {text[pos:]!r}")
            pos = m.end()
            if m.lastgroup == "name":
                tokens.append(("name", m.group("name")))
            elif m.lastgroup == "num":
                tokens.append(("num", m.group("num")))
            else:
                tokens.append(("op", m.group("op")))
        cursor = 0

        def peek():
            return tokens[cursor] if cursor < len(tokens) else (None, None)

        def take():
            nonlocal cursor
            tok = peek()
            cursor += 1
            return tok

        def parse_factor():
            kind, value = take()
            if kind == "num":
                return cls.constant(Fraction(value))
            if kind == "name":
                exp = 1
                if peek() == ("op", "^"):
                    take()
                    sign = 1
                    if peek() == ("op", "-"):
                        take()
                        sign = -1
                    ekind, evalue = take()
                    if ekind != "num" or "/" in evalue:
                        raise ValueError("exponent must be an integer")
                    exp = sign * int(evalue)
                return cls.monomial(1, {value: exp})
            raise ValueError(f"unexpected token {value!r} in polynomial")

        def parse_term():
            result = parse_factor()
            while peek() == ("op", "*"):
                take()
                result = result * parse_factor()
            return result

        total = cls.zero()
        sign = 1
        if peek()[0] == "op" and peek()[1] in "+-":
            sign = -1 if take()[1] == "-" else 1
        if peek() == (None, None):
            raise ValueError("empty polynomial")
        total = total + sign * parse_term()
        while peek() != (None, None):
            kind, value = take()
            if kind != "op" or value not in "+-":
                raise ValueError(f"expected + or - before {value!r}")
            sign = -1 if value == "-" else 1
            total = total + sign * parse_term()
        return total
