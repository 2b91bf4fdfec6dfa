"""Tests for Laurent polynomials and local L-factor products."""

import random
from collections import Counter
from fractions import Fraction

import pytest

from sympl.errors import (
    IndexOutOfRange,
    MissingAssignment,
    NotHalfIntegral,
    PoleAtPoint,
)
from sympl.laurent import LaurentPoly
from sympl.lfactors import (
    RationalFunction,
    SatakeDatum,
    abelian_L,
    evaluate,
    gk_value,
    standard_L,
    xi,
)

P = LaurentPoly.parse


def random_poly(rng, gens=("Q", "T", "X")):
    p = LaurentPoly.zero()
    for _ in range(rng.randint(1, 4)):
        exps = {g: rng.randint(-3, 3) for g in gens if rng.random() < 0.7}
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        p = p + LaurentPoly.monomial(coeff, exps)
    return p


def test_poly_constructors():
    assert LaurentPoly.zero().is_zero()
    assert LaurentPoly.one().is_one()
    assert LaurentPoly.constant(Fraction(3, 2)).constant_value() == Fraction(3, 2)
    q = LaurentPoly.generator("Q")
    assert q.terms == {(1,): Fraction(1)}
    m = LaurentPoly.monomial(Fraction(-1, 2), {"T": 2, "Q": -1})
    assert m.gens == ("Q", "T")
    assert m.terms == {(-1, 2): Fraction(-1, 2)}


def test_poly_canonical_representation():
    # generator order does not matter
    a = LaurentPoly(("T", "Q"), {(1, 2): 1})
    b = LaurentPoly(("Q", "T"), {(2, 1): 1})
    assert a == b
    assert hash(a) == hash(b)
    # unused generators are dropped
    c = LaurentPoly(("Q", "T"), {(0, 1): 1})
    assert c.gens == ("T",)
    # zero coefficients are dropped
    assert LaurentPoly(("Q",), {(1,): 0}) == LaurentPoly.zero()
    # mismatched exponent vector length is rejected
    with pytest.raises(ValueError):
        LaurentPoly(("Q",), {(1, 2): 1})


def test_poly_ring_axioms():
    rng = random.Random(71)
    zero = LaurentPoly.zero()
    one = LaurentPoly.one()
    for _ in range(220):
        a = random_poly(rng)
        b = random_poly(rng)
        c = random_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert a + zero == a
        assert a * one == a
        assert a - a == zero


def test_poly_evaluate_is_multiplicative():
    rng = random.Random(72)
    values = [Fraction(1), Fraction(2), Fraction(-1), Fraction(1, 2), Fraction(3, 2)]
    for _ in range(60):
        a = random_poly(rng)
        b = random_poly(rng)
        pt = {g: rng.choice(values) for g in ("Q", "T", "X")}
        assert (a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt)
        assert (a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt)


def test_poly_difference_of_squares():
    x = LaurentPoly.generator("X")
    t = LaurentPoly.generator("T")
    assert (1 - x * t) * (1 + x * t) == 1 - x ** 2 * t ** 2


def test_poly_pow():
    p = P("1 + Q*T")
    assert p ** 0 == LaurentPoly.one()
    assert p ** 3 == p * p * p
    with pytest.raises(ValueError):
        p ** -1


def test_poly_degree():
    p = P("Q^3*T - Q*T^2 + 4")
    assert p.degree("Q") == 3
    assert p.degree("T") == 2
    assert p.degree("X") == 0
    assert LaurentPoly.zero().degree("Q") == 0
    # Laurent degree can be negative when only negative powers appear
    assert P("Q^-2").degree("Q") == -2


def test_poly_evaluate_errors():
    p = P("Q + T")
    with pytest.raises(MissingAssignment):
        p.evaluate({"Q": 1})
    with pytest.raises(PoleAtPoint):
        P("Q^-1").evaluate({"Q": 0})
    assert P("Q^-1").evaluate({"Q": Fraction(1, 2)}) == 2


def test_poly_str_exact():
    assert str(LaurentPoly.zero()) == "0"
    assert str(LaurentPoly.one()) == "1"
    assert str(P("1 - Q^-2*T*X")) == "1 - Q^-2*T*X"
    assert str(P("T*X - 1")) == "-1 + T*X"
    assert str(P("3/2*Q^2 + 1")) == "1 + 3/2*Q^2"


def test_poly_parse_round_trip():
    rng = random.Random(73)
    for _ in range(150):
        p = random_poly(rng)
        assert LaurentPoly.parse(str(p)) == p


def test_poly_parse_errors():
    with pytest.raises(ValueError):
        LaurentPoly.parse("")
    with pytest.raises(ValueError):
        LaurentPoly.parse("x^1/2")
    with pytest.raises(ValueError):
        LaurentPoly.parse("x**2")
    with pytest.raises(ValueError):
        LaurentPoly.parse("2^3")
    with pytest.raises(ValueError):
        LaurentPoly.parse("1 ~ 2")


def test_rational_function_basics():
    one = RationalFunction.one()
    assert str(one) == "1"
    f = P("1 - T*X")
    g = P("1 - Q*T")
    r = RationalFunction((f,), (g,))
    assert str(r) == "(1 - T*X) / (1 - Q*T)"
    assert str(RationalFunction((f, g), (f,))) == "(1 - T*X)*(1 - Q*T) / (1 - T*X)"
    assert r.reciprocal() == RationalFunction((g,), (f,))
    assert r * r.reciprocal() == one
    assert r / r == one
    assert RationalFunction.from_poly(f).numerator() == f
    assert (r * r).numerator() == f * f
    assert (r * r).denominator() == g * g


def test_rational_function_cancelled():
    f = P("1 - T*X")
    g = P("1 - Q*T")
    r = RationalFunction((f, g), (f,)).cancelled()
    assert r.num_factors == (g,)
    assert r.den_factors == ()


def test_rational_function_equality_expands():
    # equal after cross multiplication even when no factor keys match
    lhs = RationalFunction((P("1 - T^2*X^2"),), (P("1 - T*X"),))
    rhs = RationalFunction.from_poly(P("1 + T*X"))
    assert lhs == rhs
    assert not lhs == RationalFunction.from_poly(P("1 - T*X"))


def test_rational_function_guards():
    with pytest.raises(ZeroDivisionError):
        RationalFunction((), (LaurentPoly.zero(),))
    with pytest.raises(TypeError):
        RationalFunction(("1 - T",), ())
    with pytest.raises(TypeError):
        hash(RationalFunction.one())


def test_satake_datum_validation():
    d = SatakeDatum.symbolic(2)
    assert d.params == ("b1", "b2")
    assert d.m == 2
    assert d.character == "X"
    assert SatakeDatum((Fraction(2), "a")).params == (Fraction(2), "a")
    with pytest.raises(ValueError):
        SatakeDatum(("Q",))
    with pytest.raises(ValueError):
        SatakeDatum(("b1", "b1"))
    with pytest.raises(ValueError):
        SatakeDatum((0,))
    with pytest.raises(ValueError):
        SatakeDatum((), character="Y")
    with pytest.raises(ValueError):
        SatakeDatum((), character=0)
    with pytest.raises(ValueError):
        SatakeDatum.symbolic(-1)


def test_abelian_examples():
    assert abelian_L(0).den_factors == (P("1 - T*X"),)
    assert abelian_L(1).den_factors == (P("1 - Q^-2*T*X"),)
    assert abelian_L(Fraction(-1, 2)).den_factors == (P("1 - Q*T*X"),)
    assert abelian_L(0, twist_power=2).den_factors == (P("1 - T^2*X^2"),)
    assert abelian_L(0).num_factors == ()
    with pytest.raises(NotHalfIntegral):
        abelian_L(Fraction(1, 3))
    with pytest.raises(ValueError):
        abelian_L(0, twist_power=0)


def test_abelian_numeric_character():
    # a concrete character value folds into the coefficient
    assert abelian_L(0, character=Fraction(3)).den_factors == (P("1 - 3*T"),)
    assert abelian_L(1, character=Fraction(1, 2)).den_factors == (
        P("1 - 1/2*Q^-2*T"),
    )


def test_standard_factor_counts_and_order():
    assert len(standard_L(0, SatakeDatum()).den_factors) == 1
    assert len(standard_L(0, SatakeDatum.symbolic(1)).den_factors) == 3
    assert len(standard_L(0, SatakeDatum.symbolic(2)).den_factors) == 5
    fs = standard_L(0, SatakeDatum.symbolic(1)).den_factors
    assert fs[0] == P("1 - T*X")
    assert fs[1] == P("1 - T*X*b1")
    assert fs[2] == P("1 - T*X*b1^-1")
    with pytest.raises(NotHalfIntegral):
        standard_L(Fraction(1, 3), SatakeDatum())


def test_standard_numeric_params():
    fs = standard_L(0, SatakeDatum((Fraction(2),))).den_factors
    assert P("1 - 2*T*X") in fs
    assert P("1 - 1/2*T*X") in fs


def one_minus(exps):
    cleaned = {}
    for g, e in exps.items():
        assert e == int(e)
        if e != 0:
            cleaned[g] = int(e)
    return LaurentPoly.one() + LaurentPoly.monomial(-1, cleaned)


def oracle_xi_keys(i, m, shift):
    """Factor multiset of the normalizing product, built from scratch."""
    shift = Fraction(shift)
    keys = []
    for level in range(1, i + 1):
        c = shift + Fraction(2 * level - i - 1, 2)
        base = {"X": 1, "Q": -2 * c, "T": 1}
        keys.append(one_minus(base).key())
        for k in range(1, m + 1):
            keys.append(one_minus({**base, f"b{k}": 1}).key())
            keys.append(one_minus({**base, f"b{k}": -1}).key())
    for p in range(1, i + 1):
        for q in range(p + 1, i + 1):
            c = 2 * shift - i - 1 + p + q
            keys.append(one_minus({"X": 2, "Q": -2 * c, "T": 2}).key())
    return Counter(keys)


def test_xi_small_cases():
    s = SatakeDatum.symbolic(1)
    assert xi(0, s) == RationalFunction.one()
    assert xi(1, s, shift=Fraction(1, 2)).den_factors == standard_L(
        Fraction(1, 2), s
    ).den_factors
    assert len(xi(2, s).den_factors) == 7
    with pytest.raises(IndexOutOfRange):
        xi(-1, s)


def test_xi_matches_independent_construction():
    for m in range(3):
        s = SatakeDatum.symbolic(m)
        for i in range(4):
            for shift in (0, Fraction(1, 2), -1):
                got = xi(i, s, shift=shift)
                assert got.num_factors == ()
                keys = Counter(f.key() for f in got.den_factors)
                assert keys == oracle_xi_keys(i, m, shift)


def test_parameter_inversion_symmetry():
    # the standard factor list is stable under b_k -> 1/b_k
    def flip(poly):
        flipped = {}
        for exps, coeff in poly.terms.items():
            new = tuple(
                -e if g.startswith("b") else e for g, e in zip(poly.gens, exps)
            )
            flipped[new] = coeff
        return LaurentPoly(poly.gens, flipped)

    for source in (standard_L(0, SatakeDatum.symbolic(2)), xi(2, SatakeDatum.symbolic(2))):
        keys = Counter(f.key() for f in source.den_factors)
        assert Counter(flip(f).key() for f in source.den_factors) == keys
    assert standard_L(0, SatakeDatum((Fraction(3),))) == standard_L(
        0, SatakeDatum((Fraction(1, 3),))
    )


def test_gk_small_values():
    s = SatakeDatum()
    assert gk_value(3, 0, s) == RationalFunction.one()
    g11 = gk_value(1, 1, s)
    assert g11 == RationalFunction((P("1 - Q^-2*T*X"),), (P("1 - T*X"),))
    assert str(g11) == "(1 - Q^-2*T*X) / (1 - T*X)"
    # xi_1 at shifts 1/2 and 3/2
    g21 = gk_value(2, 1, s)
    assert g21 == RationalFunction((P("1 - Q^-3*T*X"),), (P("1 - Q^-1*T*X"),))
    with pytest.raises(IndexOutOfRange):
        gk_value(1, 2, s)
    with pytest.raises(IndexOutOfRange):
        gk_value(2, -1, s)


def test_gk_ratio_identity_spot():
    s = SatakeDatum.symbolic(1)
    i, j = 3, 2
    half_gap = Fraction(i - j, 2)
    lhs = gk_value(i, j, s) * xi(j, s, shift=half_gap + 1)
    rhs = xi(j, s, shift=half_gap)
    assert lhs == rhs
    pt = {"Q": Fraction(2), "T": Fraction(1, 32), "X": Fraction(1), "b1": Fraction(3)}
    assert lhs.evaluate(pt) == rhs.evaluate(pt)


def test_evaluate_examples():
    assert evaluate(abelian_L(0), {"X": 1, "T": Fraction(1, 4)}) == Fraction(4, 3)
    point = {"X": 1, "Q": 2, "T": Fraction(1, 16)}
    assert evaluate(gk_value(1, 1, SatakeDatum()), point) == Fraction(21, 20)
    assert gk_value(1, 1, SatakeDatum()).evaluate(point) == Fraction(21, 20)
    assert evaluate(P("Q + 1"), {"Q": 1}) == 2
    with pytest.raises(PoleAtPoint):
        evaluate(gk_value(1, 1, SatakeDatum()), {"X": 1, "Q": 1, "T": 1})
    with pytest.raises(MissingAssignment):
        evaluate(gk_value(1, 1, SatakeDatum()), {"X": 1, "Q": 2})
