import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st
from sympy import Poly, Rational, discriminant, symbols
from sympy.polys.subresultants_qq_zz import sylvester

from quadrep.exact_arith import (
    DomainError,
    NestedPoly,
    Q,
    UniPoly,
    compose_nested,
    poly_discriminant,
    poly_gcd,
    poly_resultant,
    poly_sqrt,
    q_from_str,
    q_to_str,
    rational_is_square,
    rational_roots,
    same_square_class,
    square_class,
    squarefree_part,
    sturm_real_root_count,
    sylvester_resultant,
    valuation,
)

from conftest import rq

x = symbols("x")
fractions = st.builds(F, st.integers(-10 ** 12, 10 ** 12), st.integers(1, 10 ** 6))
small = st.builds(F, st.integers(-50, 50), st.integers(1, 50))
polys = st.lists(small, max_size=6).map(UniPoly)


def rand_poly(rng, d):
    while True:
        p = UniPoly([rq(rng) for _ in range(d + 1)])
        if p.degree == d:
            return p


def to_sympy(p):
    return Poly([Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], x)


# -------------------------------------------------------------- rationals

@given(fractions)
def test_rational_string_round_trip(r):
    assert q_from_str(q_to_str(r)) == r


def test_rational_strings():
    assert q_to_str(F(-39, 32)) == "-39/32"
    assert q_to_str(F(6, 3)) == "2"
    assert Q("81/256") == F(81, 256)
    assert Q(" -7 ") == -7
    with pytest.raises(ValueError):
        q_from_str("1.5")


def test_squarefree_and_square_classes():
    assert squarefree_part(72) == 2
    assert squarefree_part(-45) == -5
    assert square_class(F(8, 3)) == 6
    assert same_square_class(F(2, 9), 8)
    assert not same_square_class(2, 3)
    assert rational_is_square(F(49, 4)) == F(7, 2)
    assert rational_is_square(-4) is None
    with pytest.raises(DomainError):
        squarefree_part(0)
    with pytest.raises(DomainError):
        square_class(0)


def test_valuation():
    assert valuation(F(48, 5), 2) == 4
    assert valuation(F(48, 5), 5) == -1
    assert valuation(0, 3) is None


# ------------------------------------------------------------ polynomials

def test_poly_basics():
    f = UniPoly([1, 0, -3, 0, 1])
    assert f.degree == 4
    assert f(2) == 5
    assert f.derivative() == UniPoly([0, -6, 0, 4])
    assert UniPoly([0, 0]).is_zero() and UniPoly([0, 0]).degree < 0
    q, r = divmod(f, UniPoly([-1, 1]))
    assert q * UniPoly([-1, 1]) + r == f


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_poly_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)


def test_gcd_and_sqrt():
    a, b = UniPoly([1, 1]), UniPoly([-2, 0, 1])
    assert poly_gcd(a * b, a * UniPoly([5, 1])) == a.monic()
    assert poly_sqrt(b * b) in (b, -b)
    assert poly_sqrt(b) is None
    assert poly_sqrt(UniPoly([-1, 0, -1])) is None


def test_rational_roots_and_sturm():
    f = UniPoly([-6, 1, 1]) * UniPoly([1, 0, 3]) * UniPoly([1, -2])
    assert rational_roots(f) == [F(-3), F(1, 2), F(2)]
    assert sturm_real_root_count(f) == 3
    assert sturm_real_root_count(UniPoly([1, 0, 1])) == 0
    assert sturm_real_root_count(UniPoly([0, 0, 1])) == 1


def test_known_discriminants():
    # x^4 + 3 and x^3 + a x + b
    assert poly_discriminant(UniPoly([3, 0, 0, 0, 1])) == 256 * 27
    assert poly_discriminant(UniPoly([2, -1, 0, 1])) == -4 * (-1) ** 3 - 27 * 4
    assert poly_discriminant(UniPoly([1, 2, 1])) == 0
    assert poly_resultant(UniPoly([-1, 1]), UniPoly([-2, 1])) == -1


def test_resultant_against_sylvester_oracle():
    rng = random.Random(5)
    for _ in range(120):
        f, g = rand_poly(rng, rng.randint(1, 6)), rand_poly(rng, rng.randint(1, 6))
        want = sylvester(to_sympy(f).as_expr(), to_sympy(g).as_expr(), x).det()
        r = poly_resultant(f, g)
        assert r == F(int(want.p), int(want.q))
        assert r == sylvester_resultant(f, g)


def test_discriminant_against_sympy():
    rng = random.Random(6)
    for _ in range(120):
        f = rand_poly(rng, rng.randint(2, 7))
        want = discriminant(to_sympy(f))
        assert poly_discriminant(f) == F(int(want.p), int(want.q))


def test_nested_composition():
    # f(T + U) evaluated at T = 1, U = 2 equals f(3)
    f = UniPoly([1, -2, 0, 1])
    N = compose_nested(f, NestedPoly([UniPoly([0, 1]), UniPoly([1])]))
    total = sum(c(2) * 1 ** k for k, c in enumerate(N.coeffs))
    assert total == f(3)
