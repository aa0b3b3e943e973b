import random
from fractions import Fraction as F

import pytest

from quadrep.exact_arith import DomainError, UniPoly
from quadrep.localsolve import bad_primes, is_padic_square, locally_solvable, really_solvable

from conftest import rq


def test_padic_squares():
    assert is_padic_square(17, 2)          # 17 = 1 mod 8
    assert not is_padic_square(5, 2)
    assert is_padic_square(F(4, 9), 3)
    assert not is_padic_square(3, 3)
    assert is_padic_square(2, 7)            # 3^2 = 2 mod 7
    assert not is_padic_square(3, 7)
    assert is_padic_square(0, 5)


def test_unsolvable_at_two():
    v = locally_solvable(UniPoly([18, 0, 0, 0, -54]), 2)
    assert not v.solvable and not v.exhausted


def test_unsolvable_at_seventeen_both_constants():
    quad = UniPoly([10001, -4046, 71009]) * UniPoly([-239735, 28322, 2388313])
    for const in (102, 170):
        g = quad * const
        assert not locally_solvable(g, 17).solvable
        assert all(locally_solvable(g, p).solvable for p in (2, 3, 5, 7))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_solvable_everywhere_small(p):
    v = locally_solvable(UniPoly([18, 0, 0, 0, -2]), p)
    assert v.solvable and v.witness is not None


def test_point_at_infinity_witness():
    # w^2 = 9 U^4 - 7 has the points at infinity (leading coefficient a square)
    v = locally_solvable(UniPoly([-7, 0, 0, 0, 9]), 7)
    assert v.solvable


def test_real_places():
    assert not really_solvable(UniPoly([-1, 0, -1])).solvable
    assert really_solvable(UniPoly([18, 0, 0, 0, -2])).solvable
    assert really_solvable(UniPoly([-3, 0, 0, 0, 1])).solvable


def test_rejects_bad_input():
    with pytest.raises(DomainError):
        locally_solvable(UniPoly([1, 0, 1]), 4)
    with pytest.raises(DomainError):
        locally_solvable(UniPoly(), 3)


def test_bad_primes():
    assert bad_primes(UniPoly([18, 0, 0, 0, -2])) == [2, 3]


def test_agrees_with_brute_force():
    rng = random.Random(31)
    for _ in range(40):
        g = UniPoly([rng.randint(-30, 30) for _ in range(4)] + [rng.choice([-3, -2, -1, 1, 2, 3, 5])])
        for p in (2, 3, 5):
            v = locally_solvable(g, p)
            if v.solvable and v.witness["U"] != "infinity":
                assert is_padic_square(g(F(v.witness["U"])), p)
            hit = any(is_padic_square(g(F(n, p ** j)), p) for j in range(2) for n in range(p ** 4))
            if hit:
                assert v.solvable
