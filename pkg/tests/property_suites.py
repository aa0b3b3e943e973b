"""Randomized property checks shared by the unit suite and the acceptance run.

Each function raises AssertionError on the first counterexample and returns
the number of cases it checked.
"""

import random
from fractions import Fraction as F

from quadrep.constructions import BUILDERS, fiber_polynomial
from quadrep.elliptic import (
    CHUD_IDENTITY,
    QuarticCurve,
    WCurve,
    chud_add_odd,
    chud_double,
    qnormalize,
    quartic_with_point_to_cubic,
    w_add,
    w_mul,
    w_neg,
    wpt,
)
from quadrep.exact_arith import UniPoly, poly_discriminant, poly_resultant

from conftest import rq, sample_construction


def _curve_through(rng):
    """A nonsingular curve y^2 = x^3 + a2 x^2 + a4 x + a6 through two random points."""
    while True:
        a2 = rq(rng)
        (x1, y1), (x2, y2) = (rq(rng), rq(rng)), (rq(rng), rq(rng))
        if x1 == x2:
            continue
        # y^2 - x^3 - a2 x^2 = a4 x + a6 at both points
        r1, r2 = y1 * y1 - x1 ** 3 - a2 * x1 * x1, y2 * y2 - x2 ** 3 - a2 * x2 * x2
        a4 = (r1 - r2) / (x1 - x2)
        a6 = r1 - a4 * x1
        E = WCurve(a2, a4, a6)
        if E.disc != 0:
            return E, wpt(x1, y1), wpt(x2, y2)


def group_law_axioms(n=200, seed=1):
    rng = random.Random(seed)
    for _ in range(n):
        E, P, Q = _curve_through(rng)
        R = w_add(E, w_mul(E, rng.randint(-3, 3), P), w_mul(E, rng.randint(1, 3), Q))
        O = w_mul(E, 0, P)
        for S in (P, Q, R):
            assert E.contains(S)
            assert w_add(E, S, O) == S
            assert w_add(E, S, w_neg(E, S)).is_identity
        assert w_add(E, P, Q) == w_add(E, Q, P)
        assert w_add(E, w_add(E, P, Q), R) == w_add(E, P, w_add(E, Q, R))
        assert w_mul(E, 2, P) == w_add(E, P, P)
    return n


def _recurrence_multiples(a2, a0, P1, n):
    pts = {0: CHUD_IDENTITY, 1: P1}
    for k in range(2, n + 1):
        i = k // 2
        pts[k] = chud_double(a2, a0, pts[i]) if k % 2 == 0 else chud_add_odd(a2, a0, pts[i], pts[i + 1], P1)
    return [qnormalize(pts[k]) for k in range(n + 1)]


def chudnovsky_vs_weierstrass(curves=50, top=8, seed=2):
    rng = random.Random(seed)
    done = 0
    while done < curves:
        X1, Y1, a2 = rq(rng), rq(rng), rq(rng)
        a0 = Y1 * Y1 - X1 ** 4 - a2 * X1 * X1
        if a0 == 0 or a2 * a2 == 4 * a0:
            continue
        P1 = (X1, Y1, F(1))
        cm = quartic_with_point_to_cubic(QuarticCurve(UniPoly([a0, 0, a2, 0, 1])), CHUD_IDENTITY)
        G = cm.forward(P1)
        rec = _recurrence_multiples(a2, a0, P1, top)
        for k in range(top + 1):
            assert rec[k] == qnormalize(cm.inverse(w_mul(cm.curve, k, G))), (a2, a0, P1, k)
        done += 1
    return curves * top


def _rand_poly(rng):
    while True:
        d = rng.randint(1, 5)
        p = UniPoly([rq(rng) for _ in range(d + 1)])
        if p.degree == d:
            return p


def disc_res_multiplicativity(n=100, seed=3):
    rng = random.Random(seed)
    for _ in range(n):
        f, g, h = _rand_poly(rng), _rand_poly(rng), _rand_poly(rng)
        assert poly_discriminant(f * g) == poly_discriminant(f) * poly_discriminant(g) * poly_resultant(f, g) ** 2
        assert poly_resultant(f, g * h) == poly_resultant(f, g) * poly_resultant(f, h)
        assert poly_resultant(g, f) == (-1) ** (f.degree * g.degree) * poly_resultant(f, g)
    return n


def fiber_guard_nonzero(targets=50, seed=4):
    rng = random.Random(seed)
    checked = 0
    for family in sorted(BUILDERS):
        con = sample_construction(family, rng)
        for _ in range(targets):
            poly = fiber_polynomial(con, rq(rng, 50))
            assert not poly.is_zero() and poly.degree >= 1, (family, con.params)
            checked += 1
    return checked
