"""Cubics f with X-coordinate a value of a p^2 + b q^2: the surface Y^2 = f(a p^2 + b q^2).

Through a point (p0, q0, Y0) substitute p = T + p0, q = U T + q0 and
Y = V T^3 + r T^2 + s T + Y0.  The T, T^2 and T^3 coefficients are linear in
(s, r, V) and solved in that order; what remains is T^4 times a quadratic
H_U(T) whose discriminant factors as 4 H1(U) H2(U) / (2 Y0^8)^2.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact_arith import DomainError, NestedPoly, Number, Q, UniPoly, rational_is_square
from .base import (
    PROJ_Y,
    Construction,
    QuadForm,
    apply_psi,
    check_nonsingular,
    eliminate,
    psi_from_elimination,
    surface_residual_nested,
)

U = UniPoly.x()


def _solve_vrs(a, b, p0, q0, Y0, f: UniPoly, scale: Fraction = Fraction(1)):
    """(V, r, s) in Q[U] killing the T, T^2 and T^3 coefficients."""
    if Y0 == 0:
        raise DomainError("Y0 must be nonzero")
    Us = U * scale
    m = a * p0 * p0 + b * q0 * q0
    X1 = Us * (2 * b * q0) + 2 * a * p0
    X2 = Us * Us * b + a
    d1, d2, d3 = f.derivative(), f.derivative().derivative(), f.derivative().derivative().derivative()
    f1, f2, f3 = d1(m), d2(m) / 2, d3(m) / 6
    s = X1 * f1 / (2 * Y0)
    r = (X2 * f1 + X1 * X1 * f2 - s * s) / (2 * Y0)
    V = (X1 * X2 * f2 * 2 + X1 ** 3 * f3 - r * s * 2) / (2 * Y0)
    return V, r, s, Us


def _substitution(a, b, p0, q0, Y0, f, scale=Fraction(1)):
    V, r, s, Us = _solve_vrs(a, b, p0, q0, Y0, f, scale)
    p = NestedPoly([p0, 1])
    q = NestedPoly([q0, Us])
    Y = NestedPoly([Y0, s, r, V])
    return p, q, Y, (V, r, s)


def derive_H1H2_sec5(a: Number, b: Number, p0: Number, q0: Number, Y0: Number,
                     c1: Number, c2: Number):
    """(H1, H2) with A5^2 - A4 A6 = 4 H1(U) H2(U), deg H1 = 4, deg H2 = 6.

    H1 is written through L = a p0 + b q0 U and Q = a + b U^2 (the only way U
    enters); H2 is the exact cofactor.
    """
    a, b, p0, q0, Y0, c1, c2 = (Q(x) for x in (a, b, p0, q0, Y0, c1, c2))
    m = a * p0 * p0 + b * q0 * q0
    if m == 0:
        raise DomainError("m = a p0^2 + b q0^2 vanishes")
    c0 = Y0 * Y0 - (m ** 3 + c2 * m * m + c1 * m)
    f = UniPoly([c0, c1, c2, 1])
    p, q, Y, _ = _substitution(a, b, p0, q0, Y0, f)
    el = eliminate(surface_residual_nested(QuadForm(a, b), f, p, q, Y, PROJ_Y))
    if el.shift != 4:
        raise DomainError("linear system for (V, r, s) did not clear T, T^2, T^3")
    C4, C5, C6 = el.quad
    A4, A5, A6 = C4 * (4 * Y0 ** 6), C5 * (2 * Y0 ** 8), C6 * (4 * Y0 ** 10)
    D = A5 * A5 - A4 * A6
    y0 = Y0 * Y0
    Z = 3 * m * m + 2 * c2 * m + c1
    L = UniPoly([a * p0, b * q0])
    Qf = UniPoly([a, 0, b])
    S = L * L
    w = c2 + 3 * m
    H1 = (Qf * Qf * (4 * y0 ** 3 * w - y0 * y0 * Z * Z)
          + S * S * (-8 * y0 * y0 * Z + 4 * y0 * Z * Z * w - Z ** 4)
          + S * Qf * (12 * y0 ** 3 - 8 * y0 * y0 * Z * w + 2 * y0 * Z ** 3))
    H2, rem = divmod(D, H1 * 4)
    if not rem.is_zero():
        raise DomainError("H1 does not divide A5^2 - A4 A6")
    return H1, H2


def sec5_invariants(a, b, p0, q0, Y0, c1, c2) -> dict:
    """The named quantities y0, Z, h11 .. g2 at a parameter tuple."""
    a, b, p0, q0, Y0, c1, c2 = (Q(x) for x in (a, b, p0, q0, Y0, c1, c2))
    m = a * p0 * p0 + b * q0 * q0
    y0 = Y0 * Y0
    Z = 3 * m * m + 2 * c2 * m + c1
    h11 = -4 * (c2 + 3 * m) * y0 + Z * Z
    h12 = 9 * y0 * y0 - 4 * (3 * m + c2) * y0 * Z + Z ** 3
    h13 = (-4 * (6 * m + c2) * y0 ** 3 + 8 * m * (4 * m + c2) * y0 * y0 * Z
           - 4 * m * m * (3 * m + c2) * y0 * Z * Z + Z * Z * (y0 - m * Z) ** 2)
    h21 = 8 * y0 * y0 - 4 * (3 * m + c2) * y0 * Z + Z ** 3
    h23 = h23_poly(m, c2, Z)(y0)
    g1 = 8 * y0 * y0 - 4 * (3 * m + c2) * Z * y0 + Z ** 3
    g2 = g2_poly(m, c2, Z)(y0)
    return dict(m=m, y0=y0, Z=Z, h11=h11, h12=h12, h13=h13, h21=h21, h23=h23, g1=g1, g2=g2)


def h23_poly(m, c2, Z) -> UniPoly:
    """h23 as a polynomial in y0."""
    return UniPoly([
        m ** 3 * Z ** 6,
        -m * m * (8 * c2 * m + 24 * m * m + Z) * Z ** 4,
        8 * m * m * (2 * c2 * c2 * m + 12 * c2 * m * m + 18 * m ** 3 + c2 * Z + 5 * m * Z) * Z * Z,
        -m * (16 * c2 * c2 * m + 160 * c2 * m * m + 336 * m ** 3 + c2 * Z + 11 * m * Z) * Z,
        2 * m * (2 * c2 * c2 + 28 * c2 * m + 98 * m * m - Z),
        -1,
    ])


def g2_poly(m, c2, Z) -> UniPoly:
    """g2 as a polynomial in y0."""
    return UniPoly([
        -(c2 * c2 + 6 * c2 * m + 9 * m * m - 4 * Z) * Z * Z,
        2 * (c2 + 3 * m) * (2 * c2 * c2 + 12 * c2 * m + 18 * m * m - 9 * Z),
        27,
    ])


# ------------------------------------------------------------------ builders

def _case_f_c(t, m):
    den = (4 + t) * t * (-1 + 2 * t)
    c2 = -m * (1 + t) * (-1 + 13 * t + 5 * t * t) / den
    c1 = m * m * (1 + t) ** 2 * (7 + 4 * t) / den
    c0 = -m ** 3 * (1 + t) ** 4 / ((4 + t) * t * t * (-1 + 2 * t))
    return UniPoly([c0, c1, c2, 1])


def case1_k(A, B, t) -> list[Fraction]:
    k0 = -A * A * ((A + B) ** 2 + 2 * (A * A - B * B) * t + A * (A - 3 * B) * t * t - A * B * t ** 3)
    k1 = -2 * A * A * B * t * (4 + t) * (A + B + (A - B) * t)
    k2 = A * B * (-2 * (A + B) ** 2 + 3 * (A * A - 6 * A * B + B * B) * t * t + (A * A - 4 * A * B + B * B) * t ** 3)
    k3 = 2 * A * B * B * t * (4 + t) * (-(A + B) + (A - B) * t)
    k4 = -B * B * ((A + B) ** 2 - 2 * (A * A - B * B) * t - B * (3 * A - B) * t * t - A * B * t ** 3)
    return [k0, k1, k2, k3, k4]


def build_sec5(case: int, **params) -> Construction:
    """Cases 1-4 are the four surviving branches of the discriminant analysis.

    1: parameter t; 2: parameter y0 (or Y0); 3: parameter v; 4: parameter Z.
    An explicit Y0 may be passed to pick the sign of the base point.
    """
    P = {k: Q(v) for k, v in params.items()}
    a, b, p0, q0 = P.get("a", Fraction(1)), P["b"], P["p0"], P["q0"]
    form = QuadForm(a, b)
    m = a * p0 * p0 + b * q0 * q0
    if m == 0:
        raise DomainError("m = a p0^2 + b q0^2 vanishes")
    L = UniPoly([a * p0, b * q0])
    Qf = UniPoly([a, 0, b])
    scale = Fraction(1)
    if case == 1:
        t = P["t"]
        if t in (0, -1, -4, Fraction(1, 2)):
            raise DomainError("t must avoid 0, -1, -4, 1/2")
        if p0 == 0 or q0 == 0:
            raise DomainError("the first case rescales U by q0/p0")
        f = _case_f_c(t, m)
        A, B = a * p0 * p0, b * q0 * q0
        # the printed prefactor is A B t; the T-discriminant forces -A B t
        g = UniPoly(case1_k(A, B, t)) * (-A * B * t)
        scale = q0 / p0
        family = "Sec5Case2"
    elif case == 2:
        y0 = P["Y0"] ** 2 if "Y0" in P else P["y0"]
        if y0 == 4 * m ** 3 or y0 == 0:
            raise DomainError("y0 = 4 m^3 (or 0) makes f singular")
        f = UniPoly([0, m * m, -2 * m + y0 / (m * m), 1])
        second = UniPoly([a * (4 * a * m * m * p0 * p0 - y0), 8 * a * b * m * m * p0 * q0,
                          b * (4 * b * m * m * q0 * q0 - y0)])
        # the printed prefactor is -a b y0; the T-discriminant forces +a b y0
        g = Qf * second * (a * b * y0)
        family = "Sec5Case3"
    elif case == 3:
        v = P["v"]
        if v == 2 * m * m:
            raise DomainError("v = 2 m^2 gives a repeated factor")
        f = UniPoly([-(2 * m * m - v) / (2 * m), 1]) * UniPoly([-3 * m * m + 2 * v, 2 * m, 1])
        second = UniPoly([a * (2 * a * m * p0 * p0 - v), 4 * a * b * m * p0 * q0,
                          b * (2 * m * b * q0 * q0 - v)])
        g = Qf * second * (2 * a * b)
        family = "Sec5Case4"
    elif case == 4:
        Zp = P["Z"]
        if Zp * (8 * m * m - Zp) == 0:
            raise DomainError("need Z (8 m^2 - Z) != 0")
        f = UniPoly([-(8 * m * m - Zp) / (8 * m), 1]) * UniPoly([-(6 * m * m - Zp) / 2, 2 * m, 1])
        g = Qf * (L * L * (8 * m) - Qf * Zp) * (2 * a * b)
        family = "Sec5Case5"
    else:
        raise DomainError(f"unknown case {case}")
    y0 = f(m)
    if "Y0" in P:
        Y0 = P["Y0"]
        if Y0 * Y0 != y0:
            raise DomainError("Y0^2 != f(m)")
    else:
        Y0 = rational_is_square(y0)
        if Y0 is None or Y0 == 0:
            raise DomainError("f(m) is not a nonzero rational square; no base point")
    check_nonsingular(f, g)
    p, q, Y, vrs = _substitution(a, b, p0, q0, Y0, f, scale)
    el = eliminate(surface_residual_nested(form, f, p, q, Y, PROJ_Y))
    rep = psi_from_elimination(el, g, p, q, Y)
    extra = dict(case=case, Y0=Y0, y0=y0, vrs=vrs, elimination=el, u_scale=scale)
    return Construction(family, P, form, m, f, g, PROJ_Y, (p0, q0, Y0), "U", rep, extra)


def psi_sec5(con: Construction, u: Number, w: Number):
    return apply_psi(con, u, w)
