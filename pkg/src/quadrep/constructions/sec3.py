"""Even quartics X^4 + a2 X^2 + a0 with Y-coordinate a value of p^2 + b q^2.

All three cases substitute p = p0 + T, q = q0 + uT, X = r0 + vT through the
point (p0, q0, r0).  Cases 1 and 3 kill the T-coefficient by choosing v as a
linear function of u; in Case 2 (a2 = -2 r0^2) that choice is impossible and
u is fixed instead, leaving v as the curve variable.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact_arith import DomainError, NestedPoly, Number, Q, UniPoly, poly_discriminant
from .base import (
    PROJ_X,
    Construction,
    QuadForm,
    apply_psi,
    check_nonsingular,
    eliminate,
    psi_from_elimination,
    surface_residual_nested,
)

u = UniPoly.x()


def even_quartic(a2: Fraction, a0: Fraction) -> UniPoly:
    return UniPoly([a0, 0, a2, 0, 1])


def _finish(family, params, b, m, a2, a0, r0, p0, q0, g, p, q, X, var, extra=None) -> Construction:
    form = QuadForm(1, b)
    if not form.irreducible:
        raise DomainError("p^2 + b q^2 is reducible (-b is a square)")
    f = even_quartic(a2, a0)
    check_nonsingular(f, g)
    el = eliminate(surface_residual_nested(form, f, p, q, X, PROJ_X))
    rep = psi_from_elimination(el, g, p, q, X)
    extra = dict(extra or {}, a2=a2, a0=a0, elimination=el)
    return Construction(family, params, form, m, f, g, PROJ_X, (p0, q0, r0), var, rep, extra)


def _v_of_u(b, p0, q0, r0, m, a2) -> UniPoly:
    den = r0 * (a2 + 2 * r0 * r0)
    if den == 0:
        raise DomainError("a2 + 2 r0^2 = 0: use the second case")
    return UniPoly([2 * m * p0 / den, 2 * m * b * q0 / den])


def L4(b: Number, p0: Number, q0: Number, r0: Number) -> UniPoly:
    """The first-case auxiliary quartic in closed form; the curve is -2b L4."""
    b, p0, q0, r0 = (Q(x) for x in (b, p0, q0, r0))
    m = p0 * p0 + b * q0 * q0
    r4 = r0 ** 4
    return UniPoly([
        m ** 4 - p0 ** 2 * (m + b * q0 ** 2) * r4,
        -4 * b * b * p0 * q0 ** 3 * r4,
        2 * b * (m ** 4 - (m * m - 3 * b * p0 ** 2 * q0 ** 2) * r4),
        -4 * b * b * p0 ** 3 * q0 * r4,
        b * b * (m ** 4 - b * (m + p0 ** 2) * q0 ** 2 * r4),
    ])


def build_sec3_case1(b: Number, p0: Number, q0: Number, r0: Number) -> Construction:
    """(a2, a0) = (2(m^2 - r0^4)/r0^2, -(m^2 - r0^4)); curve -2b L4(u) = w^2."""
    b, p0, q0, r0 = (Q(x) for x in (b, p0, q0, r0))
    m = p0 * p0 + b * q0 * q0
    if r0 == 0 or m == 0 or m * m == r0 ** 4:
        raise DomainError("need r0 != 0, m != 0 and m^2 != r0^4")
    a2 = 2 * (m * m - r0 ** 4) / (r0 * r0)
    a0 = -(m * m - r0 ** 4)
    g = L4(b, p0, q0, r0) * (-2 * b)
    v = _v_of_u(b, p0, q0, r0, m, a2)
    p, q, X = NestedPoly([p0, 1]), NestedPoly([q0, u]), NestedPoly([r0, v])
    params = dict(b=b, p0=p0, q0=q0, r0=r0)
    return _finish("Sec3Case1", params, b, m, a2, a0, r0, p0, q0, g, p, q, X, "u")


def build_sec3_case2(b: Number, p0: Number, q0: Number, r0: Number) -> Construction:
    """(a2, a0) = (-2 r0^2, m^2 + r0^4); curve 2b(-m^2 + 2b q0^2 r0^2 v^2 + b^2 q0^4 v^4) = w^2."""
    b, p0, q0, r0 = (Q(x) for x in (b, p0, q0, r0))
    m = p0 * p0 + b * q0 * q0
    if q0 == 0:
        raise DomainError("the second case needs q0 != 0")
    if m == 0 or r0 == 0:
        raise DomainError("need m != 0 and r0 != 0")
    a2 = -2 * r0 * r0
    a0 = m * m + r0 ** 4
    g = UniPoly([-m * m, 0, 2 * b * q0 * q0 * r0 * r0, 0, b * b * q0 ** 4]) * (2 * b)
    u0 = -p0 / (b * q0)
    v = UniPoly.x()
    p, q, X = NestedPoly([p0, 1]), NestedPoly([q0, u0]), NestedPoly([r0, v])
    params = dict(b=b, p0=p0, q0=q0, r0=r0)
    return _finish("Sec3Case2", params, b, m, a2, a0, r0, p0, q0, g, p, q, X, "v", {"u": u0})


def conic_rhs(s: Fraction, r0: Fraction) -> Fraction:
    return (s * s + 1) * (s * s + 2 * s - 1) / (4 * s * s) * r0 * r0


def g1_g2(b, s, p0, q0) -> tuple[UniPoly, UniPoly]:
    b, s, p0, q0 = (Q(x) for x in (b, s, p0, q0))
    g1 = UniPoly([
        (1 - s * s) * p0 ** 2 + 2 * s * b * q0 ** 2,
        2 * (1 - 2 * s - s * s) * b * p0 * q0,
        b * (2 * s * p0 ** 2 + (1 - s * s) * b * q0 ** 2),
    ])
    g2 = UniPoly([
        2 * (1 - s * s) ** 2 * p0 ** 2 + (1 + s * s) ** 2 * b * q0 ** 2,
        2 * (1 - 6 * s * s + s ** 4) * b * p0 * q0,
        b * ((1 + s * s) ** 2 * p0 ** 2 + 2 * (1 - s * s) ** 2 * b * q0 ** 2),
    ])
    return g1, g2


def build_sec3_case3(b: Number, s: Number, r0: Number, p0: Number, q0: Number) -> Construction:
    """The genus-0 branch parametrized by s; (p0, q0, r0) must lie on the conic."""
    b, s, r0, p0, q0 = (Q(x) for x in (b, s, r0, p0, q0))
    if s in (0, 1, -1):
        raise DomainError("s must avoid 0 and +-1")
    m = p0 * p0 + b * q0 * q0
    if m != conic_rhs(s, r0):
        raise DomainError("(p0, q0, r0) does not satisfy p0^2 + b q0^2 = (s^2+1)(s^2+2s-1) r0^2 / 4s^2")
    if r0 == 0:
        raise DomainError("need r0 != 0")
    a2 = r0 * r0 * (s * s - 1) * (s ** 4 + 2 * s ** 3 + 2 * s * s - 2 * s + 1) / (4 * s ** 3)
    a0 = r0 ** 4 * (s * s - 1) ** 4 / (16 * s ** 4)
    g1, g2 = g1_g2(b, s, p0, q0)
    if poly_discriminant(g1) == 0 or poly_discriminant(g2) == 0:
        raise DomainError("g1 or g2 has a double root")
    g = g1 * g2 * (-b * s)
    v = _v_of_u(b, p0, q0, r0, m, a2)
    p, q, X = NestedPoly([p0, 1]), NestedPoly([q0, u]), NestedPoly([r0, v])
    params = dict(b=b, s=s, r0=r0, p0=p0, q0=q0)
    return _finish("Sec3Case3", params, b, m, a2, a0, r0, p0, q0, g, p, q, X, "u", {"g1": g1, "g2": g2})


def psi_sec3(con: Construction, u: Number, w: Number):
    return apply_psi(con, u, w)


def sextic_F2F4(b: Number, p0: Number, q0: Number, r0: Number, a2: Number) -> UniPoly:
    """The sextic F2 F4 = -r0^8 (a2 + 2 r0^2)^6 (C3^2 - 4 C2 C4).

    C2, C3, C4 are the T-coefficients of the elimination with a2 free and a0
    fixed by the base point.  This scaling gives the discriminant its
    power-product form.
    """
    b, p0, q0, r0, a2 = (Q(x) for x in (b, p0, q0, r0, a2))
    m = p0 * p0 + b * q0 * q0
    a0 = m * m - r0 ** 4 - a2 * r0 * r0
    v = _v_of_u(b, p0, q0, r0, m, a2)
    p, q, X = NestedPoly([p0, 1]), NestedPoly([q0, u]), NestedPoly([r0, v])
    el = eliminate(surface_residual_nested(QuadForm(1, b), even_quartic(a2, a0), p, q, X, PROJ_X))
    return el.disc * (-(r0 ** 8) * (a2 + 2 * r0 * r0) ** 6)
