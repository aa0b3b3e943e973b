"""Quartics m^2 X^4 + c (dX + e)^2 with Y-coordinate a value of p^2 + b q^2."""

from __future__ import annotations

from fractions import Fraction

from ..exact_arith import (
    DomainError,
    NestedPoly,
    Number,
    Q,
    UniPoly,
    same_square_class,
)
from .base import (
    PROJ_X,
    Construction,
    PsiRep,
    QuadElt,
    QuadForm,
    apply_psi,
    check_nonsingular,
    eliminate,
    surface_residual_nested,
)

U = UniPoly.x()


def sec2_surface(m: Fraction, c: Fraction, d: Fraction, e: Fraction) -> UniPoly:
    return UniPoly([0, 0, 0, 0, m * m]) + UniPoly([e, d]) ** 2 * c


def sec2_aux(b: Fraction, c: Fraction, d: Fraction, e: Fraction, m: Fraction) -> UniPoly:
    """-b (2 b^2 U^4 - b c d^2 U^2 - 2 c e^2 m^2)."""
    return UniPoly([-2 * c * e * e * m * m, 0, -b * c * d * d, 0, 2 * b * b]) * (-b)


def build_sec2(b: Number, c: Number, d: Number, e: Number, p0: Number, q0: Number) -> Construction:
    b, c, d, e, p0, q0 = (Q(x) for x in (b, c, d, e, p0, q0))
    form = QuadForm(1, b)
    if not form.irreducible:
        raise DomainError("p^2 + b q^2 is reducible (-b is a square)")
    if c * e == 0:
        raise DomainError("need c*e != 0")
    m = p0 * p0 + b * q0 * q0
    if m == 0:
        raise DomainError("m = p0^2 + b q0^2 vanishes")
    f = sec2_surface(m, c, d, e)
    g = sec2_aux(b, c, d, e, m)
    check_nonsingular(f, g)
    # the map psi, written over the common denominator m (2 b U^2 - c d^2)
    den = (UniPoly([-c * d * d, 0, 2 * b])) * m
    quad = UniPoly([-c * d * d, 0, 2 * b])
    p = QuadElt(UniPoly([p0 * c * d * e * m]) - U * quad * (b * q0), U * p0, den)
    q = QuadElt(UniPoly([c * d * e * q0 * m]) + U * quad * p0, U * q0, den)
    X = QuadElt(UniPoly([c * d * e * m]), U, den)
    params = dict(b=b, c=c, d=d, e=e, p0=p0, q0=q0)
    return Construction("Sec2", params, form, m, f, g, PROJ_X, (p0, q0, None), "U", PsiRep(p, q, X))


def psi_sec2(con: Construction, u: Number, w: Number):
    """Points of the surface over (U, w) and (U, -w)."""
    return apply_psi(con, u, w)


def derive_G_sec2(a0: Number, a1: Number, a2: Number, b: Number, p0: Number, q0: Number) -> UniPoly:
    """The sextic G(U) = m^2 (B1^2 - 4 B0 B2) obtained by substituting
    p = p0 T, q = q0 T + U/p0, X = T + b q0 U/(m p0) into
    (p^2 + b q^2)^2 - (m^2 X^4 + a2 X^2 + a1 X + a0).
    """
    a0, a1, a2, b, p0, q0 = (Q(x) for x in (a0, a1, a2, b, p0, q0))
    if p0 == 0:
        raise DomainError("the substitution divides by p0")
    if b == 0:
        raise DomainError("b must be nonzero")
    m = p0 * p0 + b * q0 * q0
    if m == 0:
        raise DomainError("m = p0^2 + b q0^2 vanishes")
    f = UniPoly([a0, a1, a2, 0, m * m])
    V = U * (b * q0 / (m * p0))
    p = NestedPoly([0, p0])
    q = NestedPoly([U / p0, q0])
    X = NestedPoly([V, 1])
    el = eliminate(surface_residual_nested(QuadForm(1, b), f, p, q, X, PROJ_X))
    return el.disc * (m * m)


def descent_nonempty_criterion(C, P, b: Number, m: Number | None = None) -> bool:
    """Sufficient condition for the auxiliary curve to have a rational point.

    C is Y^2 = m^2 X^4 + c (dX + e)^2 given as a UniPoly or QuarticCurve and
    P = (X0, Y0) a rational point on it.  True when Y0 - m X0^2 lies in the
    square class of b m or of -b m c (c is known up to squares from c e^2).
    """
    g = getattr(C, "poly", C)
    X0, Y0 = Q(P[0]), Q(P[1])
    if Y0 * Y0 != g(X0):
        raise DomainError("P is not on C")
    if m is None:
        from ..exact_arith import rational_is_square
        m = rational_is_square(g[4])
        if m is None:
            raise DomainError("leading coefficient is not a square")
    m, b = Q(m), Q(b)
    if g[3] != 0 or g[1] * g[1] != 4 * g[2] * g[0]:
        raise DomainError("C is not of the shape m^2 X^4 + c (dX + e)^2")
    t = Y0 - m * X0 * X0
    if t == 0:
        raise DomainError("Y0 - m X0^2 = 0 has no square class")
    return same_square_class(t, b * m) or same_square_class(t, -b * m * g[0])
