"""Quartics with Y-coordinate a value of the inhomogeneous form p^2 + b q^2 + c.

The point (p0, q0, 0) is on the surface since f(0) = m^2.  Substituting
X = T, p = p0 + (U + p0 A1)/(4(m-c)m) T, q = q0 - (p0 U - b q0^2 A1)/(4 b q0 (m-c) m) T
leaves T^2 F(T) with F quadratic; the auxiliary curve is its discriminant.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact_arith import DomainError, NestedPoly, Number, Q, UniPoly
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

U = UniPoly.x()


def _sec4_subst(b, c, p0, q0, A1, m, scale: Fraction):
    """The substitution with U replaced by scale * U."""
    Us = U * scale
    k = 4 * (m - c) * m
    p = NestedPoly([p0, (Us + p0 * A1) / k])
    q = NestedPoly([q0, -(Us * p0 - b * q0 * q0 * A1) / (k * b * q0)])
    X = NestedPoly([0, 1])
    return p, q, X


def _check(b, c, p0, q0):
    m = p0 * p0 + b * q0 * q0 + c
    if q0 == 0:
        raise DomainError("the substitution divides by q0")
    if m == 0 or m == c:
        raise DomainError("need m != 0 and m != c")
    return m


def derive_F_sec4(b: Number, c: Number, p0: Number, q0: Number,
                  A1: Number, A2: Number, A3: Number, A4: Number):
    """(B0, B1, B2, G) with F = B0 + B1 T + B2 T^2 and
    B1^2 - 4 B0 B2 = -128 b q0^2 (m - c) m^3 G(U)."""
    b, c, p0, q0, A1, A2, A3, A4 = (Q(x) for x in (b, c, p0, q0, A1, A2, A3, A4))
    m = _check(b, c, p0, q0)
    f = UniPoly([m * m, A1, A2, A3, A4])
    p, q, X = _sec4_subst(b, c, p0, q0, A1, m, Fraction(1))
    el = eliminate(surface_residual_nested(QuadForm(1, b, c), f, p, q, X, PROJ_X))
    if el.shift != 2:
        raise DomainError("unexpected T-valuation in the elimination")
    scale = 256 * b * b * q0 ** 4 * (m - c) ** 2 * m ** 4
    B0, B1, B2 = (x * scale for x in el.quad)
    G = (B1 * B1 - B0 * B2 * 4) / (-128 * b * q0 * q0 * (m - c) * m ** 3)
    return B0, B1, B2, G


def H_sec4(b, c, p0, q0, A1, A2, A3, A4, printed: bool = False) -> Fraction:
    """The factor H of Disc_U(G).

    With printed=True the A1^3 A3 term carries the printed sign -64; the
    default uses +64, which is the sign consistent with the formula for A2
    in the second case and the one that makes the discriminant identity hold.
    """
    b, c, p0, q0, A1, A2, A3, A4 = (Q(x) for x in (b, c, p0, q0, A1, A2, A3, A4))
    m = p0 * p0 + b * q0 * q0 + c
    sign = -1 if printed else 1
    return (-8 * (m - c) * m * (A1 ** 4 - 256 * A4 * (m - c) ** 2 * m ** 4) * A2 + A1 ** 6
            + sign * 64 * (m - c) ** 2 * m ** 2 * A1 ** 3 * A3
            + 256 * (2 * c - 3 * m) * (m - c) ** 2 * m ** 3 * A4 * A1 ** 2
            - 512 * (m - c) ** 3 * m ** 5 * A3 ** 2)


def _build(family, params, b, c, p0, q0, m, A1, A2, A3, A4, g) -> Construction:
    form = QuadForm(1, b, c)
    f = UniPoly([m * m, A1, A2, A3, A4])
    check_nonsingular(f, g)
    p, q, X = _sec4_subst(b, c, p0, q0, A1, m, q0)
    el = eliminate(surface_residual_nested(form, f, p, q, X, PROJ_X))
    rep = psi_from_elimination(el, g, p, q, X)
    extra = dict(A1=A1, A2=A2, A3=A3, A4=A4, elimination=el)
    return Construction(family, params, form, m, f, g, PROJ_X, (p0, q0, Fraction(0)), "U", rep, extra)


def sec4_case1_curve(b, c, m, A1, A2) -> UniPoly:
    """-2b(m-c)(m U^4 + b m (3A1^2 - 8 m A2 (m-c)) U^2 - 2 b^2 A1^2 ((2c-3m) A1^2 + 8 (m-c) m^2 A2))."""
    inner = UniPoly([
        -2 * b * b * A1 * A1 * ((2 * c - 3 * m) * A1 * A1 + 8 * (m - c) * m * m * A2),
        0,
        b * m * (3 * A1 * A1 - 8 * m * A2 * (m - c)),
        0,
        m,
    ])
    return inner * (-2 * b * (m - c))


def build_sec4_case1(b: Number, c: Number, p0: Number, q0: Number, A1: Number, A2: Number) -> Construction:
    b, c, p0, q0, A1, A2 = (Q(x) for x in (b, c, p0, q0, A1, A2))
    m = _check(b, c, p0, q0)
    if A1 == 0:
        raise DomainError("the first case needs A1 != 0")
    A4 = A1 ** 4 / (256 * (m - c) ** 2 * m ** 4)
    A3 = A1 ** 3 / (16 * (m - c) * m ** 3)
    g = sec4_case1_curve(b, c, m, A1, A2)
    params = dict(b=b, c=c, p0=p0, q0=q0, A1=A1, A2=A2)
    return _build("Sec4CaseI", params, b, c, p0, q0, m, A1, A2, A3, A4, g)


def sec4_case2_A2(b, c, m, A1, A3, A4) -> Fraction:
    den = 8 * m * (m - c) * (A1 ** 4 - 256 * A4 * (m - c) ** 2 * m ** 4)
    if den == 0:
        raise DomainError("first-case parameters: A1^4 = 256 A4 (m-c)^2 m^4")
    num = (A1 ** 6 + 64 * (m - c) ** 2 * m ** 2 * A1 ** 3 * A3
           + 256 * (2 * c - 3 * m) * (m - c) ** 2 * m ** 3 * A1 ** 2 * A4
           - 512 * (m - c) ** 3 * m ** 5 * A3 ** 2)
    return num / den


def sec4_case2_coeffs(b, c, m, A1, A3, A4) -> tuple:
    C4 = A1 ** 4 - 256 * (m - c) ** 2 * m ** 4 * A4
    C2 = 2 * b * (A1 ** 6 - 32 * (m - c) ** 2 * m ** 2 * (A3 * A1 ** 3 + 8 * c * m * A4 * A1 ** 2
                                                         - 8 * (m - c) * m ** 3 * A3 ** 2))
    C0 = b * b * (A1 ** 8 - 64 * (m - c) ** 2 * m ** 2 * A1 ** 5 * A3
                  + 512 * (m - c) ** 2 * m ** 3 * (m - 2 * c) * A1 ** 4 * A4
                  + 1024 * (m - c) ** 3 * m ** 5 * A1 ** 2 * A3 ** 2
                  - 16384 * (m - c) ** 4 * m ** 6 * A4 * (A1 * A3 - 4 * A4 * m * m))
    return C0, C2, C4


def build_sec4_case2(b: Number, c: Number, p0: Number, q0: Number,
                     A1: Number, A3: Number, A4: Number) -> Construction:
    b, c, p0, q0, A1, A3, A4 = (Q(x) for x in (b, c, p0, q0, A1, A3, A4))
    m = _check(b, c, p0, q0)
    A2 = sec4_case2_A2(b, c, m, A1, A3, A4)
    C0, C2, C4 = sec4_case2_coeffs(b, c, m, A1, A3, A4)
    pref = 2 * b * m * (m - c) * (256 * A4 * (m - c) ** 2 * m ** 4 - A1 ** 4)
    g = UniPoly([C0, 0, C2, 0, C4]) * pref
    params = dict(b=b, c=c, p0=p0, q0=q0, A1=A1, A3=A3, A4=A4)
    return _build("Sec4CaseII", params, b, c, p0, q0, m, A1, A2, A3, A4, g)


def psi_sec4(con: Construction, u: Number, w: Number):
    return apply_psi(con, u, w)
