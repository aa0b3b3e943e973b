"""Closed-form maps as printed for the worked examples.

They serve as independent oracles for the generic map: every printed image
must be a point of the surface, and must agree with one of the two generic
images over (u, +w), (u, -w) once the auxiliary curve is written in the same
model.
"""

from __future__ import annotations

from ..exact_arith import DomainError, Number, Q


def _div(n, d):
    if d == 0:
        raise DomainError("pole of the printed map")
    return n / d


def map_ex2_4(U: Number, w: Number):
    """(U, w) on w^2 = 2(l - U^4) to (p, q, X) on (p^2 + q^2)^2 = X^4 + l."""
    U, w = Q(U), Q(w)
    t = _div(w, 2 * U)
    return t, U, t


def map_ex3_2(u: Number, V: Number):
    """(u, V) on V^2 = 2(5 + 30u^2 - 3u^4) to (p, q, X) on (p^2 + 3q^2)^2 = X^4 - 15/2 X^2 + 15."""
    u, V = Q(u), Q(V)
    d = (-1 + u * u) * (5 + 3 * u * u)
    n = 5 + 3 * u ** 4 - u * V
    return _div(n, d), -_div(u * (-10 + 2 * u * u + u * V), d), _div(2 * n, d)


def map_ex3_3(v: Number, U: Number):
    """(v, U) on U^2 = -9 + 4v^2 + 4v^4 to (p, q, X) on (p^2 + 2q^2)^2 = X^4 - 2X^2 + 10."""
    v, U = Q(v), Q(U)
    d = 9 - 4 * v ** 4
    return (_div(9 + 8 * v ** 3 - 4 * v ** 4 - 6 * U, d),
            _div(9 - 4 * v ** 3 - 4 * v ** 4 + 3 * U, d),
            _div(9 + 4 * v ** 4 - 6 * U * v, d))


def map_ex4_3(U: Number, V: Number):
    """(U, V) on V^2 = 130 + 63U^2 - 3U^4 to (p, q, X) on
    (p^2 + q^2 + 1)^2 = 9 + 24X + 288X^2 + 16X^3 + 4X^4."""
    U, V = Q(U), Q(V)
    d = U * (2 + U * U)
    return (_div(-2 * U * U + U ** 3 - (1 + U) * V, d),
            _div(2 * U * U + U ** 3 - (1 - U) * V, d),
            _div(-(2 * U + V), d))


def map_ex5_2(b: Number, U: Number, W: Number):
    """(U, W) on W^2 = 2b(bU^2 + 1)(bU^2 + 3) to (p, q, Y) on Y^2 = f1(p^2 + b q^2)."""
    b, U, W = Q(b), Q(U), Q(W)
    s = b * U * U + 1
    return (_div(2 * b * b * U ** 3 + W, b * U * s),
            _div(W - 2 * b * U, b * s),
            -_div(W * (4 * b * b * U * U + W * W), b ** 3 * U ** 3 * s * s))


def fiber_quartic_ex5_2(b: Number, value: Number):
    """The printed quartic in U whose roots give p^2 + b q^2 = value."""
    from ..exact_arith import UniPoly
    b, v = Q(b), Q(value)
    return UniPoly([-6, 0, b * (v - 8), 0, b * b * (v - 6)])
