"""Weierstrass curves, torsion, model changes and quartic addition recurrences.

Curves are kept in the form y^2 = x^3 + a2*x^2 + a4*x + a6.  Quartic models
Y^2 = c4*X^4 + ... + c0 are handled through weighted projective triples
(U, V, W) with X = U/W and Y = V/W^2; W = 0 marks one of the (at most two)
points at infinity, which exist over Q only when c4 is a square.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm
from typing import Callable

from sympy import factorint

from .exact_arith import (
    DomainError,
    Number,
    Q,
    UniPoly,
    poly_discriminant,
    q_from_str,
    q_to_str,
    rational_is_square,
    rational_roots,
)

MAZUR_BOUND = 12


# --------------------------------------------------------------- Weierstrass

@dataclass(frozen=True)
class WPoint:
    x: Fraction | None = None
    y: Fraction | None = None

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def to_json(self) -> dict:
        if self.is_identity:
            return {"inf": True}
        return {"x": q_to_str(self.x), "y": q_to_str(self.y)}

    @classmethod
    def from_json(cls, data: dict) -> "WPoint":
        if data.get("inf"):
            return IDENTITY
        return cls(q_from_str(str(data["x"])), q_from_str(str(data["y"])))

    def __repr__(self) -> str:
        if self.is_identity:
            return "WPoint(O)"
        return f"WPoint({q_to_str(self.x)}, {q_to_str(self.y)})"


IDENTITY = WPoint()


def wpt(x: Number, y: Number) -> WPoint:
    return WPoint(Q(x), Q(y))


@dataclass(frozen=True)
class WCurve:
    """y^2 = x^3 + a2 x^2 + a4 x + a6 over Q."""

    a2: Fraction
    a4: Fraction
    a6: Fraction

    def __init__(self, a2: Number, a4: Number, a6: Number):
        object.__setattr__(self, "a2", Q(a2))
        object.__setattr__(self, "a4", Q(a4))
        object.__setattr__(self, "a6", Q(a6))
        if self.cubic_disc == 0:
            raise DomainError(f"singular Weierstrass model {self}")

    @property
    def cubic(self) -> UniPoly:
        return UniPoly([self.a6, self.a4, self.a2, 1])

    @property
    def cubic_disc(self) -> Fraction:
        return poly_discriminant(self.cubic)

    @property
    def c4(self) -> Fraction:
        b2, b4 = 4 * self.a2, 2 * self.a4
        return b2 * b2 - 24 * b4

    @property
    def c6(self) -> Fraction:
        b2, b4, b6 = 4 * self.a2, 2 * self.a4, 4 * self.a6
        return -b2 ** 3 + 36 * b2 * b4 - 216 * b6

    @property
    def disc(self) -> Fraction:
        return 16 * self.cubic_disc

    @property
    def j_invariant(self) -> Fraction:
        return self.c4 ** 3 / self.disc

    def contains(self, P: WPoint) -> bool:
        if P.is_identity:
            return True
        return P.y * P.y == self.cubic(P.x)

    def check(self, P: WPoint) -> None:
        if not self.contains(P):
            raise DomainError(f"{P} is not on {self}")

    def __repr__(self) -> str:
        return f"WCurve(a2={q_to_str(self.a2)}, a4={q_to_str(self.a4)}, a6={q_to_str(self.a6)})"

    def to_json(self) -> dict:
        return {"a2": q_to_str(self.a2), "a4": q_to_str(self.a4), "a6": q_to_str(self.a6)}


def w_neg(E: WCurve, P: WPoint) -> WPoint:
    if P.is_identity:
        return P
    return WPoint(P.x, -P.y)


def _add(E: WCurve, P: WPoint, R: WPoint) -> WPoint:
    if P.is_identity:
        return R
    if R.is_identity:
        return P
    if P.x == R.x:
        if P.y + R.y == 0:
            return IDENTITY
        lam = (3 * P.x * P.x + 2 * E.a2 * P.x + E.a4) / (2 * P.y)
    else:
        lam = (R.y - P.y) / (R.x - P.x)
    x3 = lam * lam - E.a2 - P.x - R.x
    y3 = lam * (P.x - x3) - P.y
    return WPoint(x3, y3)


def w_add(E: WCurve, P: WPoint, R: WPoint) -> WPoint:
    """Chord-tangent sum on E."""
    E.check(P)
    E.check(R)
    return _add(E, P, R)


def w_mul(E: WCurve, n: int, P: WPoint) -> WPoint:
    """[n]P by double-and-add; negative n allowed."""
    E.check(P)
    if n < 0:
        n, P = -n, w_neg(E, P)
    acc, base = IDENTITY, P
    while n:
        if n & 1:
            acc = _add(E, acc, base)
        base = _add(E, base, base)
        n >>= 1
    return acc


def point_order(E: WCurve, P: WPoint, bound: int = MAZUR_BOUND) -> int | None:
    """Order of P if at most ``bound``, else None."""
    acc = P
    for n in range(1, bound + 1):
        if acc.is_identity:
            return n
        acc = _add(E, acc, P)
    return None


def certify_infinite_order(E: WCurve, P: WPoint) -> bool:
    """True iff [n]P is not the identity for every n <= 12.

    By Mazur's theorem a rational torsion point has order at most 12, so a
    True answer proves P has infinite order.
    """
    E.check(P)
    if P.is_identity:
        raise DomainError("the identity has finite order")
    return point_order(E, P) is None


# ------------------------------------------------------------------- torsion

@dataclass(frozen=True)
class TorsionGroup:
    points: tuple[WPoint, ...]
    structure: tuple[int, ...]  # (n,) for Z/n, (2, 2n) for Z/2 x Z/2n

    @property
    def order(self) -> int:
        return len(self.points)

    def label(self) -> str:
        return " x ".join(f"Z/{n}Z" for n in self.structure)


def integral_model(E: WCurve) -> tuple[WCurve, int]:
    """An integral model E' and the scale u with (x, y) on E -> (u^2 x, u^3 y) on E'."""
    u = 1
    for a, w in ((E.a2, 1), (E.a4, 2), (E.a6, 3)):
        d = a.denominator
        for prime, e in factorint(d).items():
            k = -(-e // w)
            cur = 0
            t = u
            while t % prime == 0:
                t //= prime
                cur += 1
            if k > cur:
                u *= prime ** (k - cur)
    return WCurve(E.a2 * u ** 2, E.a4 * u ** 4, E.a6 * u ** 6), u


def _square_divisor_roots(n: int) -> list[int]:
    """All y > 0 with y^2 | n."""
    ys = [1]
    for prime, e in factorint(abs(n)).items():
        ys = [y * prime ** k for y in ys for k in range(e // 2 + 1)]
    return sorted(ys)


def torsion_subgroup(E: WCurve) -> TorsionGroup:
    """Rational torsion via Lutz-Nagell on an integral model."""
    Ei, u = integral_model(E)
    D = int(Ei.cubic_disc)
    cands = [WPoint(x, Fraction(0)) for x in rational_roots(Ei.cubic) if x.denominator == 1]
    for y in _square_divisor_roots(D):
        for x in rational_roots(Ei.cubic - y * y):
            if x.denominator == 1:
                cands += [WPoint(x, Fraction(y)), WPoint(x, Fraction(-y))]
    pts = [IDENTITY]
    for P in cands:
        if point_order(Ei, P) is not None:
            pts.append(WPoint(P.x / u ** 2, P.y / u ** 3))
    n = len(pts)
    two_torsion = sum(1 for P in pts if not P.is_identity and P.y == 0)
    if two_torsion == 3:
        structure = (2, n // 2)
    else:
        structure = (n,)
    pts.sort(key=lambda P: (not P.is_identity, P.x or 0, P.y or 0))
    return TorsionGroup(tuple(pts), structure)


# ------------------------------------------------------------- isomorphisms

@dataclass(frozen=True)
class WIso:
    """(x, y) on the source -> (u^2 x + r, u^3 y) on the target."""

    source: WCurve
    target: WCurve
    u: Fraction
    r: Fraction

    def __call__(self, P: WPoint) -> WPoint:
        if P.is_identity:
            return P
        return WPoint(self.u ** 2 * P.x + self.r, self.u ** 3 * P.y)

    def inverse(self, P: WPoint) -> WPoint:
        if P.is_identity:
            return P
        return WPoint((P.x - self.r) / self.u ** 2, P.y / self.u ** 3)


def _rational_cube_root(r: Fraction) -> Fraction | None:
    s = -1 if r < 0 else 1
    a, b = abs(r.numerator), r.denominator

    def icbrt(n):
        x = round(n ** (1 / 3)) if n < 2 ** 900 else 1 << (n.bit_length() // 3)
        for _ in range(200):
            y = (2 * x + n // max(x * x, 1)) // 3
            if y >= x:
                break
            x = y
        for c in (x - 1, x, x + 1):
            if c >= 0 and c ** 3 == n:
                return c
        return None

    ca, cb = icbrt(a), icbrt(b)
    if ca is None or cb is None:
        return None
    return s * Fraction(ca, cb)


def find_isomorphism(E1: WCurve, E2: WCurve) -> WIso | None:
    """A Q-isomorphism E1 -> E2 of the form (u^2 x + r, u^3 y), or None."""
    if E1.j_invariant != E2.j_invariant:
        return None
    c4a, c6a, c4b, c6b = E1.c4, E1.c6, E2.c4, E2.c6
    # c4 scales by u^4 and c6 by u^6
    if c4a != 0 and c6a != 0:
        usq = [(c6b / c6a) / (c4b / c4a)]
    elif c4a == 0:
        usq = [_rational_cube_root(c6b / c6a)]
    else:
        sq = rational_is_square(c4b / c4a)
        usq = [sq, -sq] if sq is not None else []
    for w in usq:
        if w is None or w <= 0:
            continue
        u = rational_is_square(w)
        if u is None:
            continue
        r = (u * u * E1.a2 - E2.a2) / 3
        if E2.cubic(UniPoly([r, u * u])) == E1.cubic * u ** 6:
            return WIso(E1, E2, u, r)
    return None


# ------------------------------------------------------------ quartic models

@dataclass(frozen=True)
class QuarticCurve:
    """Y^2 = c4 X^4 + c3 X^3 + c2 X^2 + c1 X + c0."""

    poly: UniPoly

    def __init__(self, coeffs):
        g = coeffs if isinstance(coeffs, UniPoly) else UniPoly(coeffs)
        object.__setattr__(self, "poly", g)
        if g.degree not in (3, 4):
            raise DomainError("a quartic model needs degree 3 or 4")
        if poly_discriminant(g) == 0:
            raise DomainError("singular quartic")

    def coeff(self, k: int) -> Fraction:
        return self.poly[k]

    def contains(self, P) -> bool:
        U, V, W = P
        g = self.poly
        return V * V == sum(g[k] * U ** k * W ** (4 - k) for k in range(5))

    def point(self, X: Number, Y: Number) -> tuple:
        return (Q(X), Q(Y), Fraction(1))

    def infinity_points(self) -> list[tuple]:
        s = rational_is_square(self.poly[4])
        if s is None:
            return []
        if s == 0:
            return [(Fraction(1), Fraction(0), Fraction(0))]
        return [(Fraction(1), s, Fraction(0)), (Fraction(1), -s, Fraction(0))]


def qnormalize(P) -> tuple:
    """Canonical (U, V, W): W = 1 for affine points, U = 1 at infinity."""
    U, V, W = (Q(c) for c in P)
    if W != 0:
        return (U / W, V / (W * W), Fraction(1))
    if U == 0:
        raise DomainError("(0, *, 0) is not a point")
    return (Fraction(1), V / (U * U), Fraction(0))


@dataclass(frozen=True)
class CubicModel:
    """A Weierstrass model of a quartic with mutually inverse maps."""

    quartic: QuarticCurve
    base: tuple
    curve: WCurve
    forward: Callable
    inverse: Callable


def quartic_with_point_to_cubic(C: QuarticCurve, P0) -> CubicModel:
    """Weierstrass model of a quartic with a rational point P0.

    P0 is sent to the identity.  Points are weighted triples (U, V, W).  The
    point is first moved to X = 0 (translation, or X -> 1/X when P0 lies at
    infinity); then the classical transformation for v^2 = a u^4 + ... + q^2
    is applied, or u -> 1/u when q = 0.
    """
    P0 = qnormalize(P0)
    if not C.contains(P0):
        raise DomainError(f"{P0} is not on the quartic")
    g = C.poly
    if P0[2] != 0:
        X0 = P0[0]
        local = g.shift(X0)
        q = P0[1]

        def to_local(P):
            U, V, W = qnormalize(P)
            if W == 0:
                return (U, V, W)
            return (U - X0, V, Fraction(1))

        def from_local(P):
            U, V, W = P
            if W == 0:
                return (U, V, W)
            return (U + X0, V, Fraction(1))
    else:
        local = g.reverse(4)
        q = P0[1]

        def to_local(P):
            U, V, W = qnormalize(P)
            if W == 0:
                return (Fraction(0), V, Fraction(1))
            if U == 0:
                return (Fraction(1), V, Fraction(0))
            return (1 / U, V / (U * U), Fraction(1))

        def from_local(P):
            U, V, W = P
            if W == 0:
                return (Fraction(0), V, Fraction(1))
            if U == 0:
                return (Fraction(1), V, Fraction(0))
            return (1 / U, V / (U * U), Fraction(1))

    if q == 0:
        E, fwd, inv = _ramified_model(local)
    else:
        E, fwd, inv = _pointed_model(local, q)

    def forward(P) -> WPoint:
        return fwd(to_local(P))

    def inverse(R: WPoint):
        return from_local(inv(R))

    return CubicModel(C, P0, E, forward, inverse)


def _pointed_model(g: UniPoly, q: Fraction):
    """v^2 = a u^4 + b u^3 + c u^2 + d u + q^2 with q != 0, base (0, q)."""
    a, b, c, d = g[4], g[3], g[2], g[1]
    a1 = d / q
    a2 = c - d * d / (4 * q * q)
    a3 = 2 * q * b
    a4 = -4 * q * q * a
    a6 = a2 * a4
    # complete the square: y' = y + (a1 x + a3)/2
    E = WCurve(a2 + a1 * a1 / 4, a4 + a1 * a3 / 2, a6 + a3 * a3 / 4)
    sqrt_a = rational_is_square(a)

    def lift(x, y):
        return WPoint(x, y + (a1 * x + a3) / 2)

    def fwd(P) -> WPoint:
        u, v, w = P
        if w == 0:
            return lift(2 * q * v, Fraction(0))
        if u == 0:
            if v == q:
                return IDENTITY
            return lift(-a2, a1 * a2 - a3)
        x = (2 * q * (v + q) + d * u) / (u * u)
        y = (4 * q * q * (v + q) + 2 * q * (d * u + c * u * u) - d * d * u * u / (2 * q)) / u ** 3
        return lift(x, y)

    def inv(R: WPoint):
        if R.is_identity:
            return (Fraction(0), q, Fraction(1))
        x = R.x
        y = R.y - (a1 * x + a3) / 2
        if y != 0:
            u = (2 * q * (x + c) - d * d / (2 * q)) / y
            if u == 0:
                return (Fraction(0), -q, Fraction(1))
            v = -q + u * (u * x - d) / (2 * q)
            return (u, v, Fraction(1))
        if x == -a2:
            return (Fraction(0), -q, Fraction(1))
        if sqrt_a is not None and sqrt_a != 0 and x * x == 4 * q * q * a:
            return (Fraction(1), x / (2 * q), Fraction(0))
        raise DomainError(f"no quartic preimage for {R}")

    return E, fwd, inv


def _ramified_model(g: UniPoly):
    """v^2 = a u^4 + b u^3 + c u^2 + d u with d != 0, base (0, 0)."""
    a, b, c, d = g[4], g[3], g[2], g[1]
    if d == 0:
        raise DomainError("singular quartic at the base point")
    E = WCurve(c, b * d, a * d * d)

    def fwd(P) -> WPoint:
        u, v, w = P
        if w == 0:
            return WPoint(Fraction(0), d * v)
        if u == 0:
            return IDENTITY
        return WPoint(d / u, d * v / (u * u))

    def inv(R: WPoint):
        if R.is_identity:
            return (Fraction(0), Fraction(0), Fraction(1))
        if R.x == 0:
            return (Fraction(1), R.y / d, Fraction(0))
        u = d / R.x
        return (u, R.y * u * u / d, Fraction(1))

    return E, fwd, inv


def quartic_to_cubic_sec2(m: Number, c: Number, d: Number, e: Number) -> CubicModel:
    """Weierstrass model of Y^2 = m^2 X^4 + c (dX + e)^2 through the point at
    infinity (1, -m, 0).

    The model is y^2 = x (x^2 + c d^2 x - 4 c e^2 m^2), with
    x = -2m (Y - m X^2) and y = -2m (2 m^2 X^3 - 2 m X Y + c d^2 X + c d e).
    """
    m, c, d, e = (Q(t) for t in (m, c, d, e))
    if m == 0 or c == 0:
        raise DomainError("need m != 0 and c != 0")
    C = QuarticCurve(UniPoly([c * e * e, 2 * c * d * e, c * d * d, 0, m * m]))
    E = WCurve(c * d * d, -4 * c * e * e * m * m, 0)

    def forward(P) -> WPoint:
        U, V, W = qnormalize(P)
        if W == 0:
            if V == -m:
                return IDENTITY
            return WPoint(-c * d * d, 2 * m * c * d * e)
        X, Y = U, V
        return WPoint(-2 * m * (Y - m * X * X),
                      -2 * m * (2 * m * m * X ** 3 - 2 * m * X * Y + c * d * d * X + c * d * e))

    def inverse(R: WPoint):
        if R.is_identity:
            return (Fraction(1), -m, Fraction(0))
        x, y = R.x, R.y
        if x + c * d * d != 0:
            X = (-y / (2 * m) - c * d * e) / (x + c * d * d)
        elif y == 2 * m * c * d * e:
            return (Fraction(1), m, Fraction(0))
        elif d * e != 0:
            X = (c * d ** 4 / (4 * m * m) - e * e) / (2 * d * e)
        else:
            raise DomainError(f"no quartic preimage for {R}")
        return (X, m * X * X - x / (2 * m), Fraction(1))

    return CubicModel(C, (Fraction(1), -m, Fraction(0)), E, forward, inverse)


# ------------------------------------------------- quartic addition recurrences

def chud_on_curve(a2: Number, a0: Number, P) -> bool:
    U, V, W = P
    return V * V == U ** 4 + a2 * U * U * W * W + a0 * W ** 4


def chud_double_printed(a2: Number, a0: Number, P) -> tuple:
    """Doubling with the V-line exactly as printed; kept for comparison only.

    The printed line V = V^4 - (a2^2 - 4 a0) U^2 W^2 is not homogeneous and
    already fails the curve equation for [4](1, 2) on Y^2 = X^4 + 3.
    """
    U, V, W = (Q(c) for c in P)
    a2, a0 = Q(a2), Q(a0)
    return (U ** 4 - a0 * W ** 4, V ** 4 - (a2 * a2 - 4 * a0) * U ** 2 * W ** 2, 2 * U * V * W)


def chud_double(a2: Number, a0: Number, P) -> tuple:
    """[2]P on Y^2 = X^4 + a2 X^2 + a0, with X = U/W and Y = V/W^2.

    A result with W = 0 is a point at infinity.
    """
    U, V, W = (Q(c) for c in P)
    a2, a0 = Q(a2), Q(a0)
    if not chud_on_curve(a2, a0, (U, V, W)):
        raise DomainError(f"{P} is not on Y^2 = X^4 + {a2} X^2 + {a0}")
    return (U ** 4 - a0 * W ** 4,
            V ** 4 - (a2 * a2 - 4 * a0) * U ** 4 * W ** 4,
            2 * U * V * W)


def chud_add_odd(a2: Number, a0: Number, Pi, Pi1, P1) -> tuple:
    """[2i+1]P1 from [i]P1 and [i+1]P1.

    The recurrences divide by U1, V1 and W1; when one of them vanishes a
    DomainError asks the caller to go through a Weierstrass model instead.
    """
    a2, a0 = Q(a2), Q(a0)
    Ui, Vi, Wi = (Q(c) for c in Pi)
    Uj, Vj, Wj = (Q(c) for c in Pi1)
    U1, V1, W1 = (Q(c) for c in P1)
    if U1 == 0 or V1 == 0 or W1 == 0:
        raise DomainError("U1*V1*W1 = 0: use the Weierstrass path (chud_multiples)")
    disc = a2 * a2 - 4 * a0
    U = (Ui ** 2 * Uj ** 2 - a0 * Wi ** 2 * Wj ** 2) / U1
    W = (Ui ** 2 * Wj ** 2 - Uj ** 2 * Wi ** 2) / W1
    V = (Vi ** 2 * Vj ** 2 - disc * Ui ** 2 * Uj ** 2 * Wi ** 2 * Wj ** 2) / V1
    return (U, V, W)


CHUD_IDENTITY = (Fraction(1), Fraction(1), Fraction(0))


def chud_multiples(a2: Number, a0: Number, P1, n: int) -> list[tuple]:
    """[0]P1 .. [n]P1 as normalized triples.

    Uses the doubling/odd recurrences when U1 V1 W1 != 0 and otherwise the
    group law of a Weierstrass model based at the infinity branch (1, 1, 0).
    """
    a2, a0 = Q(a2), Q(a0)
    P1 = qnormalize(P1)
    if not chud_on_curve(a2, a0, P1):
        raise DomainError(f"{P1} is not on the quartic")
    if P1[0] == 0 or P1[1] == 0 or P1[2] == 0:
        model = quartic_with_point_to_cubic(QuarticCurve([a0, 0, a2, 0, 1]), CHUD_IDENTITY)
        G = model.forward(P1)
        return [model.inverse(w_mul(model.curve, k, G)) for k in range(n + 1)]
    pts = {0: CHUD_IDENTITY, 1: P1}
    for k in range(2, n + 1):
        i = k // 2
        if k % 2 == 0:
            pts[k] = chud_double(a2, a0, pts[i])
        else:
            pts[k] = chud_add_odd(a2, a0, pts[i], pts[i + 1], P1)
    return [qnormalize(pts[k]) for k in range(n + 1)]
