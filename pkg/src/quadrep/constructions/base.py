"""Shared machinery for the family builders.

Every family substitutes p, q and the curve coordinate as polynomials in an
auxiliary parameter T whose coefficients depend on the curve variable U.
After removing the forced power of T, what is left is a quadratic
c0(U) + c1(U) T + c2(U) T^2.  Its discriminant equals kappa(U)^2 * g(U) for
the auxiliary quartic g, so T = (-c1 + kappa w) / (2 c2) on w^2 = g(U) and
every coordinate becomes (A(U) + B(U) w) / D(U).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from sympy import factorint

from ..exact_arith import (
    DomainError,
    NestedPoly,
    Number,
    Q,
    UniPoly,
    compose_nested,
    poly_discriminant,
    poly_gcd,
    poly_sqrt,
    q_to_str,
    rational_is_square,
)

PROJ_X = "X"
PROJ_Y = "Y"


@dataclass(frozen=True)
class QuadForm:
    """a p^2 + b q^2 + c."""

    a: Fraction
    b: Fraction
    c: Fraction = Fraction(0)

    def __post_init__(self):
        for k in ("a", "b", "c"):
            object.__setattr__(self, k, Q(getattr(self, k)))
        if self.a * self.b == 0:
            raise DomainError("quadratic form needs ab != 0")

    def __call__(self, p: Number, q: Number) -> Fraction:
        return self.a * Q(p) ** 2 + self.b * Q(q) ** 2 + self.c

    @property
    def irreducible(self) -> bool:
        return rational_is_square(-self.b / self.a) is None


@dataclass(frozen=True)
class SurfacePoint:
    p: Fraction
    q: Fraction
    coord: Fraction
    verified: bool
    projection: str = PROJ_X

    def to_json(self) -> dict:
        return {
            "p": q_to_str(self.p),
            "q": q_to_str(self.q),
            self.projection: q_to_str(self.coord),
            "verified": self.verified,
        }


# ------------------------------------------------------- quadratic extension

@dataclass(frozen=True)
class QuadElt:
    """(A + B w) / D with A, B, D in Q[U] and w^2 = g(U)."""

    A: UniPoly
    B: UniPoly
    D: UniPoly

    @staticmethod
    def const(c) -> "QuadElt":
        c = c if isinstance(c, UniPoly) else UniPoly([c])
        return QuadElt(c, UniPoly(), UniPoly([1]))

    def add(self, other: "QuadElt") -> "QuadElt":
        if self.D == other.D:
            return QuadElt(self.A + other.A, self.B + other.B, self.D)
        return QuadElt(self.A * other.D + other.A * self.D,
                       self.B * other.D + other.B * self.D,
                       self.D * other.D)

    def mul(self, other: "QuadElt", g: UniPoly) -> "QuadElt":
        return QuadElt(self.A * other.A + self.B * other.B * g,
                       self.A * other.B + self.B * other.A,
                       self.D * other.D)

    def scale(self, c: UniPoly) -> "QuadElt":
        return QuadElt(self.A * c, self.B * c, self.D)

    def __call__(self, u: Number, w: Number) -> Fraction:
        d = self.D(u)
        if d == 0:
            raise DomainError(f"pole of the map at U = {q_to_str(Q(u))}")
        return (self.A(u) + self.B(u) * Q(w)) / d


def nested_in_quad(N: NestedPoly, T: QuadElt, g: UniPoly) -> QuadElt:
    """Substitute T into a polynomial in T with U-coefficients."""
    acc = QuadElt.const(0)
    for c in reversed(N.coeffs):
        acc = acc.mul(T, g).add(QuadElt.const(c))
    return acc


@dataclass(frozen=True)
class PsiRep:
    """The map psi with every coordinate written as (A + B w)/D."""

    p: QuadElt
    q: QuadElt
    coord: QuadElt


# ------------------------------------------------------------- construction

@dataclass(frozen=True)
class Construction:
    family: str
    params: dict
    form: QuadForm
    m: Fraction
    f: UniPoly
    g: UniPoly
    projection: str
    base: tuple
    var: str = "U"
    psi_rep: PsiRep | None = None
    extra: dict = field(default_factory=dict)

    @property
    def b(self) -> Fraction:
        return self.form.b

    def surface_residual(self, p: Number, q: Number, coord: Number) -> Fraction:
        """Left minus right side of the surface equation."""
        val = self.form(p, q)
        if self.projection == PROJ_X:
            return val * val - self.f(Q(coord))
        return Q(coord) ** 2 - self.f(val)

    def on_surface(self, p, q, coord) -> bool:
        return self.surface_residual(p, q, coord) == 0

    def on_aux(self, u: Number, w: Number) -> bool:
        return Q(w) ** 2 == self.g(Q(u))

    def surface_point(self, p, q, coord) -> SurfacePoint:
        p, q, coord = Q(p), Q(q), Q(coord)
        return SurfacePoint(p, q, coord, self.on_surface(p, q, coord), self.projection)

    def projection_value(self, P: SurfacePoint) -> Fraction:
        return P.coord

    def summary(self) -> dict:
        return {
            "family": self.family,
            "params": {k: q_to_str(v) for k, v in self.params.items()},
            "form": [q_to_str(self.form.a), q_to_str(self.form.b), q_to_str(self.form.c)],
            "m": q_to_str(self.m),
            "f": self.f.to_json(),
            "g": self.g.to_json(),
            "var": self.var,
            "projection": self.projection,
        }


def check_nonsingular(con_f: UniPoly, g: UniPoly) -> None:
    if con_f.degree < 1 or poly_discriminant(con_f) == 0:
        raise DomainError("the surface polynomial f has a repeated root")
    if g.degree < 3 or poly_discriminant(g) == 0:
        raise DomainError("the auxiliary curve is singular (not genus 1)")


# ---------------------------------------------------------------- elimination

@dataclass(frozen=True)
class Elimination:
    """Result of substituting a T-family into a surface equation."""

    residual: NestedPoly
    shift: int
    quad: tuple  # (c0, c1, c2) in Q[U]

    @property
    def disc(self) -> UniPoly:
        c0, c1, c2 = self.quad
        return c1 * c1 - c0 * c2 * 4


def eliminate(residual: NestedPoly) -> Elimination:
    """Strip the forced power of T and return the remaining quadratic."""
    k = 0
    while k <= residual.degree and residual[k].is_zero():
        k += 1
    rest = [residual[i] for i in range(k, residual.degree + 1)]
    if len(rest) != 3:
        raise DomainError(f"expected a quadratic in T after removing T^{k}, got degree {len(rest) - 1}")
    return Elimination(residual, k, tuple(rest))


def surface_residual_nested(form: QuadForm, f: UniPoly, p: NestedPoly, q: NestedPoly,
                            coord: NestedPoly, projection: str) -> NestedPoly:
    val = p * p * form.a + q * q * form.b + form.c
    if projection == PROJ_X:
        return val * val - compose_nested(f, coord)
    return coord * coord - compose_nested(f, val)


def kappa_for(disc: UniPoly, g: UniPoly) -> UniPoly:
    """kappa with disc = kappa^2 * g; fails if g is not the right twist."""
    h, r = divmod(disc, g)
    if not r.is_zero():
        raise DomainError("auxiliary quartic does not divide the T-discriminant")
    k = poly_sqrt(h)
    if k is None:
        raise DomainError("T-discriminant / auxiliary quartic is not a square")
    return k


def psi_from_elimination(el: Elimination, g: UniPoly, p: NestedPoly, q: NestedPoly,
                         coord: NestedPoly) -> PsiRep:
    c0, c1, c2 = el.quad
    kappa = kappa_for(el.disc, g)
    T = QuadElt(-c1, kappa, c2 * 2)
    return PsiRep(nested_in_quad(p, T, g), nested_in_quad(q, T, g), nested_in_quad(coord, T, g))


def apply_psi(con: Construction, u: Number, w: Number, both: bool = True) -> list[SurfacePoint]:
    """Surface points over (u, w) and, when both is set, over (u, -w)."""
    u, w = Q(u), Q(w)
    if not con.on_aux(u, w):
        raise DomainError(f"({q_to_str(u)}, {q_to_str(w)}) is not on the auxiliary curve")
    rep = con.psi_rep
    out = []
    for ww in ((w, -w) if both and w != 0 else (w,)):
        pt = con.surface_point(rep.p(u, ww), rep.q(u, ww), rep.coord(u, ww))
        if not pt.verified:
            raise DomainError(f"psi produced an off-surface point {pt}")
        if pt not in out:
            out.append(pt)
    return out


# ------------------------------------------------------------ fiber guard

def _strip_common(poly: UniPoly, D: UniPoly) -> UniPoly:
    while poly.degree > 0 and D.degree > 0:
        h = poly_gcd(poly, D)
        if h.degree < 1:
            break
        poly = poly.exact_div(h)
    return poly


def fiber_polynomial(con: Construction, value: Number) -> UniPoly:
    """Polynomial in U vanishing at every curve point whose image has form value ``value``."""
    rep = con.psi_rep
    g = con.g
    p2 = rep.p.mul(rep.p, g)
    q2 = rep.q.mul(rep.q, g)
    form = con.form
    val = p2.scale(UniPoly([form.a])).add(q2.scale(UniPoly([form.b])))
    if form.c:
        val = val.add(QuadElt.const(form.c))
    value = Q(value)
    lhs = val.D * value - val.A
    if val.B.is_zero():
        poly = lhs
    else:
        poly = lhs * lhs - val.B * val.B * g
    if poly.is_zero():
        raise DomainError("fiber polynomial vanishes identically")
    poly = _strip_common(poly, rep.p.D * rep.q.D)
    return poly.monic()


# ---------------------------------------------------------- reduced models

@dataclass(frozen=True)
class Model:
    """g(mu * u') = k^2 * g_model(u'); a model point (u', V') is (mu u', k V')."""

    g: UniPoly
    mu: Fraction
    k: Fraction

    def to_aux(self, u, V) -> tuple:
        return (self.mu * Q(u), self.k * Q(V))

    def from_aux(self, u, w) -> tuple:
        return (Q(u) / self.mu, Q(w) / self.k)


def _square_part(n: int) -> int:
    s = 1
    for prime, e in factorint(abs(n)).items():
        s *= prime ** (e // 2)
    return s


def _height(g: UniPoly) -> int:
    return max(abs(c.numerator) for c in g.coeffs)


def reduced_model(g: UniPoly) -> Model:
    """Integral model of w^2 = g(u) with small coefficients.

    Clears denominators by a square, removes the largest square content and
    then tries u -> p u or u -> u/p for primes dividing the end coefficients,
    keeping a step only if it lowers the largest coefficient.
    """
    den = 1
    for c in g.coeffs:
        den = lcm(den, c.denominator)
    mu, k = Fraction(1), Fraction(1, den)
    cur = g * (den * den)

    def strip(poly, k):
        cont = 0
        for c in poly.coeffs:
            cont = gcd(cont, int(c))
        s = _square_part(cont)
        return poly / (s * s), k * s

    cur, k = strip(cur, k)
    improved = True
    while improved:
        improved = False
        primes = {2, 3, 5}
        for c in (cur[0], cur[cur.degree]):
            if c:
                primes.update(factorint(abs(int(c))).keys())
        for p in sorted(primes):
            # u -> p u (divide by p^2) or u -> u / p (multiply by p^2)
            for lam, factor, kf in ((Fraction(p), Fraction(1, p * p), p), (Fraction(1, p), Fraction(p * p), Fraction(1, p))):
                cand = cur.scale_var(lam) * factor
                if any(c.denominator != 1 for c in cand.coeffs):
                    continue
                cand, new_k = strip(cand, k * kf)
                if _height(cand) < _height(cur):
                    cur, k, mu = cand, new_k, mu * lam
                    improved = True
                    break
            if improved:
                break
    return Model(cur, mu, k)

