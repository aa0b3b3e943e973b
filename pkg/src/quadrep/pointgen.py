"""Streams of verified surface points, bounded representation search and the
two small searches used by the demos.

Points are produced by taking multiples of a generator on a Weierstrass model
of the auxiliary curve, pulling them back to the quartic and pushing them
through the construction's map.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .constructions.base import Construction, Model, QuadForm, SurfacePoint, apply_psi, reduced_model
from .constructions.sec2 import derive_G_sec2
from .elliptic import (
    CubicModel,
    QuarticCurve,
    WCurve,
    WIso,
    WPoint,
    certify_infinite_order,
    find_isomorphism,
    quartic_with_point_to_cubic,
    w_mul,
)
from .exact_arith import DomainError, Number, Q, UniPoly, poly_discriminant, q_to_str, squarefree_part

log = logging.getLogger(__name__)


@dataclass
class AuxModel:
    """The auxiliary curve in reduced form, a base point on it and its cubic model."""

    model: Model
    quartic: QuarticCurve
    cubic: CubicModel


def small_points(g: UniPoly, height: int = 30):
    """Affine points (u, w) of w^2 = g(u) with u = n/d, |n|, d <= height."""
    from .exact_arith import rational_is_square
    seen = set()
    for d in range(1, height + 1):
        for n in range(-height, height + 1):
            u = Fraction(n, d)
            if u in seen:
                continue
            seen.add(u)
            w = rational_is_square(g(u))
            if w is not None:
                yield u, w


def aux_model(con: Construction, base=None) -> AuxModel:
    """Cubic model of the reduced auxiliary curve, based at `base`
    (a point (u, w) or a weighted triple on the reduced quartic).  Without a
    base the first small point found is used."""
    model = reduced_model(con.g)
    C = QuarticCurve(model.g)
    if base is None:
        pts = C.infinity_points()
        if not pts:
            first = next(small_points(model.g), None)
            if first is None:
                raise DomainError("no small rational point on the auxiliary curve")
            pts = [(first[0], first[1], Fraction(1))]
        base = pts[0]
    elif len(base) == 2:
        base = (Q(base[0]), Q(base[1]), Fraction(1))
    return AuxModel(model, C, quartic_with_point_to_cubic(C, base))


@dataclass
class PointStream:
    construction: Construction
    generator: WPoint
    curve: WCurve
    emitted: list = field(default_factory=list)
    distinct_projections: set = field(default_factory=set)
    multiples: list = field(default_factory=list)   # the index n behind each emitted point
    skipped: list = field(default_factory=list)

    def add(self, P: SurfacePoint, n: int) -> bool:
        v = self.construction.projection_value(P)
        if v in self.distinct_projections:
            return False
        if not independent_check(self.construction, P):
            raise DomainError(f"point {P} fails the independent surface check")
        self.distinct_projections.add(v)
        self.emitted.append(P)
        self.multiples.append(n)
        return True

    def to_json(self) -> list[dict]:
        return [P.to_json() for P in self.emitted]


def independent_check(con: Construction, P: SurfacePoint) -> bool:
    """Both sides of the surface equation from scratch."""
    lhs_form = con.form.a * P.p * P.p + con.form.b * P.q * P.q + con.form.c
    if con.projection == "X":
        return lhs_form * lhs_form == sum(c * P.coord ** k for k, c in enumerate(con.f.coeffs))
    return P.coord * P.coord == sum(c * lhs_form ** k for k, c in enumerate(con.f.coeffs))


def generate(con: Construction, gen: WPoint | None, count: int, curve: WCurve | None = None,
             base=None, am: AuxModel | None = None) -> PointStream:
    """At least `count` verified surface points with distinct projections.

    gen lies on `curve` (default: the cubic model from aux_model(con, base));
    if `curve` is another model of the same curve an isomorphism is found.
    With gen=None and count=1 the construction's own base point is returned.
    """
    if count < 1:
        raise DomainError("count must be at least 1")
    if gen is None:
        p0, q0, c0 = con.base
        if c0 is None or count != 1:
            raise DomainError("a generator is needed")
        stream = PointStream(con, gen, curve)
        stream.add(con.surface_point(p0, q0, c0), 0)
        return stream
    am = am or aux_model(con, base)
    E = curve or am.cubic.curve
    iso = None
    if E != am.cubic.curve:
        iso = find_isomorphism(E, am.cubic.curve)
        if iso is None:
            raise DomainError("the generator's curve is not isomorphic to the auxiliary model")
    E.check(gen)
    if not certify_infinite_order(E, gen):
        raise DomainError(f"{gen} is a torsion point")
    stream = PointStream(con, gen, E)
    for n in range(1, 12 * count + 1):
        S = w_mul(E, n, gen)
        R = iso(S) if iso else S
        try:
            U, V, W = am.cubic.inverse(R)
            if W == 0:
                raise DomainError("point at infinity of the quartic")
            u, w = am.model.to_aux(U / W, V / (W * W))
            pts = apply_psi(con, u, w)
        except (DomainError, ZeroDivisionError) as exc:
            log.info("multiple %d skipped: %s", n, exc)
            stream.skipped.append(n)
            continue
        for P in pts:
            stream.add(P, n)
        if len(stream.distinct_projections) >= count:
            return stream
    if not stream.emitted:
        raise DomainError(f"map undefined at the first {12 * count} multiples")
    return stream


def generator_from_quartic(am: AuxModel, point) -> WPoint:
    """Image on the cubic model of a point (u, w) of the reduced quartic."""
    if len(point) == 2:
        point = (Q(point[0]), Q(point[1]), Fraction(1))
    return am.cubic.forward(point)


# ------------------------------------------------------------ representation

def represent_bounded(value: Number, form: QuadForm, height: int):
    """Some (p, q) with a p^2 + b q^2 + c = value, all numerators and
    denominators at most `height`; None means none was found within the bound."""
    if height < 1:
        raise DomainError("height must be at least 1")
    value = Q(value)
    a, b, c = form.a, form.b, form.c
    t = value - c
    for d in range(1, height + 1):
        # a P^2 + b Q^2 = t d^2 with integers P, Q
        N = t * d * d
        for P in range(0, height + 1):
            rest = (N - a * P * P) / b
            if rest < 0 or rest.denominator != 1:
                continue
            r = isqrt(rest.numerator)
            if r * r == rest.numerator and r <= height:
                p, q = Fraction(P, d), Fraction(r, d)
                if a * p * p + b * q * q + c == value:
                    return p, q
    return None


# -------------------------------------------------------- demo computations

CZ_QUARTIC = UniPoly([11, 0, 12, 0, 1])      # (X^2 + 1)(X^2 + 11)
CZ_GENERATOR = (Fraction(1, 2), Fraction(15, 4))


def cz_demo(n: int = 4, probe_height: int = 40) -> dict:
    """Multiples of (1/2, 15/4) on Y^2 = (X^2 + 1)(X^2 + 11), their heights,
    a bounded probe of Y = 15(P^2 - 5Q^2), and the genus of the curve the
    first construction attaches to this quartic."""
    if n > 12:
        raise DomainError("n is capped at 12 to keep the heights printable")
    C = QuarticCurve(CZ_QUARTIC)
    X1, Y1 = CZ_GENERATOR
    verified = C.contains((X1, Y1, Fraction(1)))
    cm = quartic_with_point_to_cubic(C, (Fraction(1), Fraction(1), Fraction(0)))
    G = cm.forward((X1, Y1, Fraction(1)))
    rows = []
    form = QuadForm(1, -5)
    for k in range(1, n + 1):
        U, V, W = cm.inverse(w_mul(cm.curve, k, G))
        if W == 0:
            rows.append({"k": k, "X": "infinity"})
            continue
        X, Y = U / W, V / (W * W)
        rep = represent_bounded(Y / 15, form, probe_height)
        rows.append({"k": k, "X": X, "Y": Y, "on_curve": C.contains((X, Y, Fraction(1))),
                     "bits": max(abs(Y.numerator).bit_length(), Y.denominator.bit_length()),
                     "representation": rep})
    # The first construction with b = -5 and base (1, 0) gives a sextic
    # whose discriminant is nonzero: the auxiliary curve has genus 2.
    sextic = derive_G_sec2(11, 0, 12, -5, 1, 0)
    return {"generator": CZ_GENERATOR, "generator_verified": verified, "cubic_model": cm.curve,
            "generator_infinite_order": certify_infinite_order(cm.curve, G), "rows": rows,
            "sextic": sextic, "sextic_degree": sextic.degree,
            "sextic_discriminant": poly_discriminant(sextic)}


def search_integer_points_u(bound: int) -> list[tuple[int, int]]:
    """Integer points (u, v), v >= 0, |u| <= bound on v^2 = u(u + 2)(u + 6)."""
    if bound < 1:
        raise DomainError("range must be at least 1")
    out = []
    for u in range(-bound, bound + 1):
        r = u * (u + 2) * (u + 6)
        if r < 0:
            continue
        v = isqrt(r)
        if v * v == r:
            out.append((u, v))
    return out


def square_classes_of_2u(points) -> dict[int, int]:
    """u -> squarefree part of 2u for the points with u != 0."""
    return {u: squarefree_part(2 * u) for u, _ in points if u != 0}


def u_from_curve_point(b: Number, U: Number, W: Number) -> tuple[Fraction, Fraction]:
    """(u, v) = (2 b U^2, 2 U W): a point of W^2 = 2b(bU^2+1)(bU^2+3) gives a
    point of v^2 = u(u+2)(u+6)."""
    b, U, W = Q(b), Q(U), Q(W)
    return 2 * b * U * U, 2 * U * W
