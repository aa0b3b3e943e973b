"""Closed-form discriminant and resultant identities, checked by exact
evaluation at random rational specializations.

Each record samples an admissible parameter tuple, evaluates both sides
exactly and compares.  Tuples where the right side vanishes are rejected, so a
pass is never the trivial 0 = 0.  When the ratio lhs/rhs is a constant other
than 1 across every trial the identity is reported with that constant as a
convention delta instead of as a failure.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .constructions.sec2 import derive_G_sec2
from .constructions.sec3 import L4, build_sec3_case2, sextic_F2F4
from .constructions.sec4 import H_sec4, derive_F_sec4
from .constructions.sec5 import case1_k, derive_H1H2_sec5, g2_poly, h23_poly, sec5_invariants
from .exact_arith import DomainError, UniPoly, poly_discriminant, poly_resultant, q_to_str

MAX_ATTEMPTS = 10_000


def random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    """Numerator and denominator uniform in [-bound, bound] (denominator nonzero)."""
    den = 0
    while den == 0:
        den = rng.randint(-bound, bound)
    return Fraction(rng.randint(-bound, bound), den)


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    statement: str
    params: tuple[str, ...]
    lhs: Callable[..., Fraction]
    rhs: Callable[..., Fraction]
    admissible: Callable[..., bool] = lambda **kw: True
    depends: tuple[str, ...] = ()
    smoke: dict = field(default_factory=dict)

    def evaluate(self, values: dict) -> tuple[Fraction, Fraction]:
        return self.lhs(**values), self.rhs(**values)


@dataclass
class IdentityReport:
    id: str
    trials: int
    passed: int
    status: str              # "pass", "convention-delta" or "fail"
    delta: Fraction | None
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json(self) -> dict:
        return {"id": self.id, "trials": self.trials, "passed": self.passed, "status": self.status,
                "delta": None if self.delta is None else q_to_str(self.delta),
                "counterexamples": self.counterexamples}


# --------------------------------------------------------------- the sides

def _m(p0, q0, b, a=1):
    return a * p0 * p0 + b * q0 * q0


def _i1_lhs(a0, a1, a2, b, p0, q0):
    return poly_discriminant(derive_G_sec2(a0, a1, a2, b, p0, q0))


def _i1_rhs(a0, a1, a2, b, p0, q0):
    m = _m(p0, q0, b)
    f = UniPoly([a0, a1, a2, 0, m * m])
    return 2 ** 21 * b ** 15 * (a1 * a1 - 4 * a0 * a2) * m * m * poly_discriminant(f) ** 2


def _i2_lhs(b, p0, q0, r0, a2):
    return poly_discriminant(sextic_F2F4(b, p0, q0, r0, a2))


def _i2_rhs(b, p0, q0, r0, a2):
    m = _m(p0, q0, b)
    a0 = m * m - r0 ** 4 - a2 * r0 * r0
    last = (16 * a0 ** 3 + 32 * a0 ** 2 * a2 * r0 ** 2 + 16 * a0 ** 2 * r0 ** 4 + 24 * a0 * a2 ** 2 * r0 ** 4
            - a2 ** 4 * r0 ** 4 + 32 * a0 * a2 * r0 ** 6 + 16 * a0 * r0 ** 8)
    return (2 ** 56 * a0 ** 2 * b ** 15 * m ** 34 * r0 ** 50 * (a2 + 2 * r0 ** 2) ** 31
            * (a2 * a2 - 4 * a0) ** 4 * (2 * a0 + a2 * r0 * r0) * last)


def _i3_lhs(b, p0, q0, r0):
    return poly_discriminant(L4(b, p0, q0, r0))


def _i3_rhs(b, p0, q0, r0):
    m = _m(p0, q0, b)
    a0 = -(m * m - r0 ** 4)
    return -(2 ** 8) * b ** 6 * m ** 14 * r0 ** 8 * a0 ** 3


def _i4_lhs(b, p0, q0, r0):
    return poly_discriminant(build_sec3_case2(b, p0, q0, r0).g)


def _i4_rhs(b, p0, q0, r0):
    m = _m(p0, q0, b)
    return -(2 ** 14) * b ** 12 * m * m * q0 ** 12 * (m * m + r0 ** 4) ** 2


def _i5_lhs(b, c, p0, q0, A1, A2, A3, A4):
    return poly_discriminant(derive_F_sec4(b, c, p0, q0, A1, A2, A3, A4)[3])


def _i5_rhs(b, c, p0, q0, A1, A2, A3, A4):
    m = _m(p0, q0, b) + c
    f = UniPoly([m * m, A1, A2, A3, A4])
    return (-(2 ** 42) * b ** 15 * q0 ** 30 * (m - c) ** 12 * m ** 12 * poly_discriminant(f) ** 2
            * H_sec4(b, c, p0, q0, A1, A2, A3, A4))


_H_CACHE: dict = {}


def _H(a, b, p0, q0, Y0, c1, c2):
    key = (a, b, p0, q0, Y0, c1, c2)
    if key not in _H_CACHE:
        if len(_H_CACHE) > 256:
            _H_CACHE.clear()
        _H_CACHE[key] = derive_H1H2_sec5(a, b, p0, q0, Y0, c1, c2)
    return _H_CACHE[key]


def _f5(a, b, p0, q0, Y0, c1, c2):
    m = _m(p0, q0, b, a)
    return UniPoly([Y0 * Y0 - (m ** 3 + c2 * m * m + c1 * m), c1, c2, 1])


def _i6_lhs(**kw):
    return poly_discriminant(_H(**kw)[0])


def _i6_rhs(a, b, p0, q0, Y0, c1, c2):
    v = sec5_invariants(a, b, p0, q0, Y0, c1, c2)
    return 2 ** 12 * (a * b) ** 6 * v["m"] ** 4 * v["y0"] ** 10 * v["h11"] * v["h12"] ** 2 * v["h13"]


def _i7_lhs(**kw):
    return poly_discriminant(_H(**kw)[1])


def _i7_rhs(a, b, p0, q0, Y0, c1, c2):
    v = sec5_invariants(a, b, p0, q0, Y0, c1, c2)
    df = poly_discriminant(_f5(a, b, p0, q0, Y0, c1, c2))
    return 2 ** 6 * (a * b) ** 15 * v["m"] ** 12 * v["y0"] ** 21 * df ** 2 * v["h21"] ** 8 * v["h23"]


def _i8_lhs(**kw):
    H1, H2 = _H(**kw)
    return poly_resultant(H1, H2)


def _i8_rhs(a, b, p0, q0, Y0, c1, c2):
    v = sec5_invariants(a, b, p0, q0, Y0, c1, c2)
    return (a * b) ** 12 * v["m"] ** 12 * v["y0"] ** 16 * v["g1"] ** 8 * v["g2"] ** 2


def _i9_lhs(m, y0, c1, c2):
    Z = 3 * m * m + 2 * c2 * m + c1
    return 8 * y0 * y0 - 4 * (3 * m + c2) * y0 * Z + Z ** 3


def _i9_rhs(m, y0, c1, c2):
    Z = 3 * m * m + 2 * c2 * m + c1
    return 8 * y0 * y0 - 4 * (3 * m + c2) * Z * y0 + Z ** 3


def _i10_lhs(**kw):
    H1, H2 = _H(**kw)
    return poly_discriminant(H1 * H2)


def _i10_rhs(**kw):
    H1, H2 = _H(**kw)
    return poly_discriminant(H1) * poly_discriminant(H2) * poly_resultant(H1, H2) ** 2


def _i11_lhs(A, B, t):
    return poly_discriminant(UniPoly(case1_k(A, B, t)) * (A * B * t))


def _i11_rhs(A, B, t):
    m = A + B
    return 16 * (A * B * m * t) ** 12 * (1 + t) ** 6 * (4 + t) ** 2 * (1 - 2 * t)


def _f_case3(m, y0, u):
    c1 = ((2 * (9 * m * m + u) * y0 ** 3 - 5 * m * u * (4 * m * m + u) * y0 ** 2
           + 2 * m * m * u * u * (3 * m * m + 2 * u) * y0 - m ** 3 * u ** 4)
          / (2 * (m * u - y0) ** 2 * y0))
    c2 = (u - 3 * m * m - c1) / (2 * m)
    c0 = y0 - (m ** 3 + c2 * m * m + c1 * m)
    return UniPoly([c0, c1, c2, 1])


def _i12_lhs(m, y0, u):
    return poly_discriminant(_f_case3(m, y0, u))


def _i12_rhs(m, y0, u):
    f = _f_case3(m, y0, u)
    c2, c1 = f[2], f[1]
    Z = 3 * m * m + 2 * c2 * m + c1
    return -g2_poly(m, c2, Z)(y0)


def _i13_lhs(m, c1, c2):
    Z = 3 * m * m + 2 * c2 * m + c1
    return poly_resultant(g2_poly(m, c2, Z), h23_poly(m, c2, Z))


def _i13_rhs(m, c1, c2):
    return ((4 * c1 - c2 * c2) * (c1 + 2 * c2 * m + 3 * m * m) ** 10
            * (16 * c1 * c1 - 8 * c1 * c2 * c2 + c2 ** 4 - 16 * c1 * c2 * m + 6 * c2 ** 3 * m + 3 * c1 * m * m) ** 2)


def _sec5_ok(a, b, p0, q0, Y0, c1, c2):
    return a != 0 and b != 0 and Y0 != 0 and _m(p0, q0, b, a) != 0 and (p0, q0) != (0, 0)


_SEC5 = ("a", "b", "p0", "q0", "Y0", "c1", "c2")
_SEC5_SMOKE = dict(a=1, b=2, p0=1, q0=1, Y0=3, c1=1, c2=2)

CATALOG: list[IdentityRecord] = [
    IdentityRecord("I1", "Disc_U(G) = 2^21 b^15 (a1^2 - 4 a0 a2) m^2 Disc_X(f)^2",
                   ("a0", "a1", "a2", "b", "p0", "q0"), _i1_lhs, _i1_rhs,
                   lambda a0, a1, a2, b, p0, q0: p0 != 0 and b != 0 and _m(p0, q0, b) != 0,
                   ("derive_G_sec2",), dict(a0=1, a1=2, a2=3, b=2, p0=1, q0=1)),
    IdentityRecord("I2", "Disc_u(F2 F4) = 2^56 a0^2 b^15 m^34 r0^50 (a2 + 2r0^2)^31 (a2^2 - 4a0)^4 (2a0 + a2 r0^2) (16a0^3 + ...)",
                   ("b", "p0", "q0", "r0", "a2"), _i2_lhs, _i2_rhs,
                   lambda b, p0, q0, r0, a2: b != 0 and r0 != 0 and a2 + 2 * r0 * r0 != 0 and _m(p0, q0, b) != 0,
                   ("sextic_F2F4",), dict(b=2, p0=1, q0=1, r0=1, a2=1)),
    IdentityRecord("I3", "Disc(L4) = -2^8 b^6 m^14 r0^8 a0^3", ("b", "p0", "q0", "r0"), _i3_lhs, _i3_rhs,
                   lambda b, p0, q0, r0: b != 0 and r0 != 0, ("L4",), dict(b=3, p0=1, q0=1, r0=1)),
    IdentityRecord("I4", "Disc of the second-case quartic = -2^14 b^12 m^2 q0^12 (m^2 + r0^4)^2",
                   ("b", "p0", "q0", "r0"), _i4_lhs, _i4_rhs,
                   lambda b, p0, q0, r0: b != 0 and q0 != 0 and r0 != 0 and _m(p0, q0, b) != 0,
                   ("build_sec3_case2",), dict(b=2, p0=1, q0=1, r0=1)),
    IdentityRecord("I5", "Disc_U(G) = -2^42 b^15 q0^30 (m - c)^12 m^12 Disc_X(f)^2 H",
                   ("b", "c", "p0", "q0", "A1", "A2", "A3", "A4"), _i5_lhs, _i5_rhs,
                   lambda b, c, p0, q0, **_: b != 0 and q0 != 0 and _m(p0, q0, b) + c != 0 and _m(p0, q0, b) != 0,
                   ("derive_F_sec4", "H_sec4"), dict(b=1, c=1, p0=1, q0=1, A1=2, A2=2, A3=1, A4=3)),
    IdentityRecord("I6", "Disc_U(H1) = 2^12 (ab)^6 m^4 y0^10 h11 h12^2 h13", _SEC5, _i6_lhs, _i6_rhs,
                   _sec5_ok, ("derive_H1H2_sec5",), _SEC5_SMOKE),
    IdentityRecord("I7", "Disc_U(H2) = 2^6 (ab)^15 m^12 y0^21 Disc_X(f)^2 h21^8 h23", _SEC5, _i7_lhs, _i7_rhs,
                   _sec5_ok, ("derive_H1H2_sec5",), _SEC5_SMOKE),
    IdentityRecord("I8", "Res_U(H1, H2) = (ab)^12 m^12 y0^16 g1^8 g2^2", _SEC5, _i8_lhs, _i8_rhs,
                   _sec5_ok, ("derive_H1H2_sec5",), _SEC5_SMOKE),
    IdentityRecord("I9", "h21 = g1", ("m", "y0", "c1", "c2"), _i9_lhs, _i9_rhs,
                   smoke=dict(m=3, y0=4, c1=1, c2=2)),
    IdentityRecord("I10", "Disc(H1 H2) = Disc(H1) Disc(H2) Res(H1, H2)^2", _SEC5, _i10_lhs, _i10_rhs,
                   _sec5_ok, ("derive_H1H2_sec5",), _SEC5_SMOKE),
    IdentityRecord("I11", "Disc(ABt (k4 U^4 + ... + k0)) = 16 (ABmt)^12 (1+t)^6 (4+t)^2 (1-2t)", ("A", "B", "t"),
                   _i11_lhs, _i11_rhs, lambda A, B, t: A != 0 and B != 0 and A + B != 0,
                   ("case1_k",), dict(A=1, B=2, t=3)),
    IdentityRecord("I12", "Disc_X(f) = -g2 on the h13 = 0 parametrization", ("m", "y0", "u"), _i12_lhs, _i12_rhs,
                   lambda m, y0, u: m != 0 and y0 != 0 and m * u != y0, (), dict(m=1, y0=2, u=3)),
    IdentityRecord("I13", "Res_y0(g2, h23) = (4c1 - c2^2)(c1 + 2c2 m + 3m^2)^10 (16c1^2 - ...)^2",
                   ("m", "c1", "c2"), _i13_lhs, _i13_rhs, lambda m, c1, c2: m != 0,
                   ("g2_poly", "h23_poly"), dict(m=1, c1=2, c2=3)),
]

_BY_ID = {r.id: r for r in CATALOG}


def identity_catalog() -> list[IdentityRecord]:
    return list(CATALOG)


def get_identity(ident: str) -> IdentityRecord:
    try:
        return _BY_ID[ident]
    except KeyError:
        raise DomainError(f"unknown identity {ident!r}") from None


def _sample(rec: IdentityRecord, rng: random.Random):
    for _ in range(MAX_ATTEMPTS):
        values = {k: random_rational(rng) for k in rec.params}
        if not rec.admissible(**values):
            continue
        try:
            lhs, rhs = rec.evaluate(values)
        except (DomainError, ZeroDivisionError):
            continue
        if rhs == 0:
            continue
        return values, lhs, rhs
    raise DomainError(f"{rec.id}: no admissible tuple in {MAX_ATTEMPTS} attempts")


def verify_identity(ident: str, trials: int = 20, seed: int = 0) -> IdentityReport:
    """Exact comparison of both sides at `trials` random admissible tuples."""
    if trials < 1:
        raise DomainError("trials must be at least 1")
    rec = get_identity(ident)
    rng = random.Random(f"{seed}:{rec.id}")
    start = time.perf_counter()
    rows = [_sample(rec, rng) for _ in range(trials)]
    ratios = [lhs / rhs for _, lhs, rhs in rows]
    exact = sum(r == 1 for r in ratios)
    if exact == trials:
        status, delta, passed = "pass", None, trials
    elif len(set(ratios)) == 1:
        status, delta, passed = "convention-delta", ratios[0], trials
    else:
        status, delta, passed = "fail", None, exact
    bad = []
    if status == "fail":
        for (values, lhs, rhs), r in zip(rows, ratios):
            if r != 1:
                bad.append({"tuple": {k: q_to_str(v) for k, v in values.items()},
                            "lhs": q_to_str(lhs), "rhs": q_to_str(rhs)})
    return IdentityReport(rec.id, trials, passed, status, delta, bad, time.perf_counter() - start)


def verify_all(trials: int = 20, seed: int = 0, only: list[str] | None = None) -> list[IdentityReport]:
    ids = only or [r.id for r in CATALOG]
    return [verify_identity(i, trials, seed) for i in ids]
