"""Local solvability of w^2 = g(U) over Q_p and over the reals.

The p-adic test walks residue classes U = x0 + p^k t.  On a class the
polynomial h(t) = g(x0 + p^k t) has integer coefficients, and

* if h(0) is a nonzero p-adic square, x0 itself is a point;
* if h(0) is not a square but every other coefficient beats v(h(0)) by the
  unit margin (1 for odd p, 3 for p = 2), h(t)/h(0) is a square unit for all
  t and the class is empty;
* if every coefficient is divisible by p^2 the factor is pulled out
  (squareness is unchanged);
* otherwise the class is split into p subclasses.

U of negative valuation is handled through the reversed polynomial
U^d g(1/U) on the class U in p Z_p, with d the degree rounded up to even.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from sympy import isprime, sqrt_mod

from .exact_arith import DomainError, Number, Q, UniPoly, poly_discriminant, q_to_str, sturm_real_root_count, valuation


@dataclass
class LocalVerdict:
    place: object          # a prime or "real"
    solvable: bool
    witness: dict | None = None
    depth: int = 0
    exhausted: bool = False  # the depth cap was hit on some class
    stats: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"place": self.place, "solvable": self.solvable, "witness": self.witness,
                "depth": self.depth, "exhausted": self.exhausted}


def _unit_margin(p: int) -> int:
    return 3 if p == 2 else 1


def is_padic_square(c: Number, p: int) -> bool:
    """True when c is a square in Q_p (0 counts)."""
    c = Q(c)
    if c == 0:
        return True
    v = valuation(c, p)
    if v % 2:
        return False
    u = c / Fraction(p) ** v
    n = u.numerator * pow(u.denominator, -1, 8 if p == 2 else p)
    if p == 2:
        return n % 8 == 1
    return pow(n % p, (p - 1) // 2, p) == 1


def _integral(g: UniPoly) -> list[int]:
    """Integer coefficients of d^2 g for the least suitable d."""
    d = lcm(*(c.denominator for c in g.coeffs))
    return [int(c * d * d) for c in g.coeffs]


def _shift_scale(cs: list[int], x0: int, s: int) -> list[int]:
    """Coefficients of h(t) = g(x0 + s t)."""
    out = [0] * len(cs)
    # Horner in the polynomial ring
    for c in reversed(cs):
        nxt = [0] * len(cs)
        for i, a in enumerate(out):
            if a:
                nxt[i] += a * x0
                if i + 1 < len(cs):
                    nxt[i + 1] += a * s
        nxt[0] += c
        out = nxt
    return out


def _v(n: int, p: int) -> int | None:
    return None if n == 0 else valuation(n, p)


def _witness(g: UniPoly, x: Fraction, p: int, k: int) -> dict:
    gx = g(x)
    w = None
    if gx != 0:
        v = valuation(gx, p)
        u = gx / Fraction(p) ** v
        mod = p ** max(k, 3)
        unit = u.numerator * pow(u.denominator, -1, mod) % mod
        r = sqrt_mod(unit, mod)
        if r is not None:
            w = f"{r}*{p}^{v // 2} mod {p}^{max(k, 3) + v // 2}"
    return {"U": q_to_str(x), "g(U)": q_to_str(gx), "w": "0" if gx == 0 else w, "precision": k}


def _search(cs: list[int], p: int, x0: int, k: int, cap: int, stats: dict):
    """Return the x0 of a point in the class x0 + p^k Z_p, None if empty,
    or "cap" if undecided at the depth cap."""
    h = _shift_scale(cs, x0, p ** k)
    stats["classes"] = stats.get("classes", 0) + 1
    while True:
        if is_padic_square(h[0], p):
            return x0
        vals = [_v(c, p) for c in h]
        v0 = vals[0]
        rest = [v for v in vals[1:] if v is not None]
        if all(v >= v0 + _unit_margin(p) for v in rest):
            return None
        if all(v is None or v >= 2 for v in vals):
            h = [c // (p * p) for c in h]
            continue
        break
    if k >= cap:
        return "cap"
    undecided = False
    for t in range(p):
        r = _search(cs, p, x0 + t * p ** k, k + 1, cap, stats)
        if r == "cap":
            undecided = True
        elif r is not None:
            return r
    return "cap" if undecided else None


def default_depth(g: UniPoly, p: int) -> int:
    d = poly_discriminant(g)
    return 2 * (valuation(d, p) if d != 0 else 0) + 4


def locally_solvable(g: UniPoly, p: int, depth: int | None = None) -> LocalVerdict:
    """Decide whether w^2 = g(U) has a point over Q_p, points at infinity included."""
    if not isprime(p):
        raise DomainError(f"{p} is not prime")
    if g.is_zero():
        raise DomainError("zero polynomial")
    cap = default_depth(g, p) if depth is None else depth
    stats: dict = {}
    exhausted = False
    cs = _integral(g)
    # U in Z_p
    r = _search(cs, p, 0, 0, cap, stats)
    if r == "cap":
        exhausted = True
    elif r is not None:
        return LocalVerdict(p, True, _witness(g, Fraction(r), p, cap), cap, False, stats)
    # U = 1/y with y in p Z_p, including y = 0 (points at infinity)
    d = g.degree + (g.degree % 2)
    rev = g.reverse(d)
    rcs = _integral(rev)
    r = _search(rcs, p, 0, 1, cap + 1, stats)
    if r == "cap":
        exhausted = True
    elif r is not None:
        if r == 0:
            wit = {"U": "infinity", "leading": q_to_str(g.lc), "precision": cap}
        else:
            wit = _witness(g, 1 / Fraction(r), p, cap)
        return LocalVerdict(p, True, wit, cap, False, stats)
    return LocalVerdict(p, False, None, cap, exhausted, stats)


def really_solvable(g: UniPoly) -> LocalVerdict:
    """w^2 = g(U) has a real point iff g takes a nonnegative value."""
    if g.is_zero():
        raise DomainError("zero polynomial")
    if g.degree % 2 or g.lc > 0:
        return LocalVerdict("real", True, {"U": "large"})
    if sturm_real_root_count(g) > 0:
        return LocalVerdict("real", True, {"U": "near a real root"})
    ok = g(0) >= 0
    return LocalVerdict("real", ok, {"U": "0"} if ok else None)


def bad_primes(g: UniPoly) -> list[int]:
    """Primes dividing 2 * lc * Disc(g) (after clearing denominators): the only
    places where a genus-1 quartic can fail to be locally solvable."""
    from sympy import primefactors
    cs = _integral(g)
    d = poly_discriminant(UniPoly(cs))
    n = abs(2 * cs[-1] * int(d))
    return sorted(primefactors(n))
