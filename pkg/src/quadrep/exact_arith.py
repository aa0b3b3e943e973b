"""Exact scalars and dense polynomials over the rationals.

Rationals are plain :class:`fractions.Fraction` values.  ``UniPoly`` is a dense
univariate polynomial (coefficients lowest degree first) and ``NestedPoly`` a
polynomial in an outer variable whose coefficients are ``UniPoly`` objects in
an inner variable.  Both are immutable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Sequence, Union

from sympy import factorint

Rational = Fraction
Number = Union[int, Fraction]


class DomainError(ValueError):
    """Input outside the domain of an operation."""


def Q(x) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return q_from_str(x)
    return Fraction(x)


def q_to_str(x: Number) -> str:
    x = Q(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def q_from_str(s: str) -> Fraction:
    s = s.strip()
    if "/" in s:
        n, d = s.split("/")
        return Fraction(int(n), int(d))
    return Fraction(int(s))


# ---------------------------------------------------------------- integers

def squarefree_part(n: int) -> int:
    """The squarefree d with n = d*k**2, sign preserved."""
    if n == 0:
        raise DomainError("squarefree part of 0 is undefined")
    d = -1 if n < 0 else 1
    for prime, e in factorint(abs(n)).items():
        if e % 2:
            d *= prime
    return d


def is_square_int(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def rational_is_square(r: Number) -> Fraction | None:
    """Nonnegative square root of r when r is a rational square, else None."""
    r = Q(r)
    if r < 0:
        return None
    a, b = r.numerator, r.denominator
    sa, sb = isqrt(a), isqrt(b)
    if sa * sa == a and sb * sb == b:
        return Fraction(sa, sb)
    return None


def same_square_class(r1: Number, r2: Number) -> bool:
    r1, r2 = Q(r1), Q(r2)
    if r1 == 0 or r2 == 0:
        raise DomainError("square classes are defined for nonzero rationals only")
    return rational_is_square(r1 / r2) is not None


def square_class(r: Number) -> int:
    """Squarefree integer representing r modulo squares."""
    r = Q(r)
    if r == 0:
        raise DomainError("0 has no square class")
    return squarefree_part(r.numerator * r.denominator)


def valuation(x: Number, p: int) -> int | None:
    """p-adic valuation; None stands for +infinity (x = 0)."""
    x = Q(x)
    if x == 0:
        return None
    v = 0
    n, d = x.numerator, x.denominator
    while n % p == 0:
        n //= p
        v += 1
    while d % p == 0:
        d //= p
        v -= 1
    return v


# ---------------------------------------------------------- univariate polys

class UniPoly:
    """Dense polynomial over Q, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def const(cls, c: Number) -> "UniPoly":
        return cls([c])

    @classmethod
    def monomial(cls, c: Number, k: int) -> "UniPoly":
        return cls([0] * k + [c])

    # -- basic structure
    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "UniPoly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = q_to_str(c)
            terms.append(s if k == 0 else f"{s}*x^{k}" if k > 1 else f"{s}*x")
        return "UniPoly(" + " + ".join(terms) + ")"

    # -- ring operations
    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other) -> "UniPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            other = Q(other)
            if other == 0:
                return UniPoly()
            return UniPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise DomainError("negative power of a polynomial")
        result, base = UniPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, c: Number) -> "UniPoly":
        c = Q(c)
        if c == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        return UniPoly([x / c for x in self.coeffs])

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                quo[k - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * y
        return UniPoly(quo), UniPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise DomainError("division is not exact")
        return q

    # -- evaluation and transforms
    def __call__(self, x):
        """Horner evaluation at a rational, or composition with a UniPoly."""
        if isinstance(x, UniPoly):
            acc = UniPoly()
            for c in reversed(self.coeffs):
                acc = acc * x + c
            return acc
        x = Q(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self / self.lc

    def scale_var(self, lam: Number) -> "UniPoly":
        """g(lam * x)."""
        lam = Q(lam)
        out, pw = [], Fraction(1)
        for c in self.coeffs:
            out.append(c * pw)
            pw *= lam
        return UniPoly(out)

    def shift(self, x0: Number) -> "UniPoly":
        """g(x + x0)."""
        return self(UniPoly([x0, 1]))

    def reverse(self, d: int | None = None) -> "UniPoly":
        """x**d * g(1/x), with d defaulting to the degree."""
        if d is None:
            d = self.degree
        if d < self.degree:
            raise DomainError("reversal degree below polynomial degree")
        cs = list(self.coeffs) + [Fraction(0)] * (d + 1 - len(self.coeffs))
        return UniPoly(reversed(cs))

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])

    def integer_coeffs(self) -> tuple[list[int], int]:
        """(ints, den) with self = ints / den and den the lcm of denominators."""
        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        return [int(c * den) for c in self.coeffs], den

    def to_json(self) -> list[str]:
        return [q_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence) -> "UniPoly":
        return cls(Q(c) for c in data)


X = UniPoly.x()


def poly_eval(f: UniPoly, x: Number) -> Fraction:
    return f(Q(x))


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# ------------------------------------------------ resultants and discriminants

def _content(cs: Sequence[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
    return g


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder lc(b)**(deg a - deg b + 1) * a mod b over Z (lists highest first)."""
    a = list(a)
    lb = b[0]
    db = len(b) - 1
    e = len(a) - len(b) + 1
    while len(a) - 1 >= db and a:
        c = a[0]
        a = [lb * x for x in a]
        for j in range(len(b)):
            a[j] -= c * b[j]
        a.pop(0)
        e -= 1
        while a and a[0] == 0:
            a.pop(0)
    if e:
        lbe = lb ** e
        a = [lbe * x for x in a]
    return a


def _subresultant_int(a: list[int], b: list[int]) -> int:
    """Resultant of integer polynomials (highest first) by the subresultant PRS."""
    da, db = len(a) - 1, len(b) - 1
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -s
    if db == 0:
        return s * b[0] ** da
    ca, cb = _content(a), _content(b)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    t = ca ** db * cb ** da
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r = _prem(a, b)
        if not r:
            return 0
        a = b
        div = g * h ** delta
        b = [x // div for x in r]
        g = a[0]
        if delta:
            h = g ** delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            h = b[0] ** da // h ** (da - 1) if da else 1
            return s * t * h


def poly_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Res(f, g), computed exactly via a fraction-free subresultant chain."""
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant with the zero polynomial")
    fi, fd = f.integer_coeffs()
    gi, gd = g.integer_coeffs()
    r = _subresultant_int(fi[::-1], gi[::-1])
    return Fraction(r, fd ** g.degree * gd ** f.degree)


def poly_discriminant(f: UniPoly) -> Fraction:
    """(-1)**(n(n-1)/2) * Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise DomainError("discriminant of a constant polynomial")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * poly_resultant(f, f.derivative()) / f.lc


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[Fraction]]:
    m, n = f.degree, g.degree
    size = m + n
    rows = []
    fr, gr = list(reversed(f.coeffs)), list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fr + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gr + [Fraction(0)] * (size - n - 1 - i))
    return rows


def det(mat: Sequence[Sequence[Number]]) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    a = [[Q(x) for x in row] for row in mat]
    n = len(a)
    sign, result = 1, Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            sign = -sign
        pv = a[col][col]
        result *= pv
        for r in range(col + 1, n):
            factor = a[r][col] / pv
            if factor:
                row, prow = a[r], a[col]
                for k in range(col, n):
                    row[k] -= factor * prow[k]
    return sign * result


def sylvester_resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant as the Sylvester determinant (slow reference route)."""
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant with the zero polynomial")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    return det(sylvester_matrix(f, g))


# ------------------------------------------------------------ root finding

def rational_roots(f: UniPoly) -> list[Fraction]:
    """All distinct rational roots, sorted."""
    if f.is_zero():
        raise DomainError("every rational is a root of the zero polynomial")
    cs, _ = f.integer_coeffs()
    roots = set()
    k = 0
    while cs[k] == 0:
        k += 1
    if k:
        roots.add(Fraction(0))
    cs = cs[k:]
    if len(cs) == 1:
        return sorted(roots)
    a0, an = abs(cs[0]), abs(cs[-1])
    num_divs = _divisors(a0)
    den_divs = _divisors(an)
    g = UniPoly(cs)
    for p in num_divs:
        for q in den_divs:
            if gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if g(cand) == 0:
                    roots.add(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    divs = [1]
    for prime, e in factorint(n).items():
        divs = [d * prime ** k for d in divs for k in range(e + 1)]
    return divs


def sturm_real_root_count(f: UniPoly) -> int:
    """Number of distinct real roots of f."""
    if f.degree < 1:
        return 0
    f = f // poly_gcd(f, f.derivative())
    seq = [f, f.derivative()]
    while not seq[-1].is_zero() and seq[-1].degree > 0:
        seq.append(-(seq[-2] % seq[-1]))
    seq = [s for s in seq if not s.is_zero()]

    def changes(signs):
        signs = [s for s in signs if s != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    at_neg = [(-1 if s.degree % 2 else 1) * (1 if s.lc > 0 else -1) for s in seq]
    at_pos = [1 if s.lc > 0 else -1 for s in seq]
    return changes(at_neg) - changes(at_pos)


# -------------------------------------------------------------- nested polys

class NestedPoly:
    """Polynomial in an outer variable T with UniPoly coefficients in U."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [c if isinstance(c, UniPoly) else UniPoly([c]) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[UniPoly, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> UniPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return UniPoly()

    def __eq__(self, other) -> bool:
        return isinstance(other, NestedPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"NestedPoly({list(self.coeffs)!r})"

    def _coerce(self, other) -> "NestedPoly":
        if isinstance(other, NestedPoly):
            return other
        return NestedPoly([other])

    def __add__(self, other) -> "NestedPoly":
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return NestedPoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self) -> "NestedPoly":
        return NestedPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "NestedPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "NestedPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "NestedPoly":
        if not isinstance(other, NestedPoly):
            return NestedPoly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return NestedPoly()
        out = [UniPoly()] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return NestedPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "NestedPoly":
        result, base = NestedPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def eval_inner(self, u: Number) -> UniPoly:
        """Specialize the inner variable, giving a UniPoly in T."""
        return UniPoly(c(u) for c in self.coeffs)

    def to_json(self) -> list[list[str]]:
        return [c.to_json() for c in self.coeffs]


def compose_nested(f: UniPoly, x: NestedPoly) -> NestedPoly:
    """f(x) for a rational-coefficient f and a NestedPoly argument."""
    acc = NestedPoly()
    for c in reversed(f.coeffs):
        acc = acc * x + UniPoly([c])
    return acc


def poly_sqrt(f: UniPoly) -> UniPoly | None:
    """s with s*s == f over Q, or None when f is not a square."""
    if f.is_zero():
        return UniPoly()
    if f.degree % 2:
        return None
    lead = rational_is_square(f.lc)
    if lead is None:
        return None
    n = f.degree // 2
    # fix the top n+1 coefficients of s from the top of f
    s = [Fraction(0)] * (n + 1)
    s[n] = lead
    for k in range(n - 1, -1, -1):
        # coefficient of x^(n+k) in s^2 determines s[k]
        acc = f[n + k]
        for i in range(k + 1, n):
            j = n + k - i
            if k < j <= n:
                acc -= s[i] * s[j]
        s[k] = acc / (2 * lead)
    root = UniPoly(s)
    if lead < 0 or root * root != f:
        return None
    return root
