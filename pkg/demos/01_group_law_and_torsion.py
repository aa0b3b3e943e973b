"""
Exact group law, torsion and certification
==========================================

Points on y^2 = x^3 + a2 x^2 + a4 x + a6 are added with Fractions, so
nothing is ever rounded.  A point is certified to have infinite order by
checking its first twelve multiples (no rational torsion point has larger
order).
"""

from fractions import Fraction as F

from quadrep.elliptic import WCurve, certify_infinite_order, find_isomorphism, torsion_subgroup, w_mul, wpt

E = WCurve(588, 36, 0)
G = wpt(36, -900)

# multiples grow quickly in height
for n in range(1, 5):
    print(n, w_mul(E, n, G))

print("torsion:", torsion_subgroup(E).label())
print("(36, -900) has infinite order:", certify_infinite_order(E, G))

# the same curve written in another Weierstrass model
other = WCurve(F(37088, 3), F(579174400, 27), F(7355786854400, 729))
iso = find_isomorphism(E, other)
print("x -> u^2 x + r with u, r =", iso.u, iso.r)
print("image of G:", iso(G))
