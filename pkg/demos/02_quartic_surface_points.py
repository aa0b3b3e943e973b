"""
Points on (p^2 - 5q^2)^2 = X^4 - 39/32 X^2 + 81/256
===================================================

The builder finds the auxiliary quartic curve attached to the surface and
the map psi from it onto the surface.  Multiples of one generator then give
as many surface points with distinct X as we like.
"""

from fractions import Fraction as F

from quadrep.constructions import build, reduced_model
from quadrep.elliptic import WCurve, wpt
from quadrep.pointgen import aux_model, generate

con = build("Sec3Case3", {"b": -5, "s": F(1, 2), "r0": 1, "p0": F(5, 8), "q0": F(1, 8)})
print("surface quartic f(X) =", con.f)

# a small integral model of the auxiliary curve
model = reduced_model(con.g)
print("auxiliary curve w^2 =", model.g)

# the generator lives on y^2 = x^3 + 588x^2 + 36x; an isomorphism to the
# curve's own cubic model is found on the fly
am = aux_model(con, (F(-1, 3), F(32, 9)))
stream = generate(con, wpt(36, -900), 8, curve=WCurve(588, 36, 0), am=am)
for P in stream.emitted:
    lhs = (P.p ** 2 - 5 * P.q ** 2) ** 2
    print(f"X = {P.coord}   exact: {lhs == con.f(P.coord)}")
print("skipped multiples (poles of psi):", stream.skipped)
