"""
Points on Y^2 = f(p^2 + q^2) for a cubic f
==========================================

Here f = X^3 + 2X^2 - 128X + 480 and the auxiliary curve is
w^2 = 2(U^2 + 1)(U^2 + 3).  The base point (1, 4) maps to (p, q, Y) = (3, 1, -20).
"""

from fractions import Fraction as F

from quadrep.constructions import apply_psi, build, fiber_polynomial, reduced_model
from quadrep.elliptic import WCurve, torsion_subgroup, wpt
from quadrep.pointgen import aux_model, generate

con = build("Sec5Case4", {"a": 1, "b": 1, "p0": 2, "q0": 0, "v": -16})
print("torsion of y^2 = f(x):", torsion_subgroup(WCurve(2, -128, 480)).label())

model = reduced_model(con.g)
for P in apply_psi(con, *model.to_aux(1, 4)):
    print("image of (1, 4):", (P.p, P.q, P.coord))

# every curve point whose image has p^2 + q^2 = 10 is a root of this polynomial
print("fiber over 10:", fiber_polynomial(con, 10))

stream = generate(con, wpt(F(-3, 4), F(-1, 8)), 10, curve=WCurve(-1, -4, -2), am=aux_model(con, (1, 4)))
for P in stream.emitted:
    print("p^2 + q^2 =", P.p ** 2 + P.q ** 2)
