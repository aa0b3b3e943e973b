"""
Integer points on v^2 = u(u + 2)(u + 6) and a genus-2 obstruction
=================================================================

The bounded search lists the integer points and the square classes of 2u.
The second half computes multiples of (1/2, 15/4) on
Y^2 = (X^2 + 1)(X^2 + 11) and shows why the quartic method does not apply
directly: the curve it would need has genus 2.
"""

from quadrep.pointgen import cz_demo, search_integer_points_u, square_classes_of_2u

pts = search_integer_points_u(10 ** 4)
print("integer points:", pts)
print("squarefree part of 2u:", square_classes_of_2u(pts))

d = cz_demo(4)
for row in d["rows"]:
    print(row["k"], row["X"], f"{row['bits']} bits")
print("sextic:", d["sextic"], " discriminant nonzero:", d["sextic_discriminant"] != 0)
