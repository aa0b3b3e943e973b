"""
Local solvability of w^2 = g(U)
===============================

A quartic with no p-adic point has no rational point either.  The search
walks residue classes of U and stops as soon as a class is decided.
"""

from quadrep.exact_arith import UniPoly
from quadrep.localsolve import bad_primes, locally_solvable, really_solvable

for g in (UniPoly([18, 0, 0, 0, -54]), UniPoly([18, 0, 0, 0, -2])):
    print("w^2 =", g)
    for p in bad_primes(g):
        v = locally_solvable(g, p)
        print(f"  Q_{p}: {'solvable' if v.solvable else 'no points'}", v.witness or "")
    print("  R:", really_solvable(g).solvable)
