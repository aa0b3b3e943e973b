"""
Checking polynomial identities by random specialization
=======================================================

Each catalog entry compares two exact rationals at random admissible
parameter tuples.  A constant ratio other than 1 is reported as a
convention delta rather than a failure.
"""

from quadrep.identities import identity_catalog, verify_all

for rec in identity_catalog():
    print(rec.id, rec.statement)

print()
for rep in verify_all(trials=5, seed=0):
    extra = f" (ratio {rep.delta})" if rep.delta is not None else ""
    print(f"{rep.id:>4} {rep.status}{extra}  {rep.seconds:.2f}s")
