"""
Integer loops
=============

Absolutely periodic integers return to themselves.  Scanning odd integers in
a range finds the four known loops.
"""

from collatzrep import find_absolute_loops

res = find_absolute_loops(-10_001, 10_001, 5000)
print(f"scanned {res.scanned} odd integers, {len(res.undecided)} undecided")
for r in res.loops:
    print([int(m) for m in r.members], "quotients", r.quotient_cycle, "verified", r.verify())
