"""
Collatz representations of odd rationals
========================================

Run the Collatz algorithm a -> (3a + 1) / 2**q on a few rationals and read
off the partial quotients q.
"""

from fractions import Fraction

from collatzrep import collatz_step, represent

# One step at a time: 5/3 -> 3 -> 5 -> 1 -> 1 -> ...
a = Fraction(5, 3)
for _ in range(5):
    q, b = collatz_step(a)
    print(f"{a} --(2^{q})--> {b}")
    a = b

# The whole representation, with the repeating part in parentheses
for a in ["1", "-1", "5/3", "-7/5", "-7", "-5", "7", "13/7", "-1.4"]:
    print(f"C({a}) = {represent(a, 10_000)}")

# A budget too small to close the cycle gives a truncated prefix;
# the last iterate lets you resume
r = represent(27, 20)
print(r)
print("resumed:", represent(r.last_iterate, 10_000))
