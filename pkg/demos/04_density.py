"""
Approximating numbers below -1
==============================

Any z <= -1 is a limit of numbers C^-1[A,(1)] with A made of 1's and 2's.
Each round of the construction cuts the error by more than a factor 3.
"""

from fractions import Fraction

from collatzrep import approximate, digits_of
from collatzrep.figures import to_decimal

r = approximate(-2, Fraction(1, 10))
print(r.sequence, r.value, r.error)

z = Fraction(-355, 113)
r = approximate(z, Fraction(1, 10**9))
print(f"z = {z}: {len(r.sequence)} digits, error {to_decimal(r.error, 6)}")
for k, rec in enumerate(r.trace, 1):
    ratio = rec.error_after / rec.error_before
    print(f"  round {k}: +{rec.twos_appended} twos, +{rec.ones_appended} ones, error ratio {to_decimal(ratio, 4)}")

# The rounds extend each other, giving an infinite {1,2}-expansion of z
print(digits_of(z, 40))
print(digits_of(Fraction(-5, 3), 10))  # exact hit, then 1's forever
