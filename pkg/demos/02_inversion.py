"""
Inverting eventually periodic representations
=============================================

Every eventually periodic sequence of positive integers is the Collatz
representation of exactly one odd rational.
"""

from collatzrep import canonicalize, invert, invert_cycle, parse_sequence, represent

for text in ["[1,1,4,(2)]", "[4,1,(3)]", "[(2,1)]", "[(1,2)]", "[2,(1)]", "[3,3,(5,1,2)]"]:
    s = parse_sequence(text)
    a = invert(s, check=True)
    print(f"C^-1{text} = {a}   and back: {represent(a, 10_000)}")

# Non-canonical presentations of the same sequence invert to the same number
for text in ["[1,(1)]", "[2,(1,2)]", "[(2,1,2,1)]"]:
    s = parse_sequence(text)
    print(f"{text} = {canonicalize(s)} -> {invert(s)}")

# Pure cycles go through the closed form directly; some are positive
for cycle in [(2,), (1, 2), (1, 2, 2), (1, 1, 1, 2, 1, 1, 4)]:
    print(cycle, invert_cycle(cycle))
