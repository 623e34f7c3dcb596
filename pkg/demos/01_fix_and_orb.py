"""Fixed points versus periodic orbits.

A system's fixed-point counts a_n (points with T^n x = x) and its orbit
counts c_n (orbits of exact length n) determine each other.  This script walks
through the two transforms on a few familiar systems.
"""

from fixorb import fix, orb, integrality_report

# The full 2-shift has 2^n points of period dividing n.  Its orbits are the
# binary necklaces: 2, 1, 2, 3, 6, 9, 18, 30, ...
shift = tuple(2**n for n in range(1, 11))
print("2-shift fixed points:", shift)
print("2-shift orbits:      ", tuple(int(x) for x in orb(shift)))

# Going back recovers the input exactly.
assert fix(orb(shift)) == shift

# Not every integer sequence comes from a system.  The identity sequence
# f_n = n already fails at n = 2: (2 - 1)/2 is not an integer.
rep = integrality_report(orb(tuple(range(1, 9))))
print("orb(1, 2, 3, ...) first non-integer:", rep.first_non_integer)

# Differences of counts can make orb negative while staying integral.
# This is the Fibonacci chain minus its torus factor: h_n = (-1)^n.
h = tuple((-1) ** n for n in range(1, 9))
print("orb((-1)^n):", tuple(int(x) for x in orb(h)))
