"""Thue-Morse over period doubling.

Both inflation systems have fixed-point counts 2^n + (-1)^n - 1, and the block
map between them is 2:1.  Each period-doubling n-orbit either lifts to two
Thue-Morse n-orbits (alpha) or to one 2n-orbit (beta).
"""

from fixorb import alpha, beta, gen
from fixorb.paper_sequences import beta_closed_form, beta_recurrence

N = 12
c = gen("tmpd_orb", N)
print("fixed points:", gen("tmpd_fix", N))
print("orbits c_n:  ", c)
print("beta:        ", beta(N))
print("alpha:       ", alpha(N))

assert beta_recurrence(128) == beta_closed_form(128)
assert all(a + b == x for a, b, x in zip(alpha(N), beta(N), c))
print("recurrence and closed form agree up to n = 128")
