"""Exact versus relative realizability.

An exactly realizable sequence needs non-negative integral orbit counts.  A
relatively realizable one (system minus factor) only needs integral ones.
"""

from fixorb import check_exact, check_relative, classify, gen

for name in ("tmpd_fix", "mersenne_fix", "s3_diff", "fib_diff", "penrose_diff_fix"):
    seq = gen(name, 7)
    ex, rel = check_exact(seq), check_relative(seq)
    print(f"{name:18s} {str(seq):40s} exact={ex.verdict:20s} relative={rel.verdict}")

# classify() folds both checks into one verdict with a witness.
c = classify(gen("s3_diff", 12))
print()
print("s3_diff:", c.verdict)
print("  exact witness:", c.witness)
print("  first negative orbit count:", c.first_negative_orbit)

# Constant sequences are always relatively realizable, including negative ones.
print()
print("constant -3:", check_relative((-3,) * 20).verdict)
print("f_n = n^2:  ", check_relative(tuple(n * n for n in range(1, 9))).first_violation)
