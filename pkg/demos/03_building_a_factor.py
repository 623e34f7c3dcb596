"""Constructing a system and a factor that realize a given difference.

For h with integral orbit counts eta, decompose() splits eta into
non-negative pieces, and build_realization() turns those into two permutation
systems and an equivariant surjection between them.  verify_factor() checks
the result by literally iterating the permutations.
"""

from fixorb import (
    build_realization,
    coefficient_at,
    decompose,
    dump_triple,
    extract_decomposition,
    load_triple,
    orb,
    verify_factor,
)

h = (0, -2, 0, -2, 0, -8, 0, -2)  # the S-integer difference sequence
eta = orb(h)
dec = decompose(eta)
print("orbit counts:", tuple(int(x) for x in eta))
print("b:", dec.b, " a:", dec.a)
print("reconstructed:", tuple(coefficient_at(dec, n) for n in range(1, 9)))

triple = build_realization(dec, len(h))
print(f"X has {triple.X.size} points in {len(triple.X.cycles)} cycles; "
      f"Y has {triple.Y.size} points in {len(triple.Y.cycles)} cycles")

rep = verify_factor(triple)
print("equivariant:", rep.equivariant, " surjective:", rep.surjective, " counts:", rep.counts_match)
print("X fixed points:", rep.x_counts)
print("Y fixed points:", rep.y_counts)

# The decomposition can be read back off the triple.
back = extract_decomposition(triple)
assert all(coefficient_at(back, n) == coefficient_at(dec, n) for n in range(1, 9))

# Triples serialize to deterministic JSON and re-verify after loading.
text = dump_triple(triple)
assert verify_factor(load_triple(text)).ok
print("serialized size:", len(text), "bytes")
