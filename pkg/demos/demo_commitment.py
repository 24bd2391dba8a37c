"""
Committing to a value and opening it later
==========================================

A commitment is a sealed envelope: publishing c = g^d * h^m reveals
nothing about m, yet m cannot be swapped once c is out.  This walkthrough
uses the 11-element toy group so every number fits on one line.
"""

import time

from pedersen_games import Pedersen, RandomTape, SeededSource, large_group, toy_group

group = toy_group()
scheme = Pedersen(group)
print(f"toy group: p = {group.p}, q = {group.q}, g = {group.g}")
print(f"subgroup:  {group.subgroup_elements()}")

# Key generation draws a secret exponent x and publishes h = g^x.  The
# committer never needs x, only h.
h = scheme.gen(RandomTape([3]))
print(f"\ncommitment key h = g^3 = {h}")

# Commit to m = 2.  The decommitment key d is the randomness that seals
# the envelope; here the tape pins it to d = 4.
m = 2
c, d = scheme.commit(h, m, RandomTape([4]))
print(f"commit(h, m={m}) with d={d}: c = g^{d} * h^{m} = {c}")

# Opening means handing over (m, d) and letting anyone recompute c.
print(f"verify(h, c, {m}, {d}) = {scheme.verify(h, c, m, d)}")

# A tampered message or key fails, because the recomputed product moves.
print(f"verify with m=3 instead: {scheme.verify(h, c, 3, d)}")
print(f"verify with d=5 instead: {scheme.verify(h, c, m, 5)}")

# Commitments multiply like their messages add.  Committing to m1 and m2
# separately and multiplying gives a valid commitment to m1 + m2 under
# decommitment key d1 + d2.
c1, d1 = scheme.commit(h, 3, RandomTape([1]))
c2, d2 = scheme.commit(h, 5, RandomTape([6]))
folded = group.mul(c1, c2)
print(f"\nhomomorphism: c1*c2 = {folded} opens as "
      f"m={group.scalar_add(3, 5)}, d={group.scalar_add(d1, d2)}: "
      f"{scheme.verify(h, folded, group.scalar_add(3, 5), group.scalar_add(d1, d2))}")

# The same code runs unchanged on a 256-bit group; only the backend tag
# and the modulus change.
big = large_group()
big_scheme = Pedersen(big)
source = SeededSource(2024)
start = time.perf_counter()
H = big_scheme.gen(source)
C, D = big_scheme.commit(H, 123456789, source)
ok = big_scheme.verify(H, C, 123456789, D)
elapsed = time.perf_counter() - start
print(f"\n256-bit backend: p has {big.p.bit_length()} bits")
print(f"c = {C:#066x}")
print(f"verify = {ok}  ({elapsed * 1000:.1f} ms for gen + commit + verify)")
