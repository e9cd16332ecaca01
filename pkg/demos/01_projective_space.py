"""
Chern rank of complex projective space
======================================

Build Z[α]/(α^4) by hand, put the canonical line bundle on it and watch
its Chern classes generate every even group.
"""

from chernlab import (Generator, Relation, RingPresentation, bundle, chernrank,
                      compile_presentation, even_cup_length, chern_monomial_length, trivial)
from chernlab.chern import chern_subgroup

# the cohomology ring of CP^3: one generator in degree 2, truncated at α^4
pres = RingPresentation([Generator("α", 2)], [Relation({"α": 4})], max_degree=6, name="CP^3")
ring = compile_presentation(pres)
print(ring.describe())

# total Chern class 1 + α
alpha = ring.gen("α")
L = bundle(ring, "L", {1: alpha}, "canonical line bundle")
print(L, "-> chernrank", chernrank(L))

# degree by degree: coordinates of every Chern monomial c_λ in the basis
for d in (2, 4, 6):
    print(f"  H^{d}:", chern_subgroup(L, d))

# the trivial bundle only reaches r_X - 2
print(trivial(ring), "-> chernrank", chernrank(trivial(ring)))

# twice the generator is not enough: 2α spans an index-2 subgroup of H^2
twice = bundle(ring, "L+L", {1: alpha * 2, 2: alpha ** 2})
print(twice, "-> chernrank", chernrank(twice))

# cup length is reached by powers of c_1
cup = even_cup_length(ring)
print("even cup length", cup, "| longest Chern monomial of L:", chern_monomial_length(L))
