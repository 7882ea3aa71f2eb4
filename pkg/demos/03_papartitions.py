# Families of partitions of k-subsets where no two blocks are too close.
#
# Every k-subset of {1..n} becomes a vertex; disjoint subsets are joined in
# blue and heavily overlapping ones in red.  A bag-free clique tiling of that
# instance decodes into the family.

from math import comb

from cliquetile import oracle
from cliquetile.papartition import (
    SubsetUniverse,
    build_meta_instance,
    construct_with_certificate,
    subset_rank,
    subset_unrank,
)

# Colex ranking gives each subset its vertex id.
u = SubsetUniverse(6, 2)
print("rank of {1,2}:", subset_rank(u, (1, 2)), "  rank of {2,4}:", subset_rank(u, (2, 4)))
print("unrank 5 with n=6 k=2:", subset_unrank(u, 5))

inst = build_meta_instance(8, 3)
print("n=8 k=3: vertices", inst.m, " blue degree", inst.blue.degrees()[0], "=", comb(5, 3),
      " red edges", inst.red.edge_count())

# The one-factorisation of K4 falls out of the smallest case.
c = construct_with_certificate(4, 2, 2)
print("\nn=4 k=2 via", c.path)
for P in c.family:
    print("  ", P.blocks)

c = construct_with_certificate(20, 2, 2)
print("\nn=20 k=2 via", c.path, ":", len(c.family), "papartitions")
rep = oracle.verify_papartition_family(20, 2, 2, c.family)
print("oracle:", "PASS" if rep.ok else "FAIL", rep.info)
