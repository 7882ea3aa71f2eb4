# Keeping a tiling free of alternating bags while red edges arrive.
#
# A bag is two classes joined by two disjoint red edges.  Each new red edge
# is checked against the two classes it touches; if it closes a bag, a vertex
# is exchanged with a compound partner class.

from cliquetile import formats, oracle
from cliquetile.graph import Params, check_degree_conditions, random_dense_instance
from cliquetile.repair import bag_free_decomposition

p = Params(ell=2, alpha=0.2)

total_swaps = 0
for seed in range(20):
    inst = random_dense_instance(60, p, target_red_max_degree=1, seed=seed)
    d, trace = bag_free_decomposition(inst, p)
    assert oracle.verify_bag_free(inst, d).ok
    total_swaps += len(trace.swaps())
print("20 instances, all bag-free; exchanges needed:", total_swaps)

# Look at one instance that needed an exchange.
for seed in range(100):
    inst = random_dense_instance(60, p, target_red_max_degree=1, seed=seed)
    d, trace = bag_free_decomposition(inst, p)
    if trace.swaps():
        break

rep = check_degree_conditions(inst, p)
print("seed", seed, " red edges:", inst.red.edge_count(), " max red degree:", rep.delta2_max,
      " red condition ok:", rep.eq2_ok)
for line in trace.lines():
    if "swap" in line:
        print("  ", line)

print(formats.format_decomposition(d).splitlines()[-1])
print("oracle:", oracle.verify_bag_free(inst, d).lines()[0])
