# Tiling a dense graph with cliques by delete-and-repair.
#
# Start from the consecutive-block tiling of the complete graph, then delete
# the missing edges one at a time, re-pairing classes whenever a deletion
# breaks one.

import numpy as np

from cliquetile import oracle
from cliquetile.compound import compound_partners, lemma2_lower_bound
from cliquetile.graph import Params, check_degree_conditions, random_dense_instance
from cliquetile.tiling import almost_ell_decomposition

p = Params(ell=3, alpha=0.05)
inst = random_dense_instance(m=60, p=p, target_red_max_degree=0, seed=11)
g = inst.blue

print("vertices:", g.m, " edges:", g.edge_count(), " missing:", len(list(g.non_edges())))
print("degree range:", g.degrees().min(), "to", g.degrees().max())

report = check_degree_conditions(inst, p)
print("minimum degree", report.delta1, "needs at least", report.eq1_threshold, "->", report.eq1_ok)

# Watch the first few repairs as they happen.
steps = []
d = almost_ell_decomposition(g, p, on_step=lambda e, classes, adj: steps.append(e))
print("deleted", len(steps), "edges; first few:", steps[:5])

print("classes:", len(d.classes), " leftover:", d.leftover)
for C in d.classes[:4]:
    print("  ", C)

print("oracle:", "PASS" if oracle.verify_decomposition(g, p.ell, d).ok else "FAIL")

# Each class should have plenty of compound partners.
counts = np.array([len(compound_partners(g, d, C)) for C in d.classes])
print("compound partners per class: min", counts.min(), "lower bound", round(lemma2_lower_bound(g.m, p), 2))
