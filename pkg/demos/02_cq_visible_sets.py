"""
Co-visible sets and absolute-clear graphs
=========================================

Fix Q.  A set W outside Q is c_Q-visible when the pairs inside W, and the
pairs between Q and W, all have a shortest path avoiding Q.  The maximal
such sets can overlap; graphs where they never do (for any Q) are called
absolute-clear.

Labels below are 0-based; the C8 examples correspond to Q = {1} and
Q = {1, 3} when the cycle is numbered 1..8.
"""

from visipoly import (
    Graph,
    absolute_clear_witness,
    admissible_vertices,
    compatibility_graph,
    cycle_graph,
    maximal_absolute_cq_sets,
)


def show(members):
    return " ".join("{" + ",".join(map(str, sorted(m))) + "}" for m in members) or "(none)"


c8 = cycle_graph(8)
for q in ({0}, {0, 2}, {0, 2, 4}):
    fam = maximal_absolute_cq_sets(c8, q)
    print(f"C8, Q={sorted(q)}: gamma = {show(fam.members)}, disjoint = {fam.is_disjoint()}")

# Candidates and their pairwise compatibility; the maximal sets are its maximal cliques.
print("admissible for Q={0,2}:", sorted(admissible_vertices(c8, {0, 2})))
h, labels = compatibility_graph(c8, {0, 2})
print("compatibility edges:", [(labels[a], labels[b]) for a, b in h.edges()])

# C5 with a pendant vertex: overlapping maximal sets, so not absolute-clear.
fig = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
print("pendant C5, Q={3,5}:", show(maximal_absolute_cq_sets(fig, {3, 5}).members))
print("first non-disjoint Q:", sorted(absolute_clear_witness(fig)))

# Adding one edge can make or break the property.
base = [(1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 4)]
for name, extra in [("G1", []), ("G1 + 0-3", [(0, 3)]), ("G1 + 0-1", [(0, 1)])]:
    g = Graph.from_edges(5, base + extra)
    print(f"{name}: absolute-clear = {absolute_clear_witness(g) is None}")
