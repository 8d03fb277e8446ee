"""
Mutual-visibility sets and visibility polynomials
=================================================

A set S of vertices is a mutual-visibility set when every two members are
joined by a shortest path with no other member of S inside it.  The
visibility polynomial counts these sets by size.
"""

from visipoly import (
    complete_graph,
    cycle_graph,
    enumerate_mv_sets,
    is_mv_set,
    is_pair_x_visible,
    iter_mv_sets,
    path_cut,
    path_graph,
    restricted_visibility_polynomial,
    visibility_polynomial,
)

# Paths: only the endpoints' pairs survive, so every polynomial stops at x^2.
for n in range(2, 7):
    print(f"V(P{n}) =", visibility_polynomial(path_graph(n)))

# Complete graphs: every subset works, giving (1+x)^n.
print("V(K4) =", visibility_polynomial(complete_graph(4)))

# On C4 every 3-set is fine but the whole cycle is not.
c4 = cycle_graph(4)
print("C4 full set is mutual-visibility:", is_mv_set(c4, range(4)))
print("C4 mutual-visibility sets:", sorted(sorted(s) for s in iter_mv_sets(c4)))

# X-visibility of a single pair: on C6, vertices 5 and 2 still see each other
# around the far side when 0 and 1 are blocked.
print("C6, 5~2 avoiding {0,1}:", is_pair_x_visible(cycle_graph(6), 5, 2, {0, 1}))

# The table behind the polynomial splits each count by the set's diameter.
table = enumerate_mv_sets(path_graph(4))
print("Theta table of P4 (rows = size, columns = diameter):")
for k, row in enumerate(table.counts):
    print("  ", k, row)
print("V_2(P4) =", restricted_visibility_polynomial(path_graph(4), 2))

# Vertices lying on every geodesic of some pair.
print("path-cut of C5:", sorted(path_cut(cycle_graph(5))))
print("path-cut of P4:", sorted(path_cut(path_graph(4))))
