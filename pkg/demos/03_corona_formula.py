"""
Visibility polynomial of a corona product
=========================================

G⊙H hangs a copy of H off every vertex of G.  Its visibility polynomial can
be assembled from data about G and H alone; here it is checked against plain
enumeration on the corona itself.
"""

from visipoly import (
    complete_graph,
    corona,
    corona_mu,
    corona_visibility_polynomial,
    cycle_graph,
    path_graph,
    visibility_polynomial,
)

g, h = path_graph(3), complete_graph(2)
report = corona_visibility_polynomial(g, h)
print("V(G)                 =", report.v_of_g)
print("(1+x)^(mn) - 1       =", report.all_copies_term)
print("m x (V_2(H) - 1)     =", report.per_base_term)
for q, term in report.per_q_terms.items():
    fam = report.families[q]
    print(f"p_Q for Q={sorted(q)!s:8} gamma={[sorted(m) for m in fam.members]!s:16} {term}")
print("closed form          =", report.formula_poly)

c, _ = corona(g, h)
print("enumeration          =", visibility_polynomial(c))

# A few more pairs, including a single-vertex H.
for name, g, h in [
    ("C5 ⊙ K2", cycle_graph(5), complete_graph(2)),
    ("C6 ⊙ K2", cycle_graph(6), complete_graph(2)),
    ("P4 ⊙ K3", path_graph(4), complete_graph(3)),
    ("C5 ⊙ K1", cycle_graph(5), complete_graph(1)),
]:
    formula = corona_visibility_polynomial(g, h).formula_poly
    brute = visibility_polynomial(corona(g, h)[0])
    print(f"{name}: agree={formula == brute}, mu={corona_mu(g, h)}, leading coefficient={formula.leading_coefficient}")
