"""Closed-form visibility polynomial of a corona product.

For G of order m > 1 and H of order n::

    V(G⊙H) = V(G) + ((1+x)^(mn) - 1) + m·x·(V_2(H) - 1) + Σ_Q p_Q(x)

where Q runs over the nonempty proper mutual-visibility sets of G and p_Q
counts the sets ``Q ∪ B`` with B a nonempty set of copy vertices hanging off
a c_Q-visible set of base vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cq import GammaFamily, _gamma
from .graph import Graph, GraphError, ResourceLimitError, from_mask, is_connected, to_mask
from .graph import corona as corona_product
from .poly import Polynomial, binomial_power
from .visibility import (
    enumerate_mv_sets,
    geodesics,
    iter_mv_masks,
    mask_is_mv,
    visibility_polynomial,
)

MAX_FAMILY = 20


def _block(size: int, n_h: int, q_size: int) -> Polynomial:
    # ((1+x)^(size*n_h) - 1) * x^q_size
    return (binomial_power(size * n_h) - 1).shift(q_size)


def p_q_disjoint(family: GammaFamily, n_h: int) -> Polynomial:
    total = Polynomial()
    for omega in family:
        total += _block(len(omega), n_h, len(family.q))
    return total


def p_q_inclusion_exclusion(family: GammaFamily, n_h: int, max_family: int = MAX_FAMILY) -> Polynomial:
    """Inclusion-exclusion over all nonempty subfamilies of ``family``."""
    members = family.members
    if len(members) > max_family:
        raise ResourceLimitError(
            f"{len(members)} maximal sets exceed the inclusion-exclusion cap {max_family}"
        )
    q_size = len(family.q)
    total = Polynomial()

    # depth-first over subfamilies, carrying the running intersection
    def walk(start: int, inter: frozenset[int], depth: int):
        nonlocal total
        for i in range(start, len(members)):
            common = inter & members[i]
            if not common:
                continue
            sign = 1 if depth % 2 == 0 else -1
            total += sign * _block(len(common), n_h, q_size)
            walk(i + 1, common, depth + 1)

    for i, omega in enumerate(members):
        total += _block(len(omega), n_h, q_size)
        walk(i + 1, omega, 1)
    return total


def _family_for(g: Graph, q) -> GammaFamily:
    qs = g.check_vertices(q)
    if not qs:
        raise GraphError("Q must be nonempty")
    if len(qs) == g.n:
        raise GraphError("Q must be a proper subset of V(G)")
    geo = geodesics(g)
    q_mask = to_mask(qs)
    if not mask_is_mv(geo, q_mask):
        raise GraphError(f"Q = {sorted(qs)} is not a mutual-visibility set")
    return _gamma(geo, g.full_mask, q_mask)


def p_q_polynomial(g: Graph, q, n_h: int) -> Polynomial:
    """Contribution of sets ``Q ∪ B`` (B nonempty, inside copies of H) to V(G⊙H)."""
    if n_h < 1:
        raise GraphError("H must have at least one vertex")
    family = _family_for(g, q)
    if family.is_disjoint():
        return p_q_disjoint(family, n_h)
    return p_q_inclusion_exclusion(family, n_h)


@dataclass(frozen=True)
class CoronaPolyReport:
    formula_poly: Polynomial
    v_of_g: Polynomial
    all_copies_term: Polynomial
    per_base_term: Polynomial
    per_q_terms: dict[frozenset[int], Polynomial] = field(default_factory=dict)
    families: dict[frozenset[int], GammaFamily] = field(default_factory=dict)


def corona_visibility_polynomial(g: Graph, h: Graph) -> CoronaPolyReport:
    m, n = g.n, h.n
    if m <= 1:
        raise GraphError("the corona formula needs |V(G)| > 1")
    for name, graph in (("G", g), ("H", h)):
        if not is_connected(graph):
            raise GraphError(f"{name} must be connected")

    table_g = enumerate_mv_sets(g)
    v_of_g = table_g.polynomial()
    all_copies = binomial_power(m * n) - 1
    # V_2(H); for diam(H) < 2 this is all of V(H)
    v2_h = enumerate_mv_sets(h).restricted_polynomial(2)
    per_base = (v2_h - 1).shift(1) * m

    geo = geodesics(g)
    qs = [mask for mask, size, _ in iter_mv_masks(g) if 0 < size < m]
    per_q: dict[frozenset[int], Polynomial] = {}
    families: dict[frozenset[int], GammaFamily] = {}
    for q_mask in sorted(qs, key=lambda s: (s.bit_count(), sorted(from_mask(s)))):
        family = _gamma(geo, g.full_mask, q_mask)
        if family.is_disjoint():
            term = p_q_disjoint(family, n)
        else:
            term = p_q_inclusion_exclusion(family, n)
        per_q[family.q] = term
        families[family.q] = family

    total = v_of_g + all_copies + per_base
    for term in per_q.values():
        total += term
    return CoronaPolyReport(total, v_of_g, all_copies, per_base, per_q, families)


def corona_mu(g: Graph, h: Graph) -> int:
    """Mutual-visibility number of G⊙H.

    Closed forms cover m, n >= 2 (m·n) and m = 1 (n + 1 for complete H, else
    n).  For n = 1 with m >= 2 there is no closed form, so the corona is
    enumerated.
    """
    for name, graph in (("G", g), ("H", h)):
        if not is_connected(graph):
            raise GraphError(f"{name} must be connected")
    m, n = g.n, h.n
    if m >= 2 and n >= 2:
        return m * n
    if m == 1:
        return n + 1 if h.is_complete() else n
    c, _ = corona_product(g, h)
    return visibility_polynomial(c).degree


def brute_force_corona_polynomial(g: Graph, h: Graph) -> Polynomial:
    c, _ = corona_product(g, h)
    return visibility_polynomial(c)

