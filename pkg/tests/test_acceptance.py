"""Exit criteria, one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s -q``.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations
from math import comb

import pytest

from visipoly import (
    Polynomial,
    binomial_power,
    compatibility_graph,
    complete_graph,
    corona,
    corona_mu,
    corona_visibility_polynomial,
    cycle_graph,
    is_absolute_clear,
    is_cq_visible,
    is_mv_set,
    iter_mv_sets,
    maximal_absolute_cq_sets,
    path_cut,
    path_graph,
    restricted_visibility_polynomial,
    visibility_polynomial,
)
from visipoly.census import run_census
from visipoly.corona_formula import p_q_disjoint, p_q_inclusion_exclusion
from visipoly.graph import diameter
from conftest import DATA, FIG3, G1, G2, G3, load_corpus, paper
import oracles

WORKED = Polynomial([1, 9, 36, 39, 24, 8, 1])
P3, K2 = path_graph(3), complete_graph(2)
FACTORS = {"K2": complete_graph(2), "P3": path_graph(3), "K3": complete_graph(3)}
HOSTS = [g for n in (2, 3, 4) for g in load_corpus(n)]
EXTRA = [("C5", cycle_graph(5)), ("C6", cycle_graph(6)), ("P5", path_graph(5))]


def criterion3_pairs():
    pairs = [(g, h) for g in HOSTS for h in FACTORS.values()]
    return pairs + [(g, K2) for _, g in EXTRA]


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def check(number, label, budget=None):
        start = time.perf_counter()
        status = "FAIL"
        try:
            yield
            elapsed = time.perf_counter() - start
            if budget is not None:
                assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\n[{status}] criterion {number}: {label} ({elapsed:.2f}s)")

    return check


def test_criterion_1_worked_example_brute_force(criterion):
    with criterion(1, "V(P3⊙K2) by enumeration", budget=1.0):
        c, _ = corona(P3, K2)
        assert visibility_polynomial(c) == WORKED


def test_criterion_2_worked_example_formula(criterion):
    x = Polynomial([0, 1])
    table = {
        paper(1): (binomial_power(4) - 1) * x,
        paper(2): (binomial_power(2) - 1) * x * 2,
        paper(3): (binomial_power(4) - 1) * x,
        paper(1, 3): (binomial_power(2) - 1) * x * x,
        paper(1, 2): Polynomial(),
        paper(2, 3): Polynomial(),
    }
    with criterion(2, "closed form for P3⊙K2 and its six table rows", budget=1.0):
        report = corona_visibility_polynomial(P3, K2)
        assert report.formula_poly == WORKED
        assert report.per_q_terms == table


def test_criterion_3_formula_equals_brute_force(criterion):
    assert len(HOSTS) == 9
    with criterion(3, "closed form = enumeration on 30 corona pairs", budget=300):
        for g, h in criterion3_pairs():
            c, _ = corona(g, h)
            assert corona_visibility_polynomial(g, h).formula_poly == visibility_polynomial(c), (g, h)


def test_criterion_4_mu_theorems(criterion):
    with criterion(4, "mu(G⊙H) = |G||H| and the K1 cases"):
        for g, h in criterion3_pairs():
            c, _ = corona(g, h)
            measured = visibility_polynomial(c).degree
            assert measured == g.n * h.n == corona_mu(g, h)
        for h, expected in [(path_graph(3), 3), (complete_graph(3), 4)]:
            c, _ = corona(complete_graph(1), h)
            assert visibility_polynomial(c).degree == expected == corona_mu(complete_graph(1), h)


def test_criterion_5_monic(criterion):
    with criterion(5, "corona polynomials are monic"):
        for g, h in criterion3_pairs():
            c, _ = corona(g, h)
            assert visibility_polynomial(c).leading_coefficient == 1
            assert corona_visibility_polynomial(g, h).formula_poly.leading_coefficient == 1


def test_criterion_6_known_families(criterion):
    with criterion(6, "V(P_n) for n=2..8 and V(K_n) for n=1..8"):
        for n in range(2, 9):
            assert visibility_polynomial(path_graph(n)) == Polynomial([1, n, comb(n, 2)])
        for n in range(1, 9):
            assert visibility_polynomial(complete_graph(n)) == binomial_power(n)


def test_criterion_7_census(criterion):
    expected = {3: (2, 2), 4: (6, 6), 5: (21, 18), 6: (112, 73)}
    with criterion(7, "absolute-clear census for orders 3-6", budget=600):
        for order, (total, clear) in expected.items():
            lines = (DATA / f"connected{order}.g6").read_text().splitlines()
            result = run_census(lines, jobs=1)
            s = result.summary
            assert (s.connected, s.absolute_clear_count) == (total, clear), order
            assert not result.failures


def test_criterion_8_cq_fixtures(criterion):
    c8 = cycle_graph(8)
    with criterion(8, "c_Q families on C8 and the figure graphs"):
        fam = maximal_absolute_cq_sets(c8, paper(1))
        assert set(fam.members) == {paper(2, 3, 4, 5, 6), paper(3, 4, 5, 6, 7), paper(4, 5, 6, 7, 8)}
        assert not fam.is_disjoint()
        fam = maximal_absolute_cq_sets(c8, paper(1, 3))
        assert set(fam.members) == {paper(2), paper(5, 6, 7)} and fam.is_disjoint()
        for q in combinations(range(8), 3):
            assert len(maximal_absolute_cq_sets(c8, q)) == 0
        assert set(maximal_absolute_cq_sets(FIG3, paper(4, 6)).members) == {paper(1, 2, 5), paper(1, 2, 3)}
        assert is_absolute_clear(G1) and is_absolute_clear(G2)
        assert not is_absolute_clear(G3) and not is_absolute_clear(FIG3)


@pytest.fixture(scope="module")
def corpus6():
    return [g for n in range(2, 7) for g in load_corpus(n)]


def test_criterion_9a_pruned_equals_naive(criterion, corpus6):
    with criterion("9a", "pruned enumeration = 2^n filter, orders <= 6"):
        for g in corpus6:
            assert list(visibility_polynomial(g).coeffs) == oracles.naive_polynomial(oracles.to_nx(g))


def test_criterion_9b_downward_closure(criterion, corpus6):
    rng = random.Random(2024)
    with criterion("9b", "downward closure, 200 random subsets per graph"):
        for g in corpus6:
            family = list(iter_mv_sets(g))
            for _ in range(200):
                s = rng.choice(family)
                assert is_mv_set(g, [v for v in s if rng.random() < 0.5])


def test_criterion_9c_clique_correspondence(criterion, corpus6):
    with criterion("9c", "c_Q-visible sets = cliques of the compatibility graph"):
        for g in corpus6:
            G = oracles.to_nx(g)
            for k in range(1, g.n):
                for q in combinations(range(g.n), k):
                    h, labels = compatibility_graph(g, q)
                    index = {v: i for i, v in enumerate(labels)}
                    rest = [v for v in range(g.n) if v not in q]
                    for w in oracles.subsets(rest):
                        clique = all(v in index for v in w) and all(
                            h.has_edge(index[a], index[b]) for a, b in combinations(w, 2)
                        )
                        assert oracles.cq_visible(G, q, w) == clique == is_cq_visible(g, q, w)


def test_criterion_9d_restricted_equals_full_iff_diameter(criterion, corpus6):
    with criterion("9d", "V_d(G) = V(G) iff d = diam(G)"):
        for g in corpus6:
            full = visibility_polynomial(g)
            diam = diameter(g)
            for d in range(diam + 1):
                assert (restricted_visibility_polynomial(g, d) == full) == (d == diam)


def test_criterion_9e_path_cut(criterion):
    with criterion("9e", "p_c(C_n) = V(C_n) for n=5..9, p_c(K_n) empty"):
        for n in range(5, 10):
            assert path_cut(cycle_graph(n)) == frozenset(range(n))
        for n in range(1, 9):
            assert path_cut(complete_graph(n)) == frozenset()


def test_criterion_9f_branch_consistency(criterion):
    with criterion("9f", "both p_Q branches agree on disjoint-visible Q"):
        seen = 0
        for g, h in criterion3_pairs():
            for fam in corona_visibility_polynomial(g, h).families.values():
                if fam.is_disjoint():
                    assert p_q_inclusion_exclusion(fam, h.n) == p_q_disjoint(fam, h.n)
                    seen += 1
        assert seen > 0
