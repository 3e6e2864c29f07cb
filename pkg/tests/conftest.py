"""Shared fixtures and independent brute-force oracles.

The oracles deliberately avoid the package's own machinery: subset
enumeration via itertools, stable sets by definition, matchings by
backtracking over edge subsets.  Frozen expectations in the tests were
produced by these oracles (or checked against networkx/sympy/scipy).
"""

import itertools
from fractions import Fraction

import pytest

from equilab.graphs import Graph, make_graph


# ---------------------------------------------------------------------------
# brute-force oracles

def oracle_maximal_stable_sets(g: Graph):
    """All maximal stable sets by direct subset enumeration."""
    edge_set = set(g.edges)

    def stable(sub):
        return not any((u, v) in edge_set for u, v in itertools.combinations(sub, 2))

    stables = [frozenset(sub)
               for r in range(g.n + 1)
               for sub in itertools.combinations(range(g.n), r)
               if stable(sub)]
    return sorted(
        tuple(sorted(s)) for s in stables
        if s and not any(s < t for t in stables)
    )


def oracle_maximal_cliques(g: Graph):
    edge_set = set(g.edges)

    def clique(sub):
        return all((min(u, v), max(u, v)) in edge_set
                   for u, v in itertools.combinations(sub, 2))

    cliques = [frozenset(sub)
               for r in range(1, g.n + 1)
               for sub in itertools.combinations(range(g.n), r)
               if clique(sub)]
    return sorted(
        tuple(sorted(c)) for c in cliques
        if not any(c < d for d in cliques)
    )


def oracle_max_matching_size(g: Graph) -> int:
    best = 0
    for r in range(g.m, 0, -1):
        if r <= best:
            break
        for combo in itertools.combinations(range(g.m), r):
            used = set()
            ok = True
            for eid in combo:
                u, v = g.edges[eid]
                if u in used or v in used:
                    ok = False
                    break
                used.update((u, v))
            if ok:
                best = max(best, r)
                break
    return best


def oracle_unit_subsets(g: Graph, weights):
    """All nonempty edge subsets of total weight exactly 1."""
    out = []
    for r in range(1, g.m + 1):
        for combo in itertools.combinations(range(g.m), r):
            if sum((weights[i] for i in combo), Fraction(0)) == 1:
                out.append(combo)
    return sorted(out)


def oracle_maximal_stars(g: Graph):
    stars = []
    for v in range(g.n):
        star = frozenset(
            i for i, (a, b) in enumerate(g.edges) if v in (a, b)
        )
        if star:
            stars.append(star)
    return sorted(set(
        tuple(sorted(s)) for s in stars if not any(s < t for t in stars)
    ))


# ---------------------------------------------------------------------------
# small graph helpers

def graph_from_pairs(pairs):
    labels = sorted({str(x) for p in pairs for x in p})
    pos = {l: i for i, l in enumerate(labels)}
    return make_graph(tuple(labels), [(pos[str(u)], pos[str(v)]) for u, v in pairs])


@pytest.fixture(scope="session")
def small_bipartite_corpus():
    from equilab.corpus import connected_bipartite_graphs

    return connected_bipartite_graphs(6)


@pytest.fixture(scope="session")
def triangle_free_corpus():
    from equilab.corpus import connected_triangle_free_graphs

    return connected_triangle_free_graphs(5)
