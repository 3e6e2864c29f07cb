"""Graph operators: line graph, complement, co-line graph, tensor product,
disjoint union, and desk-scale isomorphism testing."""

from __future__ import annotations

from dataclasses import dataclass

from .common import Budget, BudgetExhausted, GraphError, make_budget
from .graphs import Graph, adjacency_masks, make_graph


@dataclass(frozen=True)
class LabeledLineGraph:
    """Line graph (or its complement) whose vertices remember their source edges."""

    graph: Graph
    edge_of_vertex: tuple[tuple[str, str], ...]


def line_graph(g: Graph) -> LabeledLineGraph:
    """Vertices are the edges of g; adjacency = sharing an endpoint."""
    labels = tuple(g.edge_name(i) for i in range(g.m))
    pairs = [
        (i, j)
        for i in range(g.m)
        for j in range(i + 1, g.m)
        if set(g.edges[i]) & set(g.edges[j])
    ]
    lg = make_graph(labels, pairs)
    return LabeledLineGraph(graph=lg, edge_of_vertex=tuple(g.edge_labels(i) for i in range(g.m)))


def complement(g: Graph) -> Graph:
    present = set(g.edges)
    pairs = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if (u, v) not in present
    ]
    return make_graph(g.labels, pairs)


def co_line(g: Graph) -> LabeledLineGraph:
    """Complement of the line graph, keeping the edge-of-vertex map.

    Vertex i of the result is edge i of g; two vertices are adjacent iff the
    corresponding edges are disjoint.
    """
    if g.m < 1:
        raise GraphError("co_line needs at least one edge")
    lg = line_graph(g)
    return LabeledLineGraph(graph=complement(lg.graph), edge_of_vertex=lg.edge_of_vertex)


def tensor_product(g: Graph, h: Graph) -> Graph:
    """Vertex set V(g) x V(h); edges pair up edges of both factors."""
    labels = tuple(
        f"({lg},{lh})" for lg in g.labels for lh in h.labels
    )
    nh = h.n
    pairs = []
    for u1, u2 in g.edges:
        for v1, v2 in h.edges:
            pairs.append((u1 * nh + v1, u2 * nh + v2))
            pairs.append((u1 * nh + v2, u2 * nh + v1))
    return make_graph(labels, pairs)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Side-by-side copies; labels are prefixed only on collision."""
    if set(g.labels) & set(h.labels):
        labels = tuple(f"1:{l}" for l in g.labels) + tuple(f"2:{l}" for l in h.labels)
    else:
        labels = g.labels + h.labels
    pairs = list(g.edges) + [(u + g.n, v + g.n) for u, v in h.edges]
    return make_graph(labels, pairs)


def _neighbor_degree_key(g: Graph, v: int) -> tuple:
    return (g.degree(v), tuple(sorted(g.degree(w) for w in g.adjacency[v])))


def is_isomorphic(g: Graph, h: Graph, budget: Budget | int | None = None):
    """Backtracking isomorphism search with degree-profile pruning.

    Returns a vertex mapping (list: g-id -> h-id) or None.  Raises
    BudgetExhausted when the step budget runs out (indeterminate).
    """
    if g.n != h.n or g.m != h.m:
        return None
    if sorted(_neighbor_degree_key(g, v) for v in range(g.n)) != sorted(
        _neighbor_degree_key(h, v) for v in range(h.n)
    ):
        return None
    budget = make_budget(budget)
    gm = adjacency_masks(g)
    hm = adjacency_masks(h)
    # map rarest degree-profiles first
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    keys_h: dict[tuple, list[int]] = {}
    for v in range(h.n):
        keys_h.setdefault(_neighbor_degree_key(h, v), []).append(v)
    mapping = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        budget.spend()
        if i == g.n:
            return True
        v = order[i]
        key = _neighbor_degree_key(g, v)
        for w in keys_h.get(key, ()):
            if used[w]:
                continue
            ok = True
            for u in g.adjacency[v]:
                mu = mapping[u]
                if mu >= 0 and not hm[w] >> mu & 1:
                    ok = False
                    break
            if ok:
                # also reject mapped non-neighbors of v that are neighbors of w
                for j in range(i):
                    u = order[j]
                    if not gm[v] >> u & 1 and hm[w] >> mapping[u] & 1:
                        ok = False
                        break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if not extend(0):
        return None
    check_isomorphism(g, h, mapping)
    return list(mapping)


def check_isomorphism(g: Graph, h: Graph, mapping) -> None:
    """Assert that `mapping` preserves adjacency both ways."""
    if sorted(mapping) != list(range(h.n)):
        raise AssertionError("mapping is not a bijection")
    hedges = set(h.edges)
    mapped = {tuple(sorted((mapping[u], mapping[v]))) for u, v in g.edges}
    if mapped != hedges:
        raise AssertionError("mapping does not preserve adjacency")
