"""Test corpora: exhaustive enumeration of small connected bipartite and
triangle-free graphs up to isomorphism, plus seeded random samplers for
spot checks at sizes where exhaustion is hopeless."""

from __future__ import annotations

import itertools
import random

from .common import GraphError
from .graphs import Graph, make_graph


def _default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i + 1) for i in range(n))


def _from_bits(n: int, pairs, bits: int) -> Graph:
    edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
    return make_graph(_default_labels(n), edges)


def _is_connected(n: int, edges) -> bool:
    if n == 0:
        return False
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


# ---------------------------------------------------------------------------
# connected bipartite graphs up to isomorphism (biadjacency canonical form)

def _biadjacency_canonical(a: int, b: int, rows: tuple[int, ...]) -> tuple:
    """Minimum, over column permutations (and transposition when square), of
    the sorted row-bitmask tuple of an a x b biadjacency matrix."""

    def best_of(rows_in: tuple[int, ...], width: int) -> tuple:
        best = None
        for perm in itertools.permutations(range(width)):
            permuted = tuple(sorted(
                sum(((r >> j & 1) << i) for i, j in enumerate(perm))
                for r in rows_in
            ))
            if best is None or permuted < best:
                best = permuted
        return best

    cand = best_of(rows, b)
    if a == b:
        cols = tuple(
            sum(((rows[i] >> j & 1) << i) for i in range(a)) for j in range(b)
        )
        cand = min(cand, best_of(cols, a))
    return (a, b) + cand


def connected_bipartite_graphs(max_n: int):
    """All connected bipartite graphs on 2..max_n vertices without isolated
    vertices, one per isomorphism class.  Desk scale: max_n <= 8."""
    if max_n > 9:
        raise GraphError("exhaustive bipartite enumeration capped at 9 vertices")
    out = []
    seen: set[tuple] = set()
    for n in range(2, max_n + 1):
        for a in range(1, n // 2 + 1):
            b = n - a
            pairs = [(i, a + j) for i in range(a) for j in range(b)]
            for bits in range(1, 1 << len(pairs)):
                edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
                if not _is_connected(n, edges):
                    continue
                rows = tuple(
                    sum(1 << j for j in range(b) if (i, a + j) in set(edges))
                    for i in range(a)
                )
                key = _biadjacency_canonical(a, b, rows)
                if key in seen:
                    continue
                seen.add(key)
                out.append(make_graph(_default_labels(n), edges))
    return out


# ---------------------------------------------------------------------------
# connected triangle-free graphs up to isomorphism (permutation-min form)

def _canonical_edges(n: int, edge_set: frozenset) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        mapped = tuple(sorted(
            (min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edge_set
        ))
        if best is None or mapped < best:
            best = mapped
    return (n,) + best


def connected_triangle_free_graphs(max_n: int):
    """All connected triangle-free graphs on 2..max_n vertices, one per
    isomorphism class.  Desk scale: max_n <= 7 (permutation canonicalizer)."""
    if max_n > 7:
        raise GraphError("exhaustive triangle-free enumeration capped at 7 vertices")
    out = []
    seen: set[tuple] = set()
    for n in range(2, max_n + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for bits in range(1, 1 << len(pairs)):
            edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
            adj = [set() for _ in range(n)]
            for u, v in edges:
                adj[u].add(v)
                adj[v].add(u)
            if any(adj[u] & adj[v] for u, v in edges):
                continue
            if not _is_connected(n, edges):
                continue
            key = _canonical_edges(n, frozenset(edges))
            if key in seen:
                continue
            seen.add(key)
            out.append(make_graph(_default_labels(n), edges))
    return out


# ---------------------------------------------------------------------------
# seeded random samplers

def random_connected_bipartite(a: int, b: int, p: float, rng: random.Random) -> Graph:
    """Random bipartite graph with sides a, b and edge probability p,
    patched to be connected and isolated-vertex-free by chaining stragglers."""
    n = a + b
    edges = {
        (i, a + j)
        for i in range(a)
        for j in range(b)
        if rng.random() < p
    }
    # attach every vertex, then stitch components together greedily
    for i in range(a):
        if not any(u == i for u, _ in edges):
            edges.add((i, a + rng.randrange(b)))
    for j in range(b):
        if not any(v == a + j for _, v in edges):
            edges.add((rng.randrange(a), a + j))
    while not _is_connected(n, edges):
        edges.add((rng.randrange(a), a + rng.randrange(b)))
    return make_graph(_default_labels(n), sorted(edges))


def random_connected_triangle_free(n: int, p: float, rng: random.Random) -> Graph:
    """Random triangle-free connected graph: random insertion order, keep an
    edge when it closes no triangle; connect leftovers the same way."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    adj = [set() for _ in range(n)]
    edges = []

    def try_add(u, v) -> bool:
        if v in adj[u] or adj[u] & adj[v]:
            return False
        if rng.random() >= p:
            return False
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
        return True

    for u, v in pairs:
        try_add(u, v)
    attempts = 0
    while not _is_connected(n, edges) or any(not a for a in adj):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            if v in adj[min(u, v)] or adj[u] & adj[v]:
                attempts += 1
                if attempts > 100 * n * n:
                    raise GraphError("sampler failed to connect a triangle-free graph")
                continue
            adj[min(u, v)].add(max(u, v))
            adj[max(u, v)].add(min(u, v))
            edges.append((min(u, v), max(u, v)))
    return make_graph(_default_labels(n), sorted(set(edges)))
