import pytest
from hypothesis import given, settings, strategies as st

from equilab.common import GraphError
from equilab.graphs import generate, make_graph
from equilab.transforms import (
    check_isomorphism,
    co_line,
    complement,
    disjoint_union,
    is_isomorphic,
    line_graph,
    tensor_product,
)

from test_graphs import small_graphs


class TestLineGraph:
    def test_path_line_graph_is_shorter_path(self):
        lg = line_graph(generate("path(5)"))
        assert lg.graph.n == 4 and lg.graph.m == 3
        assert is_isomorphic(lg.graph, generate("path(4)")) is not None

    def test_star_line_graph_is_complete(self):
        lg = line_graph(generate("star(4)"))
        assert is_isomorphic(lg.graph, generate("complete(4)")) is not None

    def test_edge_of_vertex_map(self):
        g = generate("path(3)")
        lg = line_graph(g)
        assert lg.edge_of_vertex == tuple(g.edge_labels(i) for i in range(g.m))


class TestComplement:
    @given(small_graphs())
    @settings(max_examples=50, deadline=None)
    def test_involution(self, g):
        assert complement(complement(g)) == g

    def test_edge_counts_sum(self):
        g = generate("petersen")
        assert g.m + complement(g).m == g.n * (g.n - 1) // 2


class TestCoLine:
    def test_needs_an_edge(self):
        with pytest.raises(GraphError):
            co_line(make_graph(("a", "b"), []))

    def test_vertices_adjacent_iff_edges_disjoint(self):
        g = generate("cycle(5)")
        cl = co_line(g).graph
        for i, j in cl.edges:
            assert not set(g.edges[i]) & set(g.edges[j])

    def test_co_line_of_k23_plus(self):
        # 9 edges, so 9 vertices; known from the construction
        cl = co_line(generate("kmn_plus(2,3)")).graph
        assert cl.n == 9


class TestTensorProduct:
    def test_sizes(self):
        g = generate("path(2)")  # K2
        h = generate("cycle(3)")
        t = tensor_product(g, h)
        assert t.n == 6
        assert t.m == 2 * g.m * h.m

    def test_k2_tensor_k2_is_two_k2(self):
        k2 = generate("path(2)")
        t = tensor_product(k2, k2)
        assert t.n == 4 and t.m == 2


class TestDisjointUnion:
    def test_no_collision_keeps_labels(self):
        g = disjoint_union(generate("complete_bipartite(1,1)"), generate("path(2)"))
        assert len(set(g.labels)) == 4

    def test_collision_prefixes(self):
        p = generate("path(2)")
        g = disjoint_union(p, p)
        assert g.labels == ("1:1", "1:2", "2:1", "2:2")


class TestIsomorphism:
    def test_positive_with_mapping_check(self):
        g = generate("cycle(6)")
        h = make_graph(tuple("abcdef"), [(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)])
        mapping = is_isomorphic(g, h)
        assert mapping is not None
        check_isomorphism(g, h, mapping)

    def test_negative_same_degree_sequence(self):
        # C6 vs two triangles: both 2-regular on 6 vertices
        c6 = generate("cycle(6)")
        two_k3 = generate("complete(3)+complete(3)")
        assert is_isomorphic(c6, two_k3) is None

    @given(small_graphs(max_n=7), st.randoms(use_true_random=False))
    @settings(max_examples=40, deadline=None)
    def test_random_relabeling_detected(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        h = make_graph(
            tuple(f"v{i}" for i in range(g.n)),
            [(perm[u], perm[v]) for u, v in g.edges],
        )
        mapping = is_isomorphic(g, h)
        assert mapping is not None
        check_isomorphism(g, h, mapping)
