import pytest
from hypothesis import given, settings, strategies as st

from equilab.common import GraphError
from equilab.graphs import (
    Bipartition,
    OddWalkWitness,
    bipartition,
    check_bipartition,
    check_odd_walk,
    components,
    enumerate_maximal_cliques,
    enumerate_maximal_stable_sets,
    find_edge_by_name,
    format_edge_list,
    generate,
    graph_from_label_pairs,
    induced_subgraph,
    is_triangle_free,
    make_graph,
    parse_descriptor,
    parse_edge_list,
    same_labeled_graph,
)

from conftest import oracle_maximal_cliques, oracle_maximal_stable_sets


# a reusable strategy for small random graphs
@st.composite
def small_graphs(draw, max_n=8):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picked = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return make_graph(tuple(str(i) for i in range(n)), picked)


class TestConstruction:
    def test_edges_are_canonical(self):
        g = make_graph(("a", "b", "c"), [(2, 0), (1, 0), (0, 2)])
        assert g.edges == ((0, 1), (0, 2))
        assert g.adjacency == ((1, 2), (0,), (0,))

    def test_self_loop_rejected(self):
        with pytest.raises(GraphError):
            make_graph(("a", "b"), [(0, 0)])

    def test_duplicate_labels_rejected(self):
        with pytest.raises(GraphError):
            make_graph(("a", "a"), [])

    def test_label_pairs_first_appearance_order(self):
        g = graph_from_label_pairs([("x", "y"), ("y", "z")], extra_vertices=("w",))
        assert g.labels == ("x", "y", "z", "w")
        assert g.degree(3) == 0


class TestParsing:
    def test_round_trip(self):
        text = "a b\nb c\nv lonely\n# comment\n\na c\n"
        g = parse_edge_list(text)
        assert g.n == 4 and g.m == 3
        assert same_labeled_graph(g, parse_edge_list(format_edge_list(g)))

    def test_bad_line_reports_lineno(self):
        with pytest.raises(GraphError, match="line 2"):
            parse_edge_list("a b\na b c\n")

    def test_self_loop_line(self):
        with pytest.raises(GraphError, match="self-loop"):
            parse_edge_list("a a\n")

    def test_edge_name_lookup(self):
        g = parse_edge_list("a b\nb c\n")
        assert find_edge_by_name(g, "b-a") == find_edge_by_name(g, "a-b")
        with pytest.raises(GraphError):
            find_edge_by_name(g, "a-c")


class TestComponentsBipartition:
    def test_components_of_union(self):
        g = parse_edge_list("a b\nc d\nv e\n")
        dec = components(g)
        assert dec.component_count == 3
        assert dec.vertices == ((0, 1), (2, 3), (4,))

    def test_bipartition_of_even_cycle(self):
        b = bipartition(generate("cycle(6)"))
        assert isinstance(b, Bipartition)
        check_bipartition(generate("cycle(6)"), b)

    def test_odd_cycle_witness(self):
        g = generate("cycle(5)")
        w = bipartition(g)
        assert isinstance(w, OddWalkWitness)
        check_odd_walk(g, w)

    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_bipartition_always_verifiable(self, g):
        res = bipartition(g)
        if isinstance(res, Bipartition):
            check_bipartition(g, res)
        else:
            check_odd_walk(g, res)


class TestTriangleFree:
    def test_triangle_witness(self):
        ok, tri = is_triangle_free(generate("complete(4)"))
        assert not ok and len(tri) == 3

    def test_petersen_triangle_free(self):
        assert is_triangle_free(generate("petersen"))[0]

    @given(small_graphs())
    @settings(max_examples=60, deadline=None)
    def test_witness_is_a_triangle(self, g):
        ok, tri = is_triangle_free(g)
        if not ok:
            a, b, c = tri
            eset = set(g.edges)
            assert {(a, b), (a, c), (b, c)} <= eset


class TestEnumeration:
    @given(small_graphs(max_n=7))
    @settings(max_examples=50, deadline=None)
    def test_cliques_match_oracle(self, g):
        assert enumerate_maximal_cliques(g) == oracle_maximal_cliques(g)

    @given(small_graphs(max_n=7))
    @settings(max_examples=50, deadline=None)
    def test_stable_sets_match_oracle(self, g):
        assert enumerate_maximal_stable_sets(g) == oracle_maximal_stable_sets(g)

    def test_stable_sets_match_networkx(self):
        nx = pytest.importorskip("networkx")
        g = generate("petersen")
        G = nx.Graph(list(g.edges))
        ours = set(enumerate_maximal_stable_sets(g))
        comp = nx.complement(G)
        theirs = {tuple(sorted(c)) for c in nx.find_cliques(comp)}
        assert ours == theirs


class TestInducedSubgraph:
    def test_labels_and_edges_survive(self):
        g = generate("cycle(5)")
        sub, old = induced_subgraph(g, {0, 1, 2})
        assert sub.n == 3 and sub.m == 2
        assert tuple(g.labels[v] for v in old) == sub.labels


class TestGallery:
    @pytest.mark.parametrize("text,n,m", [
        ("path(4)", 4, 3),
        ("cycle(6)", 6, 6),
        ("star(5)", 6, 5),
        ("complete(4)", 4, 6),
        ("complete_bipartite(4,3)", 7, 12),
        ("kmn_plus(2,3)", 8, 9),
        ("petersen", 10, 15),
        ("circulant(11,{1,3})", 11, 22),
        ("graph_h", 9, 14),
    ])
    def test_sizes(self, text, n, m):
        g = generate(text)
        assert (g.n, g.m) == (n, m)

    def test_descriptor_round_trip(self):
        for text in ("cycle(6)", "circulant(11,{1,3})", "petersen",
                     "star(3)+cycle(4)"):
            d = parse_descriptor(text)
            assert parse_descriptor(str(d)) == d

    def test_disjoint_union_descriptor(self):
        g = generate("star(3)+cycle(4)")
        assert components(g).component_count == 2
        assert g.n == 8 and g.m == 7

    @pytest.mark.parametrize("bad", [
        "cycle(2)", "circulant(6,{0})", "circulant(6,{4})",
        "circulant(6,{1,1})", "nonsense(3)", "petersen(2)",
        "complete_bipartite(4)",
    ])
    def test_bad_descriptors(self, bad):
        with pytest.raises(GraphError):
            generate(bad)

    def test_graph_h_shape(self):
        h = generate("graph_h")
        assert is_triangle_free(h)[0]
        assert min(h.degree(v) for v in range(h.n)) == 3
        # removing the two special edges leaves it bipartite with parts 5/4
        keep = [e for e in h.edges
                if {h.labels[e[0]], h.labels[e[1]]} not in ({"a", "b"}, {"c", "d"})]
        stripped = make_graph(h.labels, keep)
        b = bipartition(stripped)
        assert isinstance(b, Bipartition)
        assert sorted((len(b.side_a), len(b.side_b))) == [4, 5]
