import pytest

from equilab.common import GraphError
from equilab.equicert import decide_equi_exact, star_system
from equilab.graphs import generate, graph_from_label_pairs, make_graph
from equilab.matching import Matching
from equilab.recognizers import (
    NEITHER,
    STAR,
    TWO_INTERNALLY_EXTENDABLE,
    FivePath,
    check_five_path,
    check_strong_clique_map,
    component_classification,
    crosscheck_table1,
    general_partition,
    is_p5_constrained,
    recognize_equistarable_bipartite,
    recognize_equistarable_forest,
    triangle_condition,
)
from equilab.transforms import co_line


def spider(legs: int, leg_len: int):
    """Star center '0' with `legs` paths of `leg_len` extra vertices each."""
    pairs = []
    v = 1
    for _ in range(legs):
        prev = 0
        for _ in range(leg_len):
            pairs.append((str(prev), str(v)))
            prev = v
            v += 1
    return graph_from_label_pairs(pairs)


class TestP5Constrained:
    def test_p5_itself(self):
        v = is_p5_constrained(generate("path(5)"))
        assert v.is_no
        check_five_path(generate("path(5)"), v.witness)

    def test_petersen(self):
        assert is_p5_constrained(generate("petersen")).is_yes

    def test_k43(self):
        assert is_p5_constrained(generate("complete_bipartite(4,3)")).is_yes

    def test_non_induced_path_counts(self):
        # degree-2 vertex inside a cycle with pendant paths both sides
        g = generate("cycle(3)")
        assert is_p5_constrained(g).is_yes
        long = generate("cycle(8)")
        v = is_p5_constrained(long)
        assert v.is_no and isinstance(v.witness, FivePath)

    def test_singleton_neighborhood_edge_case(self):
        # bull-free shape: x and y share their only other neighbor
        g = graph_from_label_pairs([
            ("x", "v"), ("v", "y"), ("x", "z"), ("y", "z"), ("z", "t"), ("t", "x"), ("t", "y"),
        ])
        # v has degree 2; N(x)\{v,y} = {z,t}, N(y)\{v,x} = {z,t} -> pick distinct
        assert is_p5_constrained(g).is_no


class TestComponentClassification:
    def test_star_union_cycle(self):
        g = generate("star(5)+cycle(4)")
        tags = component_classification(g).tags
        assert [t.kind for t in tags] == [STAR, TWO_INTERNALLY_EXTENDABLE]

    def test_c6_neither_with_witness(self):
        g = generate("cycle(6)")
        tags = component_classification(g).tags
        assert tags[0].kind == NEITHER
        wit = tags[0].witness
        assert isinstance(wit, Matching)
        assert sorted(g.edge_name(e) for e in wit.edge_ids) == ["1-2", "4-5"]

    def test_k2_is_star(self):
        tags = component_classification(generate("path(2)")).tags
        assert [t.kind for t in tags] == [STAR]

    def test_isolated_vertex_rejected(self):
        with pytest.raises(GraphError):
            component_classification(make_graph(("a", "b", "c"), [(0, 1)]))


class TestRecognizeBipartite:
    def test_k43_no(self):
        assert recognize_equistarable_bipartite(generate("complete_bipartite(4,3)")).is_no

    def test_c4_yes(self):
        assert recognize_equistarable_bipartite(generate("cycle(4)")).is_yes

    def test_k23_plus_no(self):
        v = recognize_equistarable_bipartite(generate("kmn_plus(2,3)"))
        assert v.is_no and isinstance(v.witness, Matching)

    def test_non_bipartite_rejected(self):
        with pytest.raises(GraphError):
            recognize_equistarable_bipartite(generate("cycle(5)"))

    def test_agrees_with_exact_decision(self, small_bipartite_corpus):
        for g in small_bipartite_corpus:
            rec = recognize_equistarable_bipartite(g).is_yes
            exact = decide_equi_exact(star_system(g)).is_yes
            assert rec == exact, g.edges


class TestRecognizeForest:
    def test_p4_yes(self):
        assert recognize_equistarable_forest(generate("path(4)")).is_yes

    def test_p5_no(self):
        v = recognize_equistarable_forest(generate("path(5)"))
        assert v.is_no
        check_five_path(generate("path(5)"), v.witness)

    def test_spider_legs_two_yes(self):
        # each middle-of-leg vertex has its leaf as neighbor
        assert recognize_equistarable_forest(spider(3, 2)).is_yes

    def test_spider_legs_three_no(self):
        assert recognize_equistarable_forest(spider(3, 3)).is_no

    def test_cycle_rejected(self):
        with pytest.raises(GraphError):
            recognize_equistarable_forest(generate("cycle(4)"))

    def test_agrees_with_bipartite_recognizer_on_trees(self):
        nx = pytest.importorskip("networkx")
        for n in range(2, 9):
            for t in nx.nonisomorphic_trees(n):
                g = make_graph(tuple(str(v) for v in range(n)), list(t.edges()))
                fast = recognize_equistarable_forest(g).is_yes
                slow = recognize_equistarable_bipartite(g).is_yes
                p5 = is_p5_constrained(g).is_yes
                assert fast == slow == p5, g.edges


class TestTriangleCondition:
    def test_k3(self):
        assert triangle_condition(generate("complete(3)")).is_yes

    def test_co_line_p5_no(self):
        assert triangle_condition(co_line(generate("path(5)")).graph).is_no

    def test_co_line_k43_yes(self):
        assert triangle_condition(co_line(generate("complete_bipartite(4,3)")).graph).is_yes

    def test_matches_p5_on_corpus(self, triangle_free_corpus):
        for g in triangle_free_corpus:
            want = is_p5_constrained(g).is_yes
            got = triangle_condition(co_line(g).graph).is_yes
            assert want == got, g.edges


class TestGeneralPartition:
    def test_k3(self):
        v = general_partition(generate("complete(3)"))
        assert v.is_yes
        check_strong_clique_map(generate("complete(3)"), v.witness)

    def test_co_line_c6_no(self):
        assert general_partition(co_line(generate("cycle(6)")).graph).is_no

    def test_co_line_c4_yes(self):
        assert general_partition(co_line(generate("cycle(4)")).graph).is_yes

    def test_matches_classification_on_corpus(self, triangle_free_corpus):
        for g in triangle_free_corpus:
            want = component_classification(g).all_good
            got = general_partition(co_line(g).graph).is_yes
            assert want == got, g.edges


class TestCrosscheck:
    def test_p5_all_no(self):
        rep = crosscheck_table1(generate("path(5)"))
        assert not rep.violations
        assert all(o.left.value == o.right.value == "no" for o in rep.rows.values())

    def test_k33_all_yes(self):
        rep = crosscheck_table1(generate("complete_bipartite(3,3)"))
        assert not rep.violations
        assert all(o.left.value == o.right.value == "yes" for o in rep.rows.values())

    def test_graph_h_split_rows(self):
        rep = crosscheck_table1(generate("graph_h"))
        assert not rep.violations
        values = {row: o.left.value for row, o in rep.rows.items()}
        assert values == {"partition": "no", "strong": "no",
                          "equi": "yes", "p5": "yes"}

    def test_triangle_rejected(self):
        with pytest.raises(GraphError):
            crosscheck_table1(generate("complete(3)"))

    def test_corpus_clean(self, triangle_free_corpus):
        for g in triangle_free_corpus:
            rep = crosscheck_table1(g)
            assert not rep.violations, g.edges
