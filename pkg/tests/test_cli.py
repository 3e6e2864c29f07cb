import json

import pytest

from equilab.cli import main
from equilab.equicert import certificate_from_json, star_system
from equilab.graphs import generate, parse_edge_list, same_labeled_graph


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


class TestAnalyze:
    def test_k43_not_equistarable(self, capsys):
        code, out = run(capsys, ["analyze", "gallery:complete_bipartite(4,3)"])
        assert code == 0
        rep = json.loads(out)
        assert rep["schema"] == 1
        assert rep["properties"]["equistarable"]["value"] == "no"
        assert rep["properties"]["p5_constrained"]["value"] == "yes"

    def test_c4_weighting_witness(self, capsys):
        code, out = run(capsys, ["analyze", "gallery:cycle(4)"])
        rep = json.loads(out)
        w = rep["properties"]["equistarable"]["witness"]
        assert w["type"] == "weighting"
        assert all(e["num"] > 0 for e in w["weights"])

    def test_petersen_strong_certificate(self, capsys):
        code, out = run(capsys, ["analyze", "gallery:petersen", "--strong"])
        assert code == 0
        rep = json.loads(out)
        cert = rep["properties"]["equistarable"]["witness"]
        assert cert["type"] == "forced_value"
        assert cert["value"] == {"num": 1, "den": 1}
        assert rep["properties"]["strongly_equistarable"]["value"] == "no"

    def test_with_co_line(self, capsys):
        code, out = run(capsys, ["analyze", "gallery:cycle(4)", "--with-co-line"])
        rep = json.loads(out)
        assert rep["properties"]["triangle_condition"]["value"] == "yes"
        assert rep["properties"]["general_partition"]["value"] == "yes"
        assert rep["properties"]["equistable"]["value"] == "yes"

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("a b\nb c\n"))
        code, out = run(capsys, ["analyze", "-"])
        assert code == 0
        assert json.loads(out)["graph"]["n"] == 3

    def test_missing_file_exit_2(self, capsys):
        assert main(["analyze", "does/not/exist"]) == 2

    def test_bad_descriptor_exit_2(self, capsys):
        assert main(["analyze", "gallery:cycle(2)"]) == 2

    def test_determinism(self, capsys):
        _, first = run(capsys, ["analyze", "gallery:graph_h", "--strong", "--seed", "3"])
        _, second = run(capsys, ["analyze", "gallery:graph_h", "--strong", "--seed", "3"])
        assert first == second


class TestCertify:
    def test_c6_forced_pair(self, capsys):
        code, out = run(capsys, ["certify", "gallery:cycle(6)", "--target", "1-2,4-5"])
        assert code == 0
        rep = json.loads(out)
        cert = rep["certificate"]
        assert cert["value"] == {"num": 1, "den": 1}
        # parses back into a verified certificate object
        s = star_system(generate("cycle(6)"))
        certificate_from_json(s, cert)

    def test_k23_plus_leaf_edges(self, capsys):
        code, out = run(capsys, ["certify", "gallery:kmn_plus(2,3)",
                                 "--target", "b1-l1,b2-l2,b3-l3"])
        rep = json.loads(out)
        assert rep["certificate"]["value"] == {"num": 1, "den": 1}

    def test_c4_opposite_not_forced(self, capsys):
        code, out = run(capsys, ["certify", "gallery:cycle(4)", "--target", "1-2,3-4"])
        assert code == 0
        rep = json.loads(out)
        assert "not_forced" in rep

    def test_vertex_targets_use_stable_system(self, capsys):
        code, out = run(capsys, ["certify", "gallery:complete(3)", "--target", "1"])
        assert code == 0
        rep = json.loads(out)
        assert rep["certificate"]["value"] == {"num": 1, "den": 1}

    def test_unknown_labels_exit_2(self, capsys):
        assert main(["certify", "gallery:cycle(4)", "--target", "9-9"]) == 2


class TestGallery:
    def test_cycle5_line_count(self, capsys):
        code, out = run(capsys, ["gallery", "cycle(5)"])
        assert code == 0
        assert len(out.strip().splitlines()) == 5

    def test_kmn_plus_nine_lines(self, capsys):
        _, out = run(capsys, ["gallery", "kmn_plus(2,3)"])
        assert len(out.strip().splitlines()) == 9

    def test_round_trip_as_labeled_graph(self, capsys):
        for desc in ("cycle(5)", "kmn_plus(2,3)", "graph_h", "petersen"):
            _, out = run(capsys, ["gallery", desc])
            assert same_labeled_graph(parse_edge_list(out), generate(desc))

    def test_file_output(self, capsys, tmp_path):
        target = tmp_path / "g.edges"
        code, _ = run(capsys, ["gallery", "path(3)", "-o", str(target)])
        assert code == 0
        assert same_labeled_graph(parse_edge_list(target.read_text()), generate("path(3)"))

    def test_bad_descriptor(self, capsys):
        assert main(["gallery", "cycle(1)"]) == 2


class TestCrosscheck:
    def test_trivial_max_n_2(self, capsys):
        code, out = run(capsys, ["crosscheck", "--max-n", "2"])
        assert code == 0
        rep = json.loads(out)
        assert rep["graphs_checked"] == 1
        assert rep["violations"] == []

    def test_max_n_4_clean(self, capsys):
        code, out = run(capsys, ["crosscheck", "--max-n", "4"])
        rep = json.loads(out)
        assert rep["violations"] == []
        assert rep["graphs_checked"] == 5

    def test_sampled_run_is_clean_and_deterministic(self, capsys):
        _, out1 = run(capsys, ["crosscheck", "--max-n", "3", "--samples", "3",
                               "--seed", "11"])
        _, out2 = run(capsys, ["crosscheck", "--max-n", "3", "--samples", "3",
                               "--seed", "11"])
        assert out1 == out2
        assert json.loads(out1)["violations"] == []

    def test_exhaustive_cap(self, capsys):
        assert main(["crosscheck", "--max-n", "9"]) == 2
