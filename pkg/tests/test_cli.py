import json

import pytest

from alphametric import checks
from alphametric.checks import CheckResult
from alphametric.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main
from alphametric.generators import cycle, ladder, random_tree, triangular_grid
from alphametric.graph import read_graph_file, write_graph, write_graph_file


@pytest.fixture
def graph_file(tmp_path):
    def write(graph, name="graph.txt"):
        path = tmp_path / name
        write_graph_file(graph, str(path))
        return str(path)
    return write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_ladder(capsys, graph_file):
    code, out, err = run(capsys, "analyze", graph_file(ladder(3)))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["alpha_index"] == 6
    assert report["hyperbolicity_x2"] == 2
    assert report["diameter"] == 4
    assert "alpha index" in err


def test_analyze_tree(capsys, graph_file):
    code, out, _ = run(capsys, "analyze", "--quiet", graph_file(random_tree(8, seed=2)))
    report = json.loads(out)
    assert code == EXIT_OK
    assert (report["alpha_index"], report["hyperbolicity_x2"]) == (0, 0)
    assert report["metric_triangle_count"] == 0


def test_analyze_lambdas(capsys, graph_file):
    _, out, _ = run(capsys, "analyze", "--json", "--lambda", "0", "--lambda", "1/2", graph_file(cycle(4)))
    report = json.loads(out)
    assert [b["lambda_x2"] for b in report["bow_defects"]] == [0, 1]
    assert report["bow_defects"][0]["mu"] == 2
    assert "\n" not in out.strip()


def test_json_is_identical_across_thread_counts(capsys, graph_file, tunables):
    path = graph_file(triangular_grid(5))
    _, one, _ = run(capsys, "analyze", "--threads", "1", path)
    _, many, _ = run(capsys, "analyze", "--threads", "4", path)
    assert one == many


def test_malformed_input_is_a_usage_error(capsys, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_bytes(b"3 2\n0 1\n0 1\n")
    code, out, err = run(capsys, "analyze", str(path))
    assert code == EXIT_USAGE
    assert out == ""
    assert "line 3" in err


def test_missing_file_is_a_usage_error(capsys, tmp_path):
    code, _, _ = run(capsys, "analyze", str(tmp_path / "missing.txt"))
    assert code == EXIT_USAGE


def test_unknown_check(capsys, graph_file):
    code, _, err = run(capsys, "check", "no-such-check", graph_file(cycle(4)))
    assert code == EXIT_USAGE
    assert "no-such-check" in err


def test_bad_arguments_exit_with_usage_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0


def test_check_passes(capsys, graph_file):
    code, out, _ = run(capsys, "check", "main-bound", graph_file(ladder(2), "a.txt"), graph_file(cycle(5), "b.txt"))
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["check"] == "main-bound"
    assert [r["pass"] for r in report["results"]] == [True, True]
    assert report["results"][0]["file"].endswith("a.txt")


def test_check_failure_exits_one(capsys, graph_file, monkeypatch):
    monkeypatch.setitem(checks.CHECKS, "always-fails",
                        lambda ctx: CheckResult("always-fails", False, {"vertex": 1}, 1))
    code, out, err = run(capsys, "check", "always-fails", graph_file(cycle(4)))
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out)["results"][0]["witness"] == {"vertex": 1}
    assert "FAIL always-fails" in err


def test_generate_and_transform(capsys, tmp_path):
    ladder_path = str(tmp_path / "ladder.txt")
    assert main(["generate", "ladder", "--params", "l=3", "-o", ladder_path]) == EXIT_OK
    assert read_graph_file(ladder_path) == ladder(3)

    tree_path = str(tmp_path / "tree.txt")
    assert main(["generate", "random_tree", "--params", "n=6", "--seed", "4", "-o", tree_path]) == EXIT_OK
    assert read_graph_file(tree_path) == random_tree(6, seed=4)

    sub_path = str(tmp_path / "sub.txt")
    assert main(["transform", "subdivide", ladder_path, "-o", sub_path]) == EXIT_OK
    sub = read_graph_file(sub_path)
    assert sub.n == 8 + 10 and sub.m == 20

    square_path = str(tmp_path / "square.txt")
    assert main(["transform", "power", ladder_path, "--lambda", "4", "-o", square_path]) == EXIT_OK
    assert read_graph_file(square_path).m == 8 * 7 // 2


def test_hull_transform_writes_a_sidecar(capsys, graph_file, tmp_path):
    out_path = str(tmp_path / "hull.txt")
    assert main(["transform", "hull", graph_file(cycle(4)), "-o", out_path, "--dump-functions"]) == EXIT_OK
    assert read_graph_file(out_path).n == 5
    with open(out_path + ".json", encoding="utf-8") as handle:
        sidecar = json.load(handle)
    assert sidecar["original_to_hull"] == [0, 1, 4, 3]
    assert sidecar["functions"][2] == [1, 1, 1, 1]


def test_hull_cap_is_a_usage_error(capsys, graph_file, tmp_path):
    code = main(["transform", "hull", graph_file(cycle(4)), "--cap", "4", "-o", str(tmp_path / "h.txt")])
    assert code == EXIT_USAGE


def test_generate_rejects_bad_params(capsys, tmp_path):
    assert main(["generate", "g_p", "--params", "p=0", "-o", str(tmp_path / "g.txt")]) == EXIT_USAGE
    assert main(["generate", "ladder", "--params", "n=2", "-o", str(tmp_path / "g.txt")]) == EXIT_USAGE


def test_corpus_command(capsys, graph_file, monkeypatch):
    extra = graph_file(cycle(5), "extra.txt")
    code, out, _ = run(capsys, "corpus", "--quiet", "--families", "tree,ladder", "--seeds", "2",
                       "--checks", "thinness,bow", "--include", extra)
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["graphs"] == 2 + 5 + 1
    assert report["checks"]["bow"]["pass"] == 8
    assert report["failures"] == []

    monkeypatch.setitem(checks.CHECKS, "always-fails",
                        lambda ctx: CheckResult("always-fails", False, {"vertex": 2}, 1))
    code, out, err = run(capsys, "corpus", "--quiet", "--families", "ladder", "--checks", "always-fails")
    assert code == EXIT_CHECK_FAILED
    assert "FAIL always-fails ladder(l=1)" in err


def test_written_graph_is_canonical(tmp_path):
    path = str(tmp_path / "c4.txt")
    assert main(["generate", "cycle", "--params", "n=4", "-o", path]) == EXIT_OK
    with open(path, "rb") as handle:
        assert handle.read() == write_graph(cycle(4)) == b"4 4\n0 1\n0 3\n1 2\n2 3\n"
