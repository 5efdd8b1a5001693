import json

import pytest

from arcbricks.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_map_json_golden(capsys):
    code, out, _ = run(capsys, "map", "--n", "2", "--perm", "312", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["permutation"] == "312"
    assert data["arcs"][0]["left"] == 1
    assert data["arcs"][0]["right"] == 3
    assert data["arcs"][0]["above"] == [2]
    assert data["arcs"][0]["color"] == "green"
    assert data["arcs"][0]["shift"] == 0
    assert data["arcs"][0]["module"]["dims"] == [1, 1]
    assert data["arcs"][1]["color"] == "red"
    assert data["arcs"][1]["shift"] == 1


def test_map_identity_is_red(capsys):
    code, out, _ = run(capsys, "map", "--n", "2", "--perm", "123", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert [a["color"] for a in data["arcs"]] == ["red", "red"]
    assert [(a["left"], a["right"]) for a in data["arcs"]] == [(1, 2), (2, 3)]


def test_map_worked_example(capsys):
    code, out, _ = run(capsys, "map", "--n", "7", "--perm", "53271468")
    assert code == 0
    data = json.loads(out)
    greens = [
        (a["left"], a["right"], tuple(a["above"]))
        for a in data["arcs"]
        if a["color"] == "green"
    ]
    assert sorted(greens) == [(1, 7, (4, 6)), (2, 3, ()), (3, 5, (4,))]


def test_map_usage_errors(capsys):
    code, _, err = run(capsys, "map", "--n", "2", "--perm", "99")
    assert code == 2 and "bad permutation" in err
    code, _, err = run(capsys, "map", "--n", "3", "--perm", "312")
    assert code == 2 and "rank" in err
    code, _, _ = run(capsys, "map", "--n", "2")
    assert code == 2  # argparse: missing --perm


def test_map_deterministic(capsys):
    _, first, _ = run(capsys, "map", "--n", "4", "--perm", "35142")
    _, second, _ = run(capsys, "map", "--n", "4", "--perm", "35142")
    assert first == second


def test_mutate_figure_step(capsys):
    code, out, _ = run(
        capsys, "mutate", "--n", "3", "--perm", "4321", "--i", "3", "--dir", "left"
    )
    assert code == 0
    data = json.loads(out)
    assert data["permutation"] == "4312"
    code, out, _ = run(
        capsys, "mutate", "--n", "3", "--perm", "4321", "--i", "1", "--dir", "left"
    )
    assert json.loads(out)["permutation"] == "3421"


def test_mutate_right_direction(capsys):
    code, out, _ = run(
        capsys, "mutate", "--n", "2", "--perm", "123", "--i", "1", "--dir", "right"
    )
    assert code == 0
    assert json.loads(out)["permutation"] == "213"


def test_mutate_color_mismatch_exit(capsys):
    code, _, err = run(
        capsys, "mutate", "--n", "3", "--perm", "1234", "--i", "1", "--dir", "left"
    )
    assert code == 3
    assert "green" in err


def test_hasse_dot(capsys):
    code, out, _ = run(capsys, "hasse", "--n", "2", "--format", "dot")
    assert code == 0
    assert out.count("[label=\"mu") == 6
    assert out.count("->") == 6
    assert len([l for l in out.splitlines() if "[label=\"" in l and "mu" not in l]) == 6


def test_hasse_cap(capsys):
    code, _, err = run(capsys, "hasse", "--n", "7")
    assert code == 4 and "cap" in err


def test_count(capsys):
    code, out, _ = run(capsys, "count", "--family", "rnad", "--n", "4")
    assert code == 0 and out == "42\n"
    code, out, _ = run(capsys, "count", "--family", "nad", "--n", "3", "--format", "json")
    assert json.loads(out) == {"family": "nad", "n": 3, "count": 24}
    code, _, _ = run(capsys, "count", "--n", "9")
    assert code == 4


def test_count_custom_ideal(capsys):
    code, out, _ = run(
        capsys,
        "count",
        "--family",
        "custom",
        "--n",
        "2",
        "--ideal",
        '["a1-"]',
    )
    assert code == 0 and out == "5\n"
    code, _, err = run(capsys, "count", "--family", "custom", "--n", "2")
    assert code == 2
    code, _, err = run(
        capsys, "count", "--family", "custom", "--n", "2", "--ideal", '["q9"]'
    )
    assert code == 2
    code, _, err = run(
        capsys, "count", "--family", "custom", "--n", "2", "--ideal", '["a9"]'
    )
    assert code == 2 and "outside" in err


def test_check_suites(capsys):
    code, out, _ = run(capsys, "check", "--suite", "homs", "--max-n", "3")
    assert code == 0
    assert out.count("PASS") == 2
    assert "all checks passed" in out
    code, _, err = run(capsys, "check", "--suite", "nope", "--max-n", "3")
    assert code == 2
    code, _, err = run(capsys, "check", "--suite", "all", "--max-n", "6")
    assert code == 4


def test_check_all_suite_passes(capsys):
    code, out, _ = run(capsys, "check", "--suite", "all", "--max-n", "3")
    assert code == 0
    assert out.count("PASS") == 11


def test_render_svg(capsys):
    code, out, _ = run(capsys, "render", "--n", "2", "--perm", "312", "--format", "svg")
    assert code == 0
    assert out.startswith('<?xml version="1.0"')
    assert out.count("<path") == 2
    assert 'stroke="green"' in out and 'stroke="red"' in out
    assert out.count("<circle") == 3
    _, again, _ = run(capsys, "render", "--n", "2", "--perm", "312", "--format", "svg")
    assert out == again


def test_render_tikz(capsys):
    code, out, _ = run(capsys, "render", "--n", "2", "--perm", "312", "--format", "tikz")
    assert code == 0
    assert out.startswith("\\begin{tikzpicture}")
    assert "\\draw[green]" in out and "\\draw[red, dashed]" in out


def test_out_file(tmp_path, capsys):
    target = tmp_path / "g.dot"
    code, out, _ = run(capsys, "hasse", "--n", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().startswith("digraph mutation {")
