import json

from g2crystal.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_dims(capsys):
    code, out = run_cli(["dims", "--max-level", "4"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 5
    for l, total in ((0, 1), (1, 15), (2, 92), (3, 365), (4, 1113)):
        assert f"level {l}: total dimension {total}  A-model count matches: yes" in lines[l]


def test_graph_dot_level1(capsys):
    code, out = run_cli(["graph", "--level", "1", "--format", "dot"], capsys)
    assert code == 0
    assert out.count('";') == 15  # one declaration per vertex
    assert '"9" -> "1" [label=0];' in out
    assert '"-2" -> "6" [label=0];' in out
    assert '"6" -> "02" [label=1];' in out


def test_graph_json_roundtrip(capsys):
    code, out = run_cli(["graph", "--level", "2", "--format", "json"], capsys)
    assert code == 0
    data = json.loads(out)
    assert len(data["vertices"]) == 92
    # every lowering edge has a raising certificate: the edge set is a
    # partial bijection per color
    for i in (0, 1, 2):
        edges = [(tuple(e["from"]), tuple(e["to"])) for e in data["edges"]
                 if e["color"] == i]
        assert len({a for a, _ in edges}) == len(edges)
        assert len({b for _, b in edges}) == len(edges)


def test_enumerate_and_minimal(capsys):
    code, out = run_cli(["enumerate", "--level", "2"], capsys)
    assert code == 0
    assert len(json.loads(out)) == 92
    code, out = run_cli(["minimal", "--level", "2"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 4
    assert {tuple(r["element"]) for r in rows} == {
        (), ("01",), ("1", "-1"), ("3", "-3")}


def test_verify_exit_code(capsys):
    code, out = run_cli(["verify", "--level", "2"], capsys)
    assert code == 0
    assert "all checks pass" in out


def test_connectivity(capsys):
    code, out = run_cli(["connectivity", "--level", "1"], capsys)
    assert code == 0
    data = json.loads(out)
    assert data["square_size"] == 225 and data["square_connected"]


def test_phi_dump(capsys):
    code, out = run_cli(["phi", "--level", "1"], capsys)
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 15
    by_param = {tuple(sorted(r["param"].items())): r["tableau"] for r in rows}
    key = tuple(sorted({"i": 0, "k": 1, "j": 1, "p": 0, "q": 0, "r": 0}.items()))
    assert by_param[key] == ["-2"]


def test_graph_text_format(capsys):
    code, out = run_cli(["graph", "--level", "1", "--format", "text"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 20  # 6 + 6 + 8 lowering edges at level 1
    assert "9 -0-> 1" in lines


def test_deterministic_output(capsys):
    _, out1 = run_cli(["graph", "--level", "2", "--format", "dot"], capsys)
    _, out2 = run_cli(["graph", "--level", "2", "--format", "dot"], capsys)
    assert out1 == out2


def test_usage_error_exit_code(capsys):
    assert main(["graph"]) == 2
    capsys.readouterr()
