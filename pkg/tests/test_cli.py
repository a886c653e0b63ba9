import json
import subprocess
import sys

import pytest

from qextremal.cli import main
from qextremal.constructions import cycle, cycle_star
from qextremal.graph import from_graph6, to_edge_list, to_graph6
from qextremal.search import is_isomorphic


def run(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_q_on_c7(monkeypatch, capsys):
    code, out, _ = run(["q"], to_graph6(cycle(7)), monkeypatch, capsys)
    assert code == 0 and out.strip() == "4.0"
    code, out, _ = run(["q", to_graph6(cycle(7)), "--json"], None, monkeypatch, capsys)
    assert json.loads(out) == {"schema": 1, "graph6": to_graph6(cycle(7)), "q_index": 4.0}


def test_graph_from_file(tmp_path, monkeypatch, capsys):
    f = tmp_path / "g.txt"
    f.write_text(to_edge_list(cycle_star(1, 6)))
    code, out, _ = run(["oddgirth", "--file", str(f)], None, monkeypatch, capsys)
    d = json.loads(out)
    assert code == 0 and d["odd_girth"] == 5 and len(d["shortest_odd_cycle"]) == 5


def test_construct_round_trips(monkeypatch, capsys):
    code, out, _ = run(["construct", "cycle_star", "2", "9"], None, monkeypatch, capsys)
    assert code == 0 and from_graph6(out) == cycle_star(2, 9)
    code, out, _ = run(["construct", "blow_up_cycle", "5", "2", "1", "1", "1", "1"], None, monkeypatch, capsys)
    assert from_graph6(out).size() == 7
    code, _, err = run(["construct", "cycle", "1", "2"], None, monkeypatch, capsys)
    assert code == 2 and err


def test_perron_and_charpoly(tmp_path, monkeypatch, capsys):
    code, out, _ = run(["perron", to_graph6(cycle(4))], None, monkeypatch, capsys)
    d = json.loads(out)
    assert code == 0 and d["eigenvalue"] == 4.0 and d["vector"] == [0.5] * 4
    code, out, _ = run(["charpoly", to_graph6(cycle(3)), "--root"], None, monkeypatch, capsys)
    d = json.loads(out)
    assert d["coefficients"] == [-4, 9, -6, 1] and d["largest_root"] == 4.0
    m = tmp_path / "m.json"
    m.write_text("[[1, 0], [0, 1]]")
    code, out, _ = run(["charpoly", "--matrix", str(m)], None, monkeypatch, capsys)
    assert json.loads(out)["polynomial"] == "x^2 - 2x + 1"


def test_quotient_pass_and_fail(tmp_path, monkeypatch, capsys):
    good = tmp_path / "good.json"
    good.write_text("[[0], [1, 4], [2, 3]]")
    code, out, _ = run(["quotient", to_graph6(cycle(5)), "--partition", str(good)], None, monkeypatch, capsys)
    assert code == 0 and json.loads(out)["equitable"]
    bad = tmp_path / "bad.json"
    bad.write_text("[[0, 1], [2, 3, 4, 5]]")
    code, out, _ = run(["quotient", to_graph6(cycle_star(1, 6)), "--partition", str(bad)], None, monkeypatch, capsys)
    assert code == 1 and json.loads(out)["result"] == "FAIL"


def test_bounds_command(monkeypatch, capsys):
    code, out, _ = run(["bounds", to_graph6(cycle_star(1, 8))], None, monkeypatch, capsys)
    d = json.loads(out)
    assert code == 0 and d["edge_degree_bound"] == 7 and d["degree_avg_bound"] == "32/5"


def test_certify_and_search(monkeypatch, capsys):
    code, out, _ = run(["certify", "--theorem", "1.3", "--n", "8", "--k", "2", "--threads", "1"],
                       None, monkeypatch, capsys)
    d = json.loads(out)
    assert code == 0 and d["result"] == "PASS"
    (g6,) = d["search"]["maximizers"]
    from qextremal.constructions import extremal_by_order
    assert is_isomorphic(from_graph6(g6), extremal_by_order(8, 2))
    code, out, _ = run(["search", "--size", "7", "--k", "2", "--threads", "1", "--runtime"],
                       None, monkeypatch, capsys)
    d = json.loads(out)
    assert code == 0 and d["max_q"] == 4.0 and "runtime" in d


def test_lemmas_command(monkeypatch, capsys):
    code, out, _ = run(["lemmas", "--suite", "3.3"], None, monkeypatch, capsys)
    assert code == 0
    assert out.startswith("suite 3.3: PASS")
    assert "x(x-3)(x^2-" in out


def test_usage_errors(monkeypatch, capsys):
    assert run(["q", "not-graph6"], None, monkeypatch, capsys)[0] == 2
    assert run(["q"], "", monkeypatch, capsys)[0] == 2
    assert run(["certify", "--theorem", "1.4", "--n", "8", "--k", "1"], None, monkeypatch, capsys)[0] == 2
    assert run(["search", "--order", "12", "--k", "2"], None, monkeypatch, capsys)[0] == 2
    assert run(["search", "--order", "8", "--k", "2", "--threads", "0"], None, monkeypatch, capsys)[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "qextremal.cli", "q", to_graph6(cycle(9))],
                         capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "4.0"
