import csv
import subprocess
import sys

import pytest

from sclub.cli import FormatError, main, parse, parse_text, same_instance, serialize, serialize_text
from sclub.cli.fileio import format_deleted, parse_deleted, read_solution
from sclub.graph import Digraph, Graph
from sclub.instances import random_dag, random_instance, random_interval
from sclub.verifier import Instance

P4 = "p sced 4 3 2 1\ne 1 2\ne 2 3\ne 3 4\n"


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text(P4)
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_minimal_file():
    inst = parse_text("p sced 2 1 2 1\ne 1 2")
    assert inst.graph == Graph(2, [(0, 1)]) and inst.s == 2 and inst.k == 1


def test_directed_file():
    inst = parse_text("p scad 3 2 1 0\ne 1 2\ne 3 2\n")
    assert isinstance(inst.graph, Digraph) and inst.graph.arcs == frozenset({(0, 1), (2, 1)})


def test_interval_lines():
    inst = parse_text("p sced 2 1 1 0\ne 1 2\ni 1 0 2\ni 2 1 3\n")
    assert inst.model == {0: (0, 2), 1: (1, 3)}


def test_weights_and_terminals_round_trip():
    g = Graph(3, [(0, 1), (1, 2)], {(0, 1): 4})
    inst = Instance(g, 1, 5, terminals=((0, 2),), metadata={"note": "x"})
    back = parse_text(serialize_text(inst, ["hello"]))
    assert same_instance(inst, back)
    assert back.graph.weight(0, 1) == 4


@pytest.mark.parametrize("text, line, reason", [
    ("e 1 2\n", 1, "before the problem line"),
    ("p sced 2 2 1 1\ne 1 2\ne 2 1\n", 3, "duplicate edge"),
    ("p sced 2 1 1 1\ne 1 3\n", 2, "out of range"),
    ("p sced 2 2 1 1\ne 1 2\n", 0, "header says 2 edges"),
    ("p sced 2 1 1 1\ne 1 x\n", 2, "non-integer"),
    ("p sced 2 1 1 1\ne 1 2\ni 1 0 1\n", 0, "intervals given for 1 of 2"),
    ("p foo 2 1 1 1\n", 1, "problem line"),
    ("p sced 2 1 1 1\nq 1\n", 2, "unknown line type"),
    ("", 0, "missing problem line"),
])
def test_format_errors(text, line, reason):
    with pytest.raises(FormatError) as exc:
        parse_text(text)
    assert exc.value.line == line and reason in exc.value.reason


def test_round_trip_property(rng, tmp_path):
    for i in range(60):
        if i % 3 == 0:
            inst = random_instance(rng)
        elif i % 3 == 1:
            g, model = random_interval(rng.randint(1, 10), rng)
            inst = Instance(g, rng.randint(0, 4), rng.randint(0, 4), model)
        else:
            inst = Instance(random_dag(rng.randint(1, 8), 0.4, rng), 2, 1)
        path = tmp_path / f"x{i}.txt"
        serialize(inst, str(path))
        assert same_instance(inst, parse(str(path)))


def test_deleted_field():
    assert format_deleted([(2, 3), (0, 1)]) == "1-2,3-4"
    assert parse_deleted("1-2,3-4") == [(0, 1), (2, 3)]
    assert parse_deleted("") == []


def test_solve_oracle(p4_file, capsys):
    code, out, _ = run(["solve", p4_file, "--algo", "oracle"], capsys)
    assert code == 0 and out.splitlines()[0].startswith("STATUS=yes OPT=1 DELETED=")


@pytest.mark.parametrize("algo", ["auto", "branch", "interval", "unit", "nd", "approx"])
def test_solve_each_algo(p4_file, capsys, algo):
    code, out, _ = run(["solve", p4_file, "--algo", algo, "--detail"], capsys)
    assert code == 0 and "OPT=1" in out


def test_solve_no(tmp_path, capsys):
    path = tmp_path / "p4k0.txt"
    path.write_text(P4.replace("2 1\n", "2 0\n", 1))
    code, out, _ = run(["solve", str(path)], capsys)
    assert code == 1 and out.strip() == "STATUS=no OPT=none DELETED="


def test_class_mismatch(tmp_path, capsys):
    path = tmp_path / "c4.txt"
    path.write_text("p sced 4 4 1 2\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n")
    code, _, err = run(["solve", str(path), "--algo", "interval"], capsys)
    assert code == 4 and "interval" in err


def test_format_error_exit(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("p sced 2 1 1 1\ne 1 9\n")
    code, _, err = run(["solve", str(path)], capsys)
    assert code == 3 and ":2:" in err


def test_missing_file_exit(tmp_path, capsys):
    code, _, _ = run(["solve", str(tmp_path / "none.txt")], capsys)
    assert code == 3


def test_usage_error(p4_file):
    with pytest.raises(SystemExit) as exc:
        main(["solve", p4_file, "--algo", "magic"])
    assert exc.value.code == 2


def test_verify_wrong_solution(p4_file, tmp_path, capsys):
    sol = tmp_path / "sol.txt"
    sol.write_text("STATUS=yes OPT=0 DELETED=\n")
    code, out, _ = run(["verify", p4_file, "--solution", str(sol)], capsys)
    assert code == 1 and out.strip() == "STATUS=no WITNESS=1,4 DIST=3"


def test_verify_budget_and_good(p4_file, tmp_path, capsys):
    sol = tmp_path / "sol.txt"
    sol.write_text("d 1 2\nd 3 4\n")
    code, out, _ = run(["verify", p4_file, "--solution", str(sol)], capsys)
    assert code == 1 and "BUDGET_EXCESS=1" in out
    sol.write_text("STATUS=yes OPT=1 DELETED=2-3\n")
    code, out, _ = run(["verify", p4_file, "--solution", str(sol)], capsys)
    assert code == 0 and out.startswith("STATUS=yes")
    assert read_solution(str(sol)) == [(1, 2)]


def test_solve_output_feeds_verify(p4_file, tmp_path, capsys):
    code, out, _ = run(["solve", p4_file], capsys)
    sol = tmp_path / "sol.txt"
    sol.write_text(out)
    assert run(["verify", p4_file, "--solution", str(sol)], capsys)[0] == 0


def test_generate_clique_to_split(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code, _, _ = run(["--seed", "3", "generate", "clique-to-split", "--r", "3", "--n", "4", "--k", "3",
                      "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert "c gadget: " in text and "k'=3" in text
    inst = parse(str(out))
    assert inst.s == 2 and inst.k == 3


@pytest.mark.parametrize("argv", [
    ["generate", "mmo", "--n", "2", "--r", "1"],
    ["generate", "rbds-vc", "--nr", "2", "--nb", "2", "--k", "1"],
    ["generate", "multicut-arc", "--n", "3", "--k", "1"],
    ["generate", "interval", "--n", "8"],
    ["generate", "dag", "--n", "5"],
])
def test_generate_parses_back(argv, tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(argv + ["--out", str(out)], capsys)[0] == 0
    parse(str(out))


def test_generate_is_seeded(capsys):
    a = run(["--seed", "5", "generate", "random", "--n", "7"], capsys)[1]
    b = run(["--seed", "5", "generate", "random", "--n", "7"], capsys)[1]
    assert a == b


def test_kernelize(tmp_path, capsys):
    src = tmp_path / "star.txt"
    src.write_text("p sced 4 3 2 1\ne 1 2\ne 1 3\ne 1 4\n")
    out = tmp_path / "k.txt"
    code, stdout, _ = run(["kernelize", str(src), "--out", str(out)], capsys)
    assert code == 0 and stdout.startswith("KERNEL=")
    assert "c kernel verdict=" in out.read_text()
    parse(str(out))


def test_kernelize_rejects_non_split(tmp_path, capsys):
    src = tmp_path / "c4.txt"
    src.write_text("p sced 4 4 2 1\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n")
    assert run(["kernelize", str(src)], capsys)[0] == 4


def test_recognize(p4_file, capsys):
    code, out, _ = run(["recognize", p4_file], capsys)
    assert code == 0
    assert "interval=yes" in out and "unit-interval=yes" in out and "diameter=3" in out


def test_dump_states(tmp_path, p4_file, capsys):
    dump = tmp_path / "states.txt"
    assert run(["solve", p4_file, "--algo", "interval", "--dump-states", str(dump)], capsys)[0] == 0
    assert dump.read_text().strip()


def test_bench(tmp_path, capsys):
    path = tmp_path / "b.csv"
    code, out, _ = run(["bench", "--grid", "class=interval,unit;n=8;s=2;k=1;reps=2", "--csv", str(path)],
                       capsys)
    assert code == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 4
    assert list(rows[0]) == ["instance-id", "class", "n", "m", "s", "k", "algo", "opt", "states-max", "millis"]


def test_module_entry_point(p4_file):
    res = subprocess.run([sys.executable, "-m", "sclub", "solve", p4_file], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.startswith("STATUS=yes OPT=1")
