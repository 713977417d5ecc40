import json
import subprocess
import sys

import pytest

from isouniv.cli import main
from isouniv.graph import cycle_graph, empty_graph, format_graph, path_graph

from helpers import k13_plus, k14


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    out = {
        "k14": write("k14.graph", format_graph(k14())),
        "kplus13": write("kplus13.graph", format_graph(k13_plus())),
        "p3": write("p3.graph", format_graph(path_graph(3))),
        "p4": write("p4.graph", format_graph(path_graph(4))),
        "c4": write("c4.graph", format_graph(cycle_graph(4))),
        "two": write("two.graph", format_graph(empty_graph(2))),
        "bad": write("bad.graph", "graph 2 1\n0 7\n"),
        "matrix": write("w.txt", "3 1\n1 3\n"),
        "tall": write("tall.txt", "1 5\n2 1\n4 4\n"),
        "3dm": write("sample.3dm", "3dm 2 4\n1 1 3\n1 2 4\n2 1 3\n2 2 4\n"),
        "dir": tmp_path,
        "write": write,
    }
    return out


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_star_pair(capsys, files):
    code, out, _ = run(capsys, "solve", files["k14"], files["kplus13"])
    assert code == 0
    obj = json.loads(out)
    assert obj["size"] == 6 and obj["method"] == "supertree" and obj["k"] == "inf"


def test_solve_forests_and_dot(capsys, files):
    code, out, _ = run(capsys, "solve", files["two"], files["p3"])
    assert code == 0 and json.loads(out)["method"] == "forest-pipeline"
    code, out, _ = run(capsys, "solve", files["k14"], files["p3"], "--format", "dot")
    assert code == 0 and out.startswith("graph U {")


def test_solve_refuses_cycles(capsys, files):
    code, _, err = run(capsys, "solve", files["c4"], files["p3"])
    assert code == 2 and "not a forest" in err


def test_embed_exit_codes(capsys, files):
    assert run(capsys, "embed", "--pattern", files["p4"], "--host", files["c4"], "--k", "inf")[0] == 1
    code, out, _ = run(capsys, "embed", "--pattern", files["p4"], "--host", files["c4"], "--k", "0")
    assert code == 0 and json.loads(out)["k"] == 0
    c12 = files["write"]("c12.graph", format_graph(cycle_graph(12)))
    code, _, err = run(capsys, "embed", "--pattern", files["p4"], "--host", c12, "--budget", "2")
    assert code == 3 and "inconclusive" in err


def test_input_errors(capsys, files):
    assert run(capsys, "embed", "--pattern", files["bad"], "--host", files["c4"])[0] == 2
    assert run(capsys, "embed", "--pattern", files["p4"], "--host", "/nonexistent")[0] == 2
    assert run(capsys, "embed", "--pattern", files["p4"], "--host", files["c4"], "--k", "x")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "gen", "--family", "greedy", "--r", "5")[0] == 2


def test_oracle(capsys, files):
    code, out, _ = run(capsys, "oracle", files["k14"], files["kplus13"], "--max-vertices", "6")
    assert code == 0 and json.loads(out)["size"] == 6
    code, out, _ = run(capsys, "oracle", files["k14"], files["kplus13"], "--max-vertices", "5")
    assert code == 1 and json.loads(out) == {"found": False, "max_vertices": 5}
    assert run(capsys, "oracle", files["p3"], "--max-vertices", "9")[0] == 2


def test_match(capsys, files):
    code, out, _ = run(capsys, "match", files["matrix"])
    assert code == 0 and json.loads(out) == {"pairs": [[0, 0], [1, 1]], "weight": 6}
    code, out, _ = run(capsys, "match", files["tall"])
    obj = json.loads(out)
    assert obj["weight"] == 9 and obj["pairs"] == [[0, 1], [2, 0]]


def test_gen_k_iso_manifest(capsys, files):
    code, out, _ = run(capsys, "gen", "--family", "k-iso", "--n", "15", "--k", "2")
    assert code == 0
    m = json.loads(out)
    assert [x["n"] for x in m["members"]] == [15, 14]
    assert m["extras"]["T"]["n"] == 19 and m["size"] == 17
    assert m["metadata"]["sizes"] == {"T0": 15, "T1": 14, "T": 19, "C": 17}


def test_gen_np_certificate_needs_matching(capsys, files):
    code, _, err = run(capsys, "gen", "--family", "np-certificate", "--instance", files["3dm"])
    assert code == 2 and "matching" in err


def _roundtrip(capsys, files, argv, inputs):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    path = files["write"]("solution.json", out)
    code, out, _ = run(capsys, "verify", path, *inputs)
    assert code == 0 and json.loads(out)["valid"] is True


def test_verify_roundtrips(capsys, files):
    pair = [files["k14"], files["kplus13"]]
    _roundtrip(capsys, files, ["solve", *pair], pair)
    _roundtrip(capsys, files, ["oracle", *pair, "--max-vertices", "6"], pair)
    _roundtrip(capsys, files, ["greedy", *pair, files["p3"], "--best-case"], pair + [files["p3"]])
    _roundtrip(capsys, files, ["greedy", *pair, "--order", "1,0"], pair)


@pytest.mark.parametrize(
    "family,params,members",
    [
        ("greedy", ["--r", "5", "--s", "1"], ["T1", "T2", "T3"]),
        ("k-iso", ["--n", "15", "--k", "2"], ["T0", "T1"]),
        ("star-triple", ["--t", "3"], ["T1", "T2", "T3"]),
        ("np-certificate", ["--matching", "1,1,3", "--matching", "2,2,4"], ["FX", "FY", "FZ"]),
    ],
)
def test_gen_outputs_verify(capsys, files, family, params, members):
    out_dir = files["dir"] / family
    argv = ["gen", "--family", family, *params, "--out", str(out_dir)]
    if family.startswith("np"):
        argv += ["--instance", files["3dm"]]
    assert run(capsys, *argv)[0] == 0
    inputs = [str(out_dir / f"{m}.graph") for m in members]
    code, out, _ = run(capsys, "verify", str(out_dir / "manifest.json"), *inputs)
    assert code == 0 and json.loads(out)["valid"]


def test_gen_np_reduction_has_no_host(capsys, files):
    code, out, _ = run(capsys, "gen", "--family", "np-reduction", "--instance", files["3dm"])
    m = json.loads(out)
    assert code == 0 and "edges" not in m
    assert [x["n"] for x in m["members"]] == [160, 44, 44]


def test_verify_rejects_wrong_inputs(capsys, files):
    code, out, _ = run(capsys, "solve", files["k14"], files["kplus13"])
    path = files["write"]("s.json", out)
    code, out, _ = run(capsys, "verify", path, files["kplus13"], files["k14"])
    assert code == 1 and json.loads(out)["valid"] is False
    bad = files["write"]("bad.json", "{not json")
    assert run(capsys, "verify", bad, files["k14"])[0] == 2


def test_identical_invocations_are_byte_identical(files):
    cmd = [sys.executable, "-m", "isouniv.cli", "solve", files["k14"], files["kplus13"]]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["size"] == 6
