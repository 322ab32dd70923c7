"""End-to-end command line tests driving effdom.cli.run with real files."""

from __future__ import annotations

import json

import pytest

from effdom.cli import run
from effdom.graphs import complete, cycle, hamming_graph
from effdom.jsonio import dump_json, graph_to_doc


@pytest.fixture()
def write_doc(tmp_path):
    def _write(name: str, doc: dict) -> str:
        path = tmp_path / name
        path.write_text(dump_json(doc), encoding="utf-8")
        return str(path)

    return _write


def invoke(capsys, argv):
    code = run(argv)
    captured = capsys.readouterr()
    doc = json.loads(captured.out) if captured.out else None
    return code, doc, captured.err


def test_gen_cycle(capsys):
    code, doc, _ = invoke(capsys, ["gen", "--family", "cycle", "--n", "6"])
    assert code == 0
    assert doc["n"] == 6 and len(doc["edges"]) == 6


def test_gen_hamming_field_and_alphabet(capsys):
    code, doc, _ = invoke(capsys, ["gen", "--family", "hamming", "--q", "4", "--b", "2", "--d", "2"])
    assert code == 0 and doc["n"] == 16
    code2, doc2, _ = invoke(capsys, ["gen", "--family", "hamming", "--alphabet", "6", "--d", "2"])
    assert code2 == 0 and doc2["n"] == 36
    # 6 is not a prime power, so the field route must fail
    code3, _, err = invoke(capsys, ["gen", "--family", "hamming", "--q", "6", "--d", "2"])
    assert code3 == 2 and err


def test_gen_missing_flag(capsys):
    code, _, err = invoke(capsys, ["gen", "--family", "cycle"])
    assert code == 2 and "--n" in err


def test_verify_roundtrip(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    fgood = write_doc("good.json", {"j": 1, "k": 1, "values": [1, 0, 0, 1, 0, 0]})
    fbad = write_doc("bad.json", {"j": 1, "k": 1, "values": [1, 1, 0, 1, 0, 0]})
    code, doc, _ = invoke(capsys, ["verify", "--graph", gpath, "--function", fgood])
    assert code == 0 and doc["ok"] is True and doc["observed_k"] == 1
    code2, doc2, _ = invoke(capsys, ["verify", "--graph", gpath, "--function", fbad])
    assert code2 == 1 and doc2["ok"] is False and doc2["violations"]
    code3, doc3, _ = invoke(capsys, ["verify", "--dominating", "--graph", gpath, "--function", fbad])
    assert code3 == 0 and doc3["ok"] is True and doc3["mode"] == "dominating"


def test_verify_missing_file(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    code, _, err = invoke(capsys, ["verify", "--graph", gpath, "--function", "/nonexistent.json"])
    assert code == 2 and err


def test_construct(capsys):
    code, doc, _ = invoke(capsys, ["construct", "--q", "2", "--d", "5", "--k", "3"])
    assert code == 0
    assert sum(doc["values"]) == 16 and doc["k"] == 3
    assert doc["provenance"] == {"a": 1, "m": 3, "fibres": 2}


def test_construct_infeasible(capsys):
    code, _, err = invoke(capsys, ["construct", "--q", "2", "--d", "5", "--k", "2"])
    assert code == 2 and "divisibility" in err
    code2, _, err2 = invoke(capsys, ["construct", "--q", "4", "--b", "2", "--d", "13", "--k", "5"])
    assert code2 == 2 and "open" in err2


def test_feasible(capsys):
    code, doc, _ = invoke(capsys, ["feasible", "--q", "4", "--b", "2", "--d", "13"])
    assert code == 0
    assert doc["open_k"] == [5, 15, 25, 35]
    assert doc["partition"] == "10-cover of K_4"
    assert doc["expression"] == "(q-1)*d+1"


def test_verify_plan(capsys):
    code, doc, _ = invoke(capsys, ["verify-plan", "--q", "2", "--d", "5"])
    assert code == 0 and doc["certified"] and doc["fold"] == 3 and doc["mode"] == "full"
    code2, doc2, _ = invoke(capsys, ["verify-plan", "--q", "2", "--d", "7", "--sample", "20", "--seed", "3"])
    assert code2 == 0 and doc2["mode"] == "sampled:20:3"


def test_spectrum(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    code, doc, _ = invoke(capsys, ["spectrum", "--graph", gpath])
    assert code == 0 and doc["multiplicity"] == 2
    assert doc["witness"] is not None
    g2 = write_doc("h32.json", graph_to_doc(hamming_graph(3, 2)))
    code2, doc2, _ = invoke(capsys, ["spectrum", "--graph", g2])
    assert code2 == 0 and doc2["multiplicity"] == 0 and doc2["witness"] is None


def test_search(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    code, doc, _ = invoke(capsys, ["search", "--graph", gpath, "--j", "1", "--k", "1"])
    assert code == 0 and doc["count"] == 3 and doc["exhausted"] is True
    assert len(doc["functions"]) == 3
    code2, doc2, _ = invoke(capsys, ["search", "--graph", gpath, "--j", "1", "--k", "1", "--count-only"])
    assert code2 == 0 and "functions" not in doc2


def test_spectrum_k(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    code, doc, _ = invoke(capsys, ["spectrum-k", "--graph", gpath, "--j", "1"])
    assert code == 0
    assert doc["counts"] == {"0": 1, "1": 3, "2": 3, "3": 1}


def test_partition(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    ppath = write_doc("cells.json", {"cells": [[0, 3], [1, 2, 4, 5]]})
    code, doc, _ = invoke(capsys, ["partition", "--graph", gpath, "--partition", ppath])
    assert code == 0
    assert doc["equitable"] is True
    assert doc["characteristic_matrix"] == {"rows": 2, "cols": 2, "entries": [0, 2, 1, 1]}
    assert doc["dominatable_weights"] == [1, 2]
    p2 = write_doc("bipart.json", {"cells": [[0, 2, 4], [1, 3, 5]]})
    code2, doc2, _ = invoke(capsys, ["partition", "--graph", gpath, "--partition", p2])
    assert code2 == 0 and doc2["dominatable_weights"] is None


def test_cover_and_lift(capsys, write_doc):
    gpath = write_doc("c6.json", graph_to_doc(cycle(6)))
    bpath = write_doc("k3.json", graph_to_doc(complete(3)))
    ppath = write_doc("fibres.json", {"cells": [[0, 3], [1, 4], [2, 5]]})
    code, doc, _ = invoke(capsys, ["cover", "--graph", gpath, "--partition", ppath, "--base", bpath])
    assert code == 0 and doc["certified"] and doc["fold"] == 2
    bad = write_doc("badcells.json", {"cells": [[0, 1], [2, 3], [4, 5]]})
    code2, doc2, _ = invoke(capsys, ["cover", "--graph", gpath, "--partition", bad, "--base", bpath])
    assert code2 == 1 and doc2["certified"] is False

    fbase = write_doc("fbase.json", {"j": 1, "k": 1, "values": [1, 0, 0]})
    code3, doc3, _ = invoke(capsys, [
        "lift", "--graph", gpath, "--base", bpath, "--partition", ppath, "--function", fbase,
    ])
    assert code3 == 0 and doc3["values"] == [1, 0, 0, 1, 0, 0]

    fcover = write_doc("fcover.json", {"j": 1, "k": 1, "values": [1, 0, 0, 1, 0, 0]})
    code4, doc4, _ = invoke(capsys, [
        "lift", "--push", "--graph", gpath, "--base", bpath, "--partition", ppath, "--function", fcover,
    ])
    assert code4 == 0 and doc4["values"] == [1, 0, 0]

    funeven = write_doc("funeven.json", {"j": 1, "k": 1, "values": [1, 0, 0, 0, 0, 0]})
    code5, _, err5 = invoke(capsys, [
        "lift", "--push", "--graph", gpath, "--base", bpath, "--partition", ppath, "--function", funeven,
    ])
    assert code5 == 1 and "constant" in err5


def test_cover_kflag(capsys, write_doc):
    gpath = write_doc("k4.json", graph_to_doc(complete(4)))
    bpath = write_doc("k2.json", graph_to_doc(complete(2)))
    ppath = write_doc("halves.json", {"cells": [[0, 1], [2, 3]]})
    code, doc, _ = invoke(capsys, [
        "cover", "--graph", gpath, "--partition", ppath, "--base", bpath, "--k", "2",
    ])
    assert code == 0 and doc["kind"] == "m-cover" and doc["fold"] == 2


def test_translate(capsys, write_doc):
    fpath = write_doc("code.json", {"j": 1, "k": 1, "values": [1, 0, 0, 0, 0, 0, 0, 1]})
    cpath = write_doc("conn.json", {"connection": [1, 2, 4]})
    code, doc, _ = invoke(capsys, [
        "translate", "--q", "2", "--d", "3", "--function", fpath, "--connection", cpath,
    ])
    assert code == 0
    assert doc["partition"]["cells"] == [[0, 7], [1, 6], [2, 5], [3, 4]]
    assert doc["certificate"]["fold"] == 2 and doc["certificate"]["base_size"] == 4


def test_size_cap_env(capsys, monkeypatch):
    monkeypatch.setenv("EFFDOM_SIZE_CAP", "16")
    code, _, err = invoke(capsys, ["gen", "--family", "hamming", "--q", "2", "--d", "5"])
    assert code == 2 and "cap" in err
    monkeypatch.setenv("EFFDOM_SIZE_CAP", "frogs")
    code2, _, err2 = invoke(capsys, ["gen", "--family", "hamming", "--q", "2", "--d", "5"])
    assert code2 == 2 and "EFFDOM_SIZE_CAP" in err2


def test_threads_flag_accepted(capsys):
    code, doc, _ = invoke(capsys, ["--threads", "4", "gen", "--family", "complete", "--n", "3"])
    assert code == 0 and doc["n"] == 3


def test_unknown_subcommand_exits(capsys):
    with pytest.raises(SystemExit):
        run(["frobnicate"])
