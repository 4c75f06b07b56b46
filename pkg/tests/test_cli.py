"""Command-line interface: exit codes, JSON documents, replayability.

A few tests run the real ``python3 -m bezmat`` entry point in a
subprocess; the rest use the in-process driver for speed.  Expected
exit codes follow the documented contract: 0 success (including
"verified": false), 2 hypothesis/condition failures, 3 nonexistence
over the ring, 4 format/usage errors, 5 internal assertions.
"""

import json
import subprocess
import sys

import pytest

from bezmat.cli import main, run_argv
from bezmat.io import dumps_doc, matrix_from_doc
from bezmat.matrix import Mat
from bezmat.rings import ZZ


SWAP_A = {"ring": "int", "rows": 2, "cols": 2, "entries": [["0", "1"], ["0", "0"]]}
SWAP_B = {"ring": "int", "rows": 2, "cols": 2, "entries": [["0", "0"], ["1", "0"]]}
BAD_A = {"ring": "int", "rows": 2, "cols": 2, "entries": [["1", "1"], ["0", "-1"]]}
BAD_B = {"ring": "int", "rows": 2, "cols": 2, "entries": [["1", "1"], ["0", "0"]]}
BAD_C = {"ring": "int", "rows": 2, "cols": 2, "entries": [["1", "-1"], ["0", "0"]]}
BAD_W = {"ring": "int", "rows": 2, "cols": 2, "entries": [["1", "1"], ["0", "1"]]}


@pytest.fixture
def write_doc(tmp_path):
    def _write(name, doc):
        p = tmp_path / name
        p.write_text(json.dumps(doc))
        return str(p)

    return _write


def run_json(argv):
    code, out = run_argv(argv)
    return code, json.loads(out)


# ---------------------------------------------------------------------------
# real subprocess entry point
# ---------------------------------------------------------------------------


def test_module_entry_point_rank(write_doc):
    path = write_doc("a.json", SWAP_A)
    proc = subprocess.run(
        [sys.executable, "-m", "bezmat", "rank", path],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc == {"ring": "int", "rows": 2, "cols": 2, "rank": 1}


def test_module_entry_point_usage_error():
    proc = subprocess.run(
        [sys.executable, "-m", "bezmat", "frobnicate"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 4


def test_module_entry_point_witness(write_doc):
    a = write_doc("a.json", SWAP_A)
    b = write_doc("b.json", SWAP_B)
    proc = subprocess.run(
        [sys.executable, "-m", "bezmat", "witness", a, b, b],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert matrix_from_doc(doc["W"]) == Mat.from_rows(ZZ, [[0, 1], [1, 0]])
    assert doc["r1"] == 1
    assert all(doc["verified"].values())


# ---------------------------------------------------------------------------
# in-process driver: success paths
# ---------------------------------------------------------------------------


def test_hnf_and_smith_docs(write_doc):
    path = write_doc("a.json", {"ring": "int", "rows": 2, "cols": 2, "entries": [["2", "4"], ["1", "3"]]})
    code, doc = run_json(["hnf", path])
    assert code == 0
    assert set(doc) >= {"H", "T", "pivot_rows", "rank"}
    assert doc["rank"] == 2
    code, doc = run_json(["smith", path])
    assert code == 0
    assert doc["diagonal"] == ["1", "2"]
    assert doc["rank"] == 2


def test_ginv_and_drazin_docs(write_doc):
    p = write_doc("x.json", {"ring": "int", "rows": 3, "cols": 3, "entries": [["3", "-1", "1"], ["1", "0", "0"], ["0", "0", "0"]]})
    code, doc = run_json(["ginv", p])
    assert code == 0
    assert matrix_from_doc(doc["ginv"]) == Mat.from_rows(
        ZZ, [[0, 1, -1], [-1, 3, -3], [0, 0, 0]]
    )
    n = write_doc("n.json", {"ring": "int", "rows": 2, "cols": 2, "entries": [["0", "1"], ["0", "0"]]})
    code, doc = run_json(["drazin", n])
    assert code == 0
    assert doc["index"] == 2
    assert matrix_from_doc(doc["dinv"]).is_zero()


def test_verify_true_and_false_both_exit_zero(write_doc):
    a = write_doc("a.json", BAD_A)
    b = write_doc("b.json", BAD_B)
    c = write_doc("c.json", BAD_C)
    w = write_doc("w.json", BAD_W)
    code, doc = run_json(["verify", a, b, c, w])
    assert code == 0
    assert doc == {"mode": "product", "verified": True}
    ident = write_doc("i.json", {"ring": "int", "rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]})
    code, doc = run_json(["verify", a, b, c, ident])
    assert code == 0
    assert doc == {"mode": "product", "verified": False}


def test_verify_cline_reports_indexes(write_doc):
    a = write_doc("a.json", SWAP_A)
    b = write_doc("b.json", SWAP_B)
    code, doc = run_json(["verify-cline", a, b, b])
    assert code == 0
    assert doc == {"verified": True, "index_ab": 1, "index_ca": 1}


def test_check_variant_success(write_doc):
    a = write_doc("a.json", SWAP_A)
    b = write_doc("b.json", SWAP_B)
    code, doc = run_json(["check", a, b, b, "--variant", "cor22"])
    assert code == 0
    assert doc["variant"] == "cor22"
    assert doc["hypotheses"]["shared_product"] is True
    assert all(cond["holds"] for cond in doc["conditions"])
    assert all(doc["witness"]["verified"].values())


def test_witness_power_default_and_explicit(write_doc):
    a = write_doc("a.json", SWAP_A)
    b = write_doc("b.json", SWAP_B)
    code, doc = run_json(["witness-power", a, b, b])
    assert code == 0
    assert doc["s"] == 1
    assert doc["verified"] == {"power_product": True}
    code, doc = run_json(["witness-power", a, b, b, "--s", "3"])
    assert code == 0
    assert doc["s"] == 3


# ---------------------------------------------------------------------------
# gen: embedded config and exact replay
# ---------------------------------------------------------------------------


def test_gen_bundle_replays_identically(write_doc, tmp_path):
    argv = ["gen", "triple", "--ring", "int", "--n", "3", "--seed", "11", "--core-rank", "2"]
    code1, out1 = run_argv(argv)
    code2, out2 = run_argv(argv)
    assert code1 == code2 == 0
    assert out1 == out2
    bundle = json.loads(out1)
    assert bundle["config"] == {
        "ring": "int",
        "n": 3,
        "seed": 11,
        "entry_bound": 9,
        "core_rank": 2,
    }
    # the bundle's triple feeds straight back into witness
    paths = []
    for key in ("A", "B", "C"):
        p = tmp_path / f"{key}.json"
        p.write_text(dumps_doc(bundle[key]))
        paths.append(str(p))
    code, doc = run_json(["witness", *paths])
    assert code == 0
    assert all(doc["verified"].values())


def test_gen_corollary_false_feeds_check(write_doc, tmp_path):
    code, out = run_argv(["gen", "corollary-false", "--variant", "thm22", "--seed", "3"])
    assert code == 0
    bundle = json.loads(out)
    assert bundle["expected_failed"] == ["Rr(CA)=Rr(CAB)"]
    paths = []
    for key in ("A", "B", "C"):
        p = tmp_path / f"{key}.json"
        p.write_text(dumps_doc(bundle[key]))
        paths.append(str(p))
    code, doc = run_json(["check", *paths, "--variant", "thm22"])
    assert code == 2
    assert doc["error"] == "ConditionNotMet"
    assert doc["failed"] == ["Rr(CA)=Rr(CAB)"]


def test_gen_argument_validation():
    code, out = run_argv(["gen", "drazin", "--index", "0"])
    assert code == 4
    code, out = run_argv(["gen", "drazin", "--n", "2", "--core-rank", "2", "--index", "1"])
    assert code == 4
    code, out = run_argv(["gen", "corollary-false"])  # missing --variant
    assert code == 4


# ---------------------------------------------------------------------------
# failure exit codes
# ---------------------------------------------------------------------------


def test_exit_2_hypothesis_violated_carries_products(write_doc):
    a = write_doc("a.json", BAD_A)
    b = write_doc("b.json", BAD_B)
    c = write_doc("c.json", BAD_C)
    code, doc = run_json(["witness", a, b, c])
    assert code == 2
    assert doc["error"] == "HypothesisViolated"
    assert matrix_from_doc(doc["lhs"]) == Mat.from_rows(ZZ, [[1, 0], [0, 0]])
    assert matrix_from_doc(doc["rhs"]) == Mat.from_rows(ZZ, [[1, 2], [0, 0]])


def test_exit_2_index_too_small(write_doc):
    a = write_doc("a.json", SWAP_A)
    b = write_doc("b.json", SWAP_B)
    code, doc = run_json(["witness-power", a, b, b, "--s", "0"])
    assert code == 2
    assert doc["error"] == "IndexTooSmall"
    assert doc["s"] == 0
    assert doc["index"] == 1


def test_exit_3_not_group_invertible(write_doc):
    p = write_doc("x.json", {"ring": "int", "rows": 2, "cols": 2, "entries": [["2", "2"], ["2", "2"]]})
    code, doc = run_json(["ginv", p])
    assert code == 3
    assert doc["error"] == "NotGroupInvertible"


def test_exit_3_not_drazin_invertible(write_doc):
    p = write_doc("x.json", {"ring": "int", "rows": 2, "cols": 2, "entries": [["2", "0"], ["0", "1"]]})
    code, doc = run_json(["drazin", p])
    assert code == 3
    assert doc["error"] == "NotDrazinInvertible"


def test_exit_4_format_errors(write_doc, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, doc = run_json(["rank", str(bad)])
    assert code == 4
    assert doc["error"] == "FormatError"
    code, doc = run_json(["rank", str(tmp_path / "missing.json")])
    assert code == 4


def test_exit_5_injected_fault_dumps_instance(write_doc):
    a = write_doc("a.json", SWAP_A)
    b = write_doc("b.json", SWAP_B)
    code, doc = run_json(["witness", a, b, b, "--inject-fault", "witness"])
    assert code == 5
    assert doc["error"] == "InternalAssertion"
    assert {"A", "B", "C"} <= set(doc["instance"])
    # the fault switch must not leak into later runs
    code, doc = run_json(["witness", a, b, b])
    assert code == 0


def test_main_returns_code_without_exiting(write_doc):
    a = write_doc("a.json", SWAP_A)
    assert main(["rank", a]) == 0
    assert main(["rank", "/nonexistent/170x.json"]) == 4
