import io

import pytest

from mis_hitter import cli
from mis_hitter.cli import main, parse_record
from mis_hitter.family import enumerate_max_independent_sets
from mis_hitter.graph import GeneratorSpec, generate, to_graph6
from mis_hitter.proof import verify_chain
from oracles import brute_vc


def run(*argv, stdin=None):
    out = io.StringIO()
    code = main(list(argv), out=out, stdin=io.StringIO(stdin) if stdin is not None else None)
    return code, [parse_record(line) for line in out.getvalue().splitlines()], out.getvalue()


def test_record_roundtrip():
    line = cli.record("x", ("a", 1), ("b", "two words"), ("c", (0, 2)), ("d", [4, 3]))
    assert line == 'record:x a:1 b:"two words" c:{0,2} d:[4,3]'
    assert parse_record(line) == {"record": "x", "a": "1", "b": "two words", "c": "{0,2}", "d": "[4,3]"}


def test_invariants_c5():
    code, recs, _ = run("invariants", "--input", "Dhc")
    assert code == 0
    r = recs[0]
    assert (r["alpha"], r["omega"], r["chi"], r["im"], r["h"], r["tau_star"], r["vc"]) == ("2", "2", "3", "1", "3", "5/2", "2")


def test_invariants_k1():
    code, recs, _ = run("invariants", "--input", "@")
    assert code == 0
    assert (recs[0]["alpha"], recs[0]["h"], recs[0]["tau_star"], recs[0]["vc"]) == ("1", "1", "1/1", "0")


def test_invariants_bad_line_continues():
    code, recs, _ = run("invariants", "--input", "-", stdin="Dhc\n!!\n")
    assert code == 0
    assert recs[1]["record"] == "error" and recs[1]["line"] == "2" and recs[1]["kind"] == "parse"
    code, recs, _ = run("invariants", "--input", "-", stdin="!!\n")
    assert code == 2


def test_file_input_with_header(tmp_path):
    f = tmp_path / "graphs.g6"
    f.write_text(">>graph6<<\nDhc\n\n@\n")
    code, recs, _ = run("invariants", "--input", str(f))
    assert code == 0 and [r["line"] for r in recs] == ["2", "4"]


def test_verify_pass_and_degenerate():
    code, recs, _ = run("verify", "--input", "-", stdin="Dhc\nD??\n")
    assert code == 0
    assert recs[0]["status"] == "pass" and all(recs[0][f"L{i}"] == "pass" for i in range(1, 8))
    assert recs[1]["status"] == "pass" and recs[1]["L6"].startswith("skipped")
    assert "degenerate omega=1, skipped L6" in recs[1]["note"]


def test_verify_t_override_invalid():
    code, recs, _ = run("verify", "--input", "Dhc", "--t", "1")
    assert code == 2 and recs[0]["kind"] == "input"


def test_verify_cap_exit_code():
    code, recs, _ = run("verify", "--input", "Dhc", "--family-cap", "2")
    assert code == 3 and recs[0]["kind"] == "cap"


def test_verify_failure_dumps(monkeypatch, caplog):
    real = verify_chain

    def failing(*a, **k):
        rep = real(*a, **k)
        rep.links["L5"] = "fail"
        return rep

    monkeypatch.setattr(cli, "verify_chain", failing)
    code, recs, _ = run("verify", "--input", "Dhc")
    assert code == 1
    assert recs[0]["status"] == "fail" and recs[1]["record"] == "failure"
    assert recs[1]["tau_star"] == "5/2" and recs[1]["g6"] == "Dhc"
    assert "mis-hitter verify --input 'Dhc'" in caplog.text


def test_witness_c5():
    code, recs, _ = run("witness", "--input", "Dhc")
    r = recs[0]
    assert code == 0 and r["d"] == "2" and r["s"] == "{0,2}" and r["u"] == "[4,3]"
    assert r["u_alpha_below_t"] == "true" and r["matching"] == "true"


def test_witness_single_vertex():
    code, recs, _ = run("witness", "--input", "@")
    assert code == 0 and recs[0]["d"] == "0" and recs[0]["u"] == "[]"


def test_witness_petersen():
    g = generate(GeneratorSpec("kneser", (5, 2)))
    code, recs, _ = run("witness", "--gen", "kneser:5,2")
    fam = enumerate_max_independent_sets(g)
    assert code == 0 and recs[0]["g6"] == to_graph6(g)
    assert int(recs[0]["d"]) == brute_vc(10, fam.sets)


def test_witness_needs_single_graph():
    code, _, _ = run("witness", "--input", "-", stdin="Dhc\n@\n")
    assert code == 2


def test_net_sample_c5():
    code, recs, _ = run("net-sample", "--input", "Dhc", "--seed", "1")
    r = recs[0]
    assert code == 0 and r["success"] == "true" and r["verified"] == "true"
    assert r["m"] == "34" and int(r["distinct"]) <= 5 and r["h"] == "3"


def test_net_sample_edgeless():
    code, recs, _ = run("net-sample", "--input", "D??")
    assert code == 0 and recs[0]["attempts"] == "1" and recs[0]["d"] == "0"


def test_net_sample_zero_attempts():
    code, recs, _ = run("net-sample", "--input", "Dhc", "--max-attempts", "0")
    assert code == 3 and recs[0]["success"] == "false" and recs[0]["attempts"] == "0"


def test_scan_random_and_determinism():
    args = ("scan", "--gen", "random:10,1/2", "--count", "60", "--seed", "7")
    code, recs, text = run(*args)
    assert code == 0 and recs[0]["graphs"] == "60" and recs[0]["link_failures"] == "0"
    assert float(recs[0]["max_h_over_main"]) <= 1 and float(recs[0]["max_h_over_hw"]) <= 1
    assert run(*args)[2] == text
    assert run(*args, "--workers", "2")[2] == text


def test_scan_empty_input():
    code, recs, _ = run("scan", "--input", "-", stdin="")
    assert code == 0 and recs == [parse_record(cli.ScanSummary().lines()[0])]
    assert recs[0]["graphs"] == "0"


def test_scan_all_five():
    code, recs, _ = run("scan", "--gen", "all:5")
    assert code == 0 and recs[0]["graphs"] == "1024"
    assert recs[0]["argmax_main"] != "none"
    worst = verify_chain(__import__("mis_hitter.graph", fromlist=["parse_graph6"]).parse_graph6(recs[0]["argmax_main"]))
    assert worst.h / worst.bound_main == float(recs[0]["max_h_over_main"])
    assert sum(int(r["count"]) for r in recs[1:]) == 1024


def test_sweep_requires_exhaustive_generator():
    assert run("sweep", "--gen", "cycle:5")[0] == 2
    code, recs, _ = run("sweep", "--gen", "all:4")
    assert code == 0 and recs[0]["graphs"] == "64"


@pytest.mark.parametrize(
    "argv",
    [
        ("verify",),
        ("verify", "--input", "Dhc", "--gen", "cycle:5"),
        ("verify", "--input", "Dhc", "--workers", "0"),
        ("scan", "--gen", "kneser:3,2"),
        ("scan", "--gen", "random:5"),
    ],
)
def test_bad_configuration(argv):
    assert run(*argv)[0] == 2


def test_generated_families_cli():
    code, recs, _ = run("invariants", "--gen", "multipartite:2,3")
    assert code == 0 and recs[0]["alpha"] == "3" and recs[0]["chi"] == "2"
