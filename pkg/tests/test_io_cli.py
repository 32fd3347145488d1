"""JSON round-trips, schema rejection, and the command-line surface."""

import json

import pytest

from braceforge import cli
from braceforge.algebra import Kind, group_spec
from braceforge.brace import MultClass
from braceforge.catalog import cyclic_pq_brace, trivial_brace
from braceforge.io import (
    SchemaError,
    brace_from_json,
    brace_to_json,
    canonical_dumps,
    catalog_entry_to_json,
    descriptor_from_json,
    descriptor_to_json,
    mult_class_from_str,
    report_to_json,
    solution_from_json,
    solution_to_json,
    subgroup_to_json,
)
from braceforge.regular import tabulate
from braceforge.ybe import solution_from_brace, solution_properties, verify_ybe

from helpers import catalog, orbits


# ---------------- serialization ----------------


def test_descriptor_round_trip():
    cyc = group_spec(3, 2, Kind.CYCLIC)
    mix = group_spec(3, 2, Kind.MIXED)
    for spec in (cyc, mix):
        for desc in spec.aut_descriptors:
            doc = descriptor_to_json(spec.kind, desc)
            assert descriptor_from_json(spec.kind, doc) == desc
    assert descriptor_to_json(Kind.CYCLIC, (8, 1)) == {"i": 8, "j": 1}
    doc = descriptor_to_json(Kind.MIXED, ((1, 1, 0, 1), 1))
    assert doc == {"m": [[1, 1], [0, 1]], "alpha": 1}
    with pytest.raises(SchemaError):
        descriptor_from_json(Kind.MIXED, {"m": [[1, 1], [0]], "alpha": 1})
    with pytest.raises(SchemaError):
        descriptor_from_json(Kind.CYCLIC, {"i": 1})


def test_mult_class_string_round_trip():
    for s in ("ZP2Q", "ZP2xZQ", "G_F", "G_K(2)", "ZQ_RTIMES_ZP2_h"):
        assert str(mult_class_from_str(s)) == s
    assert mult_class_from_str("G_K(0)") == MultClass("G_K", 0)
    for bad in ("nope", "G_K", "G_K(x)", "ZP2Q(1)"):
        with pytest.raises(SchemaError):
            mult_class_from_str(bad)


def test_brace_json_round_trip_all_small_catalogs():
    for pair in [(3, 2), (2, 5)]:
        for e in catalog(*pair):
            doc = json.loads(canonical_dumps(brace_to_json(e.brace, e.expected)))
            assert brace_from_json(doc) == e.brace
            cat_doc = catalog_entry_to_json(e)
            assert cat_doc["family"] == e.family
            assert cat_doc["params"] == dict(e.parameters)
            assert brace_from_json(cat_doc) == e.brace


def test_brace_json_rejects_malformed_documents():
    good = brace_to_json(cyclic_pq_brace(3, 2))
    cases = []
    d = dict(good); d["format"] = "other"; cases.append(d)
    d = dict(good); d.pop("lambda"); cases.append(d)
    d = dict(good); d["order"] = 17; cases.append(d)
    d = dict(good); d["p"] = 4; cases.append(d)
    d = dict(good); d["additive"] = "dihedral"; cases.append(d)
    d = json.loads(canonical_dumps(good)); d["auts"][0] = {"i": 3, "j": 1}; cases.append(d)
    d = json.loads(canonical_dumps(good)); d["lambda"][0] = 99; cases.append(d)
    d = json.loads(canonical_dumps(good)); d["lambda"] = d["lambda"][:-1]; cases.append(d)
    for bad in cases:
        with pytest.raises(SchemaError):
            brace_from_json(bad)


def test_solution_json_round_trip():
    B = cyclic_pq_brace(3, 2)
    sol = solution_from_brace(B)
    checks = solution_properties(sol)
    checks["ybe"] = verify_ybe(sol).ok
    doc = json.loads(canonical_dumps(solution_to_json(sol, checks)))
    sol2, checks2 = solution_from_json(doc)
    assert sol2 == sol
    assert checks2 == {"ybe": True, "involutive": True, "nondegenerate": True}
    doc["n"] = 5
    with pytest.raises(SchemaError):
        solution_from_json(doc)


def test_report_json_structure():
    report = tabulate(orbits(3, 2, "mixed"))
    doc = json.loads(canonical_dumps(report_to_json(report)))
    assert doc["total"] == 5 and doc["matches"] is True
    assert doc["additive"] == "mixed" and doc["case"] == "P1Q_Q2"
    assert len(doc["classes"]) == 5
    for cls in doc["classes"]:
        assert cls["generators"], "every representative serializes generators"
    got = {(c["ker"], c["class"]): c["computed"] for c in doc["cells"]}
    assert got[(9, "G_K(0)")] == 1


def test_subgroup_generators_decode_back():
    spec = group_spec(3, 2, Kind.MIXED)
    for oc in orbits(3, 2, "mixed"):
        gens = subgroup_to_json(oc.representative)
        from braceforge.algebra import closure

        pairs = [
            (spec.decode(a), descriptor_from_json(spec.kind, d)) for a, d in gens
        ]
        assert closure(spec, pairs).elements == oc.representative.elements


# ---------------- command line ----------------


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_enumerate_table(capsys):
    code, out, err = run_cli(capsys, "enumerate", "--p", "3", "--q", "2")
    assert code == 0
    assert "total 3  expected 3  all cells match" in out
    assert "total 5  expected 5  all cells match" in out
    assert "combined classes across both carriers: 8" in out


def test_enumerate_methods_cross_check(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--p", "3", "--q", "2", "--method", "both"
    )
    assert code == 0
    assert out.count("structured and oracle enumerations agree") == 2


def test_enumerate_json_is_canonical(capsys):
    code, out, _ = run_cli(
        capsys, "enumerate", "--p", "3", "--q", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert [r["total"] for r in doc["reports"]] == [3, 5]
    assert out == canonical_dumps(doc)


def test_enumerate_refuses_the_excluded_pair(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--p", "2", "--q", "3")
    assert code == 2
    assert "GAP" in err


def test_enumerate_rejects_composite_p(capsys):
    code, _, err = run_cli(capsys, "enumerate", "--p", "9", "--q", "2")
    assert code == 2
    assert "not prime" in err


def test_oracle_bound_refusal_exit_code(capsys):
    code, _, err = run_cli(
        capsys,
        "enumerate", "--p", "7", "--q", "3", "--additive", "mixed",
        "--method", "oracle",
    )
    assert code == 2
    assert "exceeds the oracle bound" in err


def test_catalog_command(capsys):
    code, out, _ = run_cli(capsys, "catalog", "--p", "3", "--q", "7")
    assert code == 0
    assert "11 entries, all verified" in out


def test_ybe_command_json(capsys):
    code, out, _ = run_cli(
        capsys, "ybe", "--p", "3", "--q", "2", "--format", "json",
        "--additive", "cyclic",
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["solutions"]) == 3
    for item in doc["solutions"]:
        sol, checks = solution_from_json(item["solution"])
        assert checks == {"ybe": True, "involutive": True, "nondegenerate": True}
        assert verify_ybe(sol).ok


def test_compare_command(capsys):
    code, out, _ = run_cli(capsys, "compare", "--p", "5", "--q", "3")
    assert code == 0
    assert "perfect bijection, 5 classes" in out


def test_verify_command_round_trip(tmp_path, capsys):
    path = tmp_path / "brace.json"
    path.write_text(canonical_dumps(brace_to_json(cyclic_pq_brace(3, 2))))
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
    assert "ok" in out and "stored invariants match" in out


def test_verify_command_catches_corruption(tmp_path, capsys):
    doc = brace_to_json(cyclic_pq_brace(3, 2))
    doc["lambda"][1] = (doc["lambda"][1] + 1) % len(doc["auts"])
    path = tmp_path / "bad.json"
    path.write_text(canonical_dumps(doc))
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 1
    assert "problem" in out


def test_verify_command_malformed_json(tmp_path, capsys):
    path = tmp_path / "junk.json"
    path.write_text("{this is not json")
    code, _, err = run_cli(capsys, "verify", str(path))
    assert code == 2
    assert "junk.json" in err


def test_output_identical_across_jobs(tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    assert cli.main(["enumerate", "--p", "3", "--q", "2", "--out", str(a)]) == 0
    assert cli.main(
        ["enumerate", "--p", "3", "--q", "2", "--jobs", "3", "--out", str(b)]
    ) == 0
    assert a.read_bytes() == b.read_bytes()


def test_trivial_brace_file_verifies(tmp_path, capsys):
    # the smallest possible stored artifact: the flip brace
    spec = group_spec(2, 5, Kind.MIXED)
    path = tmp_path / "trivial.json"
    path.write_text(canonical_dumps(brace_to_json(trivial_brace(spec))))
    code, out, _ = run_cli(capsys, "verify", str(path))
    assert code == 0
