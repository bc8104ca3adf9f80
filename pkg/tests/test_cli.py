"""CLI verbs, exit codes, and output determinism."""

import json

import pytest

import rgwa
from rgwa.cli import main
from rgwa.files import emit_corpus, save_object


@pytest.fixture(scope="module")
def corpus_dir(tmp_path_factory):
    path = tmp_path_factory.mktemp("corpus")
    emit_corpus(path)
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


class TestValidate:
    def test_valid_object_exits_zero(self, capsys, corpus_dir):
        code, out = run(capsys, "validate", corpus_dir / "z3.json")
        assert code == 0
        assert json.loads(out) == {"passed": True, "violations": []}

    def test_reduced_violation_exits_one(self, capsys, corpus_dir):
        code, out = run(capsys, "validate", corpus_dir / "s3_conjugation.json")
        assert code == 1
        payload = json.loads(out)
        assert payload["passed"] is False
        conditions = [v["condition"] for v in payload["violations"]]
        assert conditions == ["reduced.central", "reduced.collapse"]

    def test_malformed_json_exits_two_with_position(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{", encoding="utf-8")
        code, out = run(capsys, "validate", bad)
        assert code == 2
        assert "line" in json.loads(out)["error"]

    def test_missing_file_exits_two(self, capsys, tmp_path):
        code, out = run(capsys, "validate", tmp_path / "absent.json")
        assert code == 2


class TestCorpus:
    def test_writes_eleven_files(self, capsys, tmp_path):
        code, out = run(capsys, "corpus", tmp_path / "c")
        assert code == 0
        assert len(json.loads(out)["written"]) == 11


class TestEnumerationVerbs:
    def test_pentactions_count(self, capsys, corpus_dir):
        code, out = run(capsys, "pentactions", corpus_dir / "z2.json")
        assert code == 0
        payload = json.loads(out)
        assert payload["count"] == 2
        assert payload["pentactions"][0]["pow"] == [0, 0]

    def test_pentactions_budget_exit_three(self, capsys, corpus_dir):
        code, out = run(capsys, "pentactions", corpus_dir / "z3.json", "--budget", "1")
        assert code == 3
        assert "budget" in json.loads(out)["error"]

    def test_budget_flag_before_the_file(self, capsys, corpus_dir):
        code, _ = run(capsys, "pentactions", "--budget", "1", corpus_dir / "z3.json")
        assert code == 3

    def test_oracle_equivalence(self, capsys, corpus_dir):
        code, out = run(capsys, "oracle", corpus_dir / "z3.json")
        assert code == 0
        payload = json.loads(out)
        assert payload["equal"] and payload["count_pruned"] == 6

    def test_oracle_refuses_large_orders(self, capsys, corpus_dir):
        code, _ = run(capsys, "oracle", corpus_dir / "z4.json")
        assert code == 2


class TestStructureVerbs:
    def test_pa_on_the_zero_object(self, capsys, corpus_dir):
        code, out = run(capsys, "pa", corpus_dir / "z1.json")
        assert code == 0
        payload = json.loads(out)
        assert payload["pa_order"] == 1
        assert payload["pa_rgwa"]["passed"] and payload["pa_action"]["passed"]

    def test_pa_diagnoses_z2(self, capsys, corpus_dir):
        code, out = run(capsys, "pa", corpus_dir / "z2.json")
        assert code == 1
        payload = json.loads(out)
        assert payload["pa_rgwa"]["passed"] is True
        assert payload["pa_action"]["violations"][0]["condition"] == "a9"

    def test_analyze_shape(self, capsys, corpus_dir):
        code, out = run(capsys, "analyze", corpus_dir / "z2.json")
        assert code == 0
        payload = json.loads(out)
        assert set(payload) == {"perfect", "stabilizer", "weak_stabilizer", "noether_chain"}
        assert payload["noether_chain"] == {"subgroup_orders": [2], "quotient_order": 1}

    def test_noether(self, capsys, corpus_dir):
        code, out = run(capsys, "noether", corpus_dir / "z6.json")
        assert code == 0
        payload = json.loads(out)
        assert payload["subgroup_orders"] == [6]
        assert payload["quotient_order"] == 1

    def test_noether_unsupported_carrier_exits_two(self, capsys, tmp_path, z4neg):
        path = tmp_path / "z4neg.json"
        save_object(z4neg, path)
        code, out = run(capsys, "noether", path)
        assert code == 2

    def test_represent_zero_object(self, capsys, corpus_dir):
        code, out = run(capsys, "represent", corpus_dir / "z1.json")
        assert code == 0
        payload = json.loads(out)
        assert payload["representability"]["all_passed"]
        assert payload["representability"]["pairs_checked"] == 3

    def test_represent_diagnoses_z2(self, capsys, corpus_dir):
        code, out = run(capsys, "represent", corpus_dir / "z2.json")
        assert code == 1
        failures = json.loads(out)["representability"]["failures"]
        assert failures[0]["stage"] == "pa_action"

    def test_represent_nonzero_witness(self, capsys, tmp_path, z4neg):
        path = tmp_path / "z4neg.json"
        save_object(z4neg, path)
        code, out = run(capsys, "represent", path)
        assert code == 0
        assert json.loads(out)["representability"]["all_passed"]


class TestOutputHandling:
    def test_out_writes_an_identical_copy(self, capsys, corpus_dir, tmp_path):
        copy = tmp_path / "report.json"
        code, out = run(capsys, "validate", corpus_dir / "z2.json", "--out", copy)
        assert code == 0
        assert copy.read_text(encoding="utf-8") == out

    def test_pretty_is_stable_json(self, capsys, corpus_dir):
        _, compact = run(capsys, "analyze", corpus_dir / "z2.json")
        _, pretty = run(capsys, "analyze", corpus_dir / "z2.json", "--pretty")
        assert json.loads(compact) == json.loads(pretty)
        assert pretty.count("\n") > compact.count("\n")

    def test_repeated_runs_are_byte_identical(self, capsys, corpus_dir):
        _, first = run(capsys, "pentactions", corpus_dir / "z3.json")
        _, second = run(capsys, "pentactions", corpus_dir / "z3.json")
        assert first == second
