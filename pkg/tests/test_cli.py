import json
import math

import pytest

from tandemdup.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    assert code == 0, out
    return json.loads(out)


SYS3 = ["--alphabet", "012", "--seed", "012", "--max-dup", "3"]
SYS2 = ["--alphabet", "01", "--seed", "01", "--max-dup", "2"]


class TestGenerate:
    def test_json_document(self, capsys):
        doc = run_json(capsys, "generate", *SYS2, "--max-len", "4")
        assert doc["counts"] == {"2": 1, "3": 2, "4": 4}
        assert doc["words"]["4"] == ["0001", "0011", "0101", "0111"]

    def test_text_lines_are_sorted_words(self, capsys):
        code, out = run(capsys, "generate", *SYS2, "--max-len", "3", "--format", "text")
        assert code == 0
        assert out.splitlines() == ["2\t01", "3\t001", "3\t011"]


class TestCount:
    def test_json_and_text_agree(self, capsys):
        doc = run_json(capsys, "count", *SYS3, "--max-len", "8")
        code, out = run(capsys, "count", *SYS3, "--max-len", "8", "--format", "text")
        assert code == 0
        text_counts = dict(line.split("\t") for line in out.splitlines())
        assert {k: str(v) for k, v in doc["counts"].items()} == text_counts
        assert doc["counts"]["8"] == 138


class TestMember:
    def test_yes(self, capsys):
        doc = run_json(capsys, "member", *SYS3, "--word", "01212")
        assert doc["member"] is True

    def test_no(self, capsys):
        code, out = run(capsys, "member", *SYS3, "--word", "00000", "--format", "text")
        assert code == 0
        assert out.strip() == "member\tfalse"


class TestAutomaton:
    def test_json_machine(self, capsys):
        doc = run_json(capsys, "automaton", *SYS3)
        assert len(doc["states"]) == 17
        assert all(len(e) == 3 for e in doc["edges"])

    def test_minimize_flag(self, capsys):
        doc = run_json(capsys, "automaton", *SYS3, "--minimize")
        assert len(doc["states"]) == 7

    def test_dot_output(self, capsys):
        code, out = run(capsys, "automaton", *SYS2, "--format", "dot")
        assert code == 0
        assert out.startswith("digraph")
        assert "->" in out


class TestCapacity:
    def test_exact_json(self, capsys):
        doc = run_json(capsys, "capacity", *SYS3, "--exact")
        assert doc["case"] == "abc-substring"
        assert doc["exactForm"] == "log_3((3+sqrt(5))/2)"
        assert abs(doc["value"] - 0.8760357589718848) < 1e-12

    def test_numeric_cross_check(self, capsys):
        doc = run_json(capsys, "capacity", *SYS3, "--numeric")
        assert abs(doc["numericValue"] - doc["value"]) < 1e-8

    def test_empirical(self, capsys):
        doc = run_json(capsys, "capacity", *SYS3, "--empirical", "--max-len", "12")
        assert doc["case"] == "empirical"
        assert abs(doc["value"] - 0.876036) < 0.05

    def test_bits_conversion(self, capsys):
        doc = run_json(capsys, "capacity", *SYS3, "--exact", "--bits")
        assert abs(doc["valueBits"] - doc["value"] * math.log2(3)) < 1e-12


class TestExpress:
    def test_negative_verdict_with_witness(self, capsys):
        doc = run_json(capsys, "express", *SYS3, "--witness")
        assert doc["answer"] == "no"
        assert doc["rule"] == "ternary-k3"
        assert doc["witness"] == "01210121012101210"

    def test_positive_verdict(self, capsys):
        doc = run_json(capsys, "express", "--alphabet", "012", "--seed", "012", "--max-dup", "4")
        assert doc["answer"] == "yes"
        assert doc["witness"] is None

    def test_witness_subcommand(self, capsys):
        doc = run_json(capsys, "witness", *SYS2)
        assert doc == {"witness": None, "reason": None}
        doc = run_json(capsys, "witness", "--alphabet", "01", "--seed", "01", "--max-dup", "1")
        assert doc == {"witness": "0101", "reason": "binary-k1"}


class TestDedup:
    def test_roots(self, capsys):
        doc = run_json(
            capsys, "dedup", "--alphabet", "012", "--word", "012101212", "--max-dup", "4"
        )
        assert doc["roots"] == ["012", "0121012"]

    def test_distance(self, capsys):
        doc = run_json(
            capsys,
            "dedup",
            "--alphabet", "012",
            "--word", "012101212",
            "--max-dup", "4",
            "--target", "012",
        )
        assert doc["distance"] == 2

    def test_unreachable_distance_prints_none(self, capsys):
        code, out = run(
            capsys,
            "dedup",
            "--alphabet", "012",
            "--word", "012101212",
            "--max-dup", "2",
            "--target", "012",
            "--format", "text",
        )
        assert code == 0
        assert "distance\tNone" in out


class TestVerify:
    def test_certificate_and_oracle(self, capsys):
        doc = run_json(capsys, "verify", *SYS3, "--check-upto", "9")
        assert doc["seedAccepted"] is True
        assert doc["closure"]["passed"] is True
        assert doc["oracleAgrees"] is True
        assert doc["oracleDepth"] == 9


class TestSquarefree:
    def test_word_is_emitted(self, capsys):
        code, out = run(capsys, "squarefree", "--length", "12", "--format", "text")
        assert code == 0
        assert out.strip() == "012021012102"

    def test_custom_alphabet(self, capsys):
        doc = run_json(capsys, "squarefree", "--length", "5", "--alphabet", "abc")
        assert doc["word"] == "abcac"


class TestAvoid:
    def test_three_window_value(self, capsys):
        doc = run_json(
            capsys,
            "avoid",
            "--alphabet", "012",
            "--forbid", "210", "--forbid", "021", "--forbid", "102",
        )
        assert abs(doc["value"] - 0.914838) < 1e-4


class TestExitCodes:
    def test_domain_error_from_large_kmax(self, capsys):
        code, _ = run(capsys, "automaton", "--alphabet", "012", "--seed", "012", "--max-dup", "4")
        assert code == 1

    def test_domain_error_from_budget(self, capsys):
        code, _ = run(capsys, "count", *SYS3, "--max-len", "9", "--budget", "10")
        assert code == 1

    def test_domain_error_from_empty_avoidance(self, capsys):
        code, _ = run(
            capsys,
            "avoid",
            "--alphabet", "01",
            "--forbid", "00", "--forbid", "01", "--forbid", "10", "--forbid", "11",
        )
        assert code == 1

    def test_usage_error_from_foreign_seed(self, capsys):
        code, _ = run(capsys, "count", "--alphabet", "01", "--seed", "02", "--max-dup", "2", "--max-len", "5")
        assert code == 2

    def test_usage_error_from_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_error_messages_go_to_stderr(self, capsys):
        code = main(["automaton", "--alphabet", "012", "--seed", "012", "--max-dup", "4"])
        captured = capsys.readouterr()
        assert code == 1
        assert captured.out == ""
        assert "kmax" in captured.err


def test_out_flag_writes_file(tmp_path, capsys):
    target = tmp_path / "machine.json"
    code, out = run(capsys, "automaton", *SYS2, "--out", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert len(doc["states"]) == 5
