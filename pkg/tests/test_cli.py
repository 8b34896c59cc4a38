import json

import pytest

from sturmpal.cli import RunConfig, main, run


def test_generate(capsys):
    assert main(["generate", "1,2;2,1"]) == 0
    assert capsys.readouterr().out == "aabab\n"


def test_generate_json(capsys):
    assert main(["generate", "--pi", "2,1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["word"] == "aab" and doc["length"] == 3


def test_generate_large_prints_stats(tmp_path, capsys):
    out = tmp_path / "w.txt"
    assert main(["generate", ";".join(["1,2"] * 12), "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert text.startswith("length=")
    assert len(out.read_text().strip()) == int(text.split()[0].split("=")[1])


def test_generate_cap_exit_code(capsys):
    assert main(["generate", "9,8", "--cap", "5"]) == 3


def test_input_errors(capsys):
    assert main(["generate", "2,4"]) == 2
    assert "pair 1" in capsys.readouterr().err
    assert main(["generate", "1,2;"]) == 2
    assert main(["analyze"]) == 2
    assert main(["generate", "1,2", "--cap", "0"]) == 2


def test_analyze_rows(capsys):
    assert main(["analyze", "2,1", "--format", "tsv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].split("\t") == ["position", "center_kind", "length", "origin_level", "sequence_id", "flagged"]
    assert len(lines) == 5


def test_analyze_json(capsys):
    assert main(["analyze", "1,2;2,1", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["occurrences"]) == 6
    assert doc["counts"]["k_total"] == 6 and doc["counts"]["m_distinct"] == 4
    assert {d["word"] for d in doc["distinct"]} == {"a", "aba", "abaaba", "abaababaaba"}


def test_verify_exit_zero(capsys):
    assert main(["verify", "1,2;2,1", "--sweep-count", "10"]) == 0
    out = capsys.readouterr().out
    assert "formula=6\toracle=6" in out
    assert "distinct_count\tformula=4\toracle=4" in out


def test_verify_is_byte_stable(capsys):
    main(["verify", "2,1", "--sweep-count", "5", "--rng-seed", "4", "--format", "json"])
    a = capsys.readouterr().out
    main(["verify", "2,1", "--sweep-count", "5", "--rng-seed", "4", "--format", "json"])
    assert capsys.readouterr().out == a


def test_verify_writes_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["verify", "--sweep-count", "3", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["passed"] is True


def test_bistandard(capsys):
    assert main(["bistandard", "1,2", "--iterations", "2"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines == ["0\t1\ta", "1\t5\tababa", "2\t15\tababaababaababa"]


def test_bench_small(capsys):
    assert main(["bench", "--max-length", "200000", "--repeat", "1", "--backend", "python"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("python\t")
    assert "max growth per doubling" in out[-1]


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(command="explode")
    assert run(RunConfig(command="generate", pi_text="1,2")) == 0
