"""End-to-end checks of the command line binary against the report schema."""

import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

CLI = os.environ["ITREE_CLI"]
SCHEMA = json.loads(pathlib.Path(os.environ["ITREE_SCHEMA"]).read_text())
GOLDEN_DIR = pathlib.Path(os.environ["ITREE_GOLDEN_DIR"])


def run(args, input_text=""):
    return subprocess.run(
        [CLI, *args], input=input_text, capture_output=True, text=True, timeout=300
    )


def validate(doc):
    jsonschema.validate(doc, SCHEMA)


def test_generate_to_exact_pipeline():
    gen = run(["generate", "--family", "path-of-bicliques", "--k", "4"])
    assert gen.returncode == 0
    assert gen.stdout.strip()

    exact = run(["exact", "--op", "t"], input_text=gen.stdout)
    assert exact.returncode == 0
    doc = json.loads(exact.stdout)
    validate(doc)
    assert doc["result"]["value"] == 7
    assert doc["result"]["exhausted"] is True
    assert doc["verification"]["ok"] is True


def test_generate_json_report_validates():
    r = run(
        [
            "generate",
            "--family",
            "blow-up",
            "--k",
            "2",
            "--r",
            "2",
            "--l",
            "2",
            "--format",
            "json",
        ]
    )
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    validate(doc)
    assert doc["result"]["params"]["copies"] == 7


def test_generate_is_seed_stable():
    args = ["generate", "--family", "random-triangle-free", "--n", "40", "--seed", "5"]
    assert run(args).stdout == run(args).stdout


def test_extract_report_and_trace(tmp_path):
    gen = run(["generate", "--family", "path-of-bicliques", "--k", "8"])
    trace_path = tmp_path / "trace.json"
    ext = run(
        ["extract", "--mode", "bipartite", "--t", "16", "--trace-out", str(trace_path)],
        input_text=gen.stdout,
    )
    assert ext.returncode == 0
    doc = json.loads(ext.stdout)
    validate(doc)
    assert doc["verification"]["ok"] is True
    assert doc["result"]["certificate"]["provenance"] == "level-construction"

    trace = json.loads(trace_path.read_text())
    assert trace["k"] == 3
    assert trace["steps"]


def test_extract_batch_is_jsonlines():
    feed = run(["generate", "--family", "path-of-bicliques", "--k", "5"]).stdout
    feed += run(["generate", "--family", "path-of-bicliques", "--k", "6"]).stdout
    r = run(["extract", "--mode", "trianglefree", "--t", "4", "--jobs", "2"], input_text=feed)
    assert r.returncode == 0
    rows = [json.loads(line) for line in r.stdout.splitlines() if line]
    assert len(rows) == 2
    for row in rows:
        validate(row)
        assert row["verification"]["ok"] is True


def test_exact_autodetects_edge_lists():
    r = run(["exact"], input_text="4 3\n0 1\n1 2\n2 3\n")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    validate(doc)
    assert doc["result"]["value"] == 4


def test_verify_reports_validate():
    gen = run(["generate", "--family", "path-of-bicliques", "--k", "3"])
    l4 = run(["verify", "lemma4", "--eta", "1/2"], input_text=gen.stdout)
    assert l4.returncode == 0
    doc = json.loads(l4.stdout)
    validate(doc)
    assert doc["result"]["lemma"] == "lemma4"
    assert doc["verification"]["ok"] is True

    l5 = run(["verify", "lemma5", "--eta", "0.9"], input_text="Dhc\n")
    assert l5.returncode == 0
    doc = json.loads(l5.stdout)
    validate(doc)
    assert doc["result"]["outcome"]["tag"] == "independent-set"


def test_fsearch_matches_the_repo_goldens():
    for cls in ("trianglefree", "bipartite"):
        golden = GOLDEN_DIR / f"fsearch_{cls}.json"
        stored = json.loads(golden.read_text())
        for n in ("4", "5"):
            r = run(
                ["fsearch", "--class", cls, "--n", n, "--golden", str(golden)]
            )
            assert r.returncode == 0, r.stderr
            doc = json.loads(r.stdout)
            validate(doc)
            assert doc["golden"]["action"] == "compared"
            assert doc["result"]["value"] == stored["values"][n]


def test_fsearch_records_then_flags_mismatch(tmp_path):
    golden = tmp_path / "golden.json"
    first = run(["fsearch", "--class", "trianglefree", "--n", "3", "--golden", str(golden)])
    assert first.returncode == 0
    assert json.loads(first.stdout)["golden"]["action"] == "recorded"

    golden.write_text(json.dumps({"class": "trianglefree", "values": {"3": 99}}))
    second = run(["fsearch", "--class", "trianglefree", "--n", "3", "--golden", str(golden)])
    assert second.returncode == 1
    doc = json.loads(second.stdout)
    validate(doc)
    assert doc["verification"]["ok"] is False


def test_fsearch_stream_over_stdin():
    r = run(
        ["fsearch", "--class", "trianglefree", "--n", "5", "--source", "stream"],
        input_text="Dhc\nD?{\nBw\n",
    )
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    validate(doc)
    assert doc["result"]["value"] == 4
    assert doc["result"]["graphs_skipped"] == 1


def test_usage_errors_exit_two():
    assert run(["extract", "--mode", "bipartite"]).returncode == 2  # empty stdin
    assert run(["no-such-command"]).returncode == 2
    assert run(["exact", "--op", "nope"], input_text="Dhc\n").returncode == 2
    bad = run(["extract", "--mode", "bipartite", "--t", "5"], input_text="Dhc\n")
    assert bad.returncode == 2
    doc = json.loads(bad.stdout)
    validate(doc)
    assert "bipartite" in doc["error"]


def test_report_digest_is_input_stable():
    doc1 = json.loads(run(["exact"], input_text="Dhc\n").stdout)
    doc2 = json.loads(run(["exact", "--op", "alpha"], input_text="Dhc\n").stdout)
    assert doc1["input"]["digest"] == doc2["input"]["digest"]
