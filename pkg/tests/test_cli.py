import json

import pytest
from fastapi.testclient import TestClient

from homeguard.cli import main, run_golden
from homeguard.server import create_app

ROW2 = "My uncle raped me. Nobody here in my home. Please help me."


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_golden(capsys):
    code, out, _ = run(capsys, "eval", "--table1")
    assert code == 0
    assert out.count("PASS") == 16 and "FAIL" not in out
    assert "16/16" in out


def test_run_golden_rows():
    rows = run_golden()
    assert len(rows) == 16 and all(r["pass"] for r in rows)


def test_triage_matches_http(capsys):
    code, out, _ = run(capsys, "triage", "--message", ROW2, "--lat", "23.78", "--lon", "90.41")
    assert code == 0
    cli = json.loads(out)
    http = TestClient(create_app()).post("/v1/reports", json={"message": ROW2, "lat": 23.78, "lon": 90.41}).json()
    assert cli["result"] == http["result"]
    assert cli["dispatched"] == http["dispatched"]


def test_triage_not_emergency(capsys):
    code, out, _ = run(capsys, "triage", "--message", "The weather is nice today.")
    assert code == 3
    assert json.loads(out)["error"] == "NotEmergency"


def test_triage_empty(capsys):
    code, _, err = run(capsys, "triage", "--message", "  ")
    assert code == 2 and "empty" in err


def test_triage_half_location(capsys):
    code, _, _ = run(capsys, "triage", "--message", ROW2, "--lat", "23.7")
    assert code == 2


def test_query(capsys):
    sparql = "PREFIX hg: <http://homeguard.example/ontology#> SELECT ?svc WHERE { hg:rape hg:hasCrimeLevel ?l . ?l hg:hasService ?svc }"
    code, out, err = run(capsys, "query", "--sparql", sparql)
    assert code == 0
    assert sorted(line.rsplit("#", 1)[1].rstrip(">") for line in out.splitlines()) == ["Hospital", "Lawyer", "NGO", "Police"]
    assert "4 row(s)" in err


def test_query_malformed(capsys):
    code, _, err = run(capsys, "query", "--sparql", "SELECT WHERE")
    assert code == 2 and err.startswith("error:")


def test_custom_ontology(tmp_path, capsys):
    from importlib import resources

    text = resources.files("homeguard").joinpath("data", "ontology.ttl").read_text(encoding="utf-8")
    path = tmp_path / "o.ttl"
    path.write_text(text, encoding="utf-8")
    code, out, _ = run(capsys, "eval", "--table1", "--ontology", str(path))
    assert code == 0


def test_eval_requires_corpus(capsys):
    code, _, _ = run(capsys, "eval")
    assert code == 2


def test_subcommand_required():
    with pytest.raises(SystemExit):
        main([])
