import json

from turanlab.cli import run
from turanlab.planar_core import embedding_from_json, embedding_to_json
from turanlab.construct import chain_of_k5minus


def test_construct_g0(tmp_path):
    out = tmp_path / "g.json"
    report = tmp_path / "r.json"
    rc = run(["construct", "--family", "g0", "--k", "1",
              "--out", str(out), "--report", str(report)])
    assert rc == 0
    payload = json.loads(report.read_text())
    assert payload["v"] == 64 and payload["e"] == 153
    emb = embedding_from_json(out.read_text())
    assert emb.n == 64


def test_check_c6_free(tmp_path):
    g = tmp_path / "fig1.json"
    g.write_text(embedding_to_json(chain_of_k5minus(4)))
    out = tmp_path / "verdict.json"
    rc = run(["check", "--file", str(g), "--ell", "6", "--out", str(out)])
    assert rc == 0
    assert json.loads(out.read_text())["free"] is True


def test_check_finds_cycle(tmp_path):
    g = tmp_path / "g.json"
    rc = run(["construct", "--family", "general", "--ell", "7", "--out", str(g)])
    assert rc == 0
    out = tmp_path / "verdict.json"
    # the C7-free graph is packed with triangles
    rc = run(["check", "--file", str(g), "--ell", "3", "--out", str(out)])
    assert rc == 1
    assert json.loads(out.read_text())["witness"] is not None


def test_certify_rejects_low_degree(tmp_path, c7):
    g = tmp_path / "c7.json"
    g.write_text(embedding_to_json(c7))
    assert run(["certify", "--file", str(g)]) == 2


def test_certify_extremal(tmp_path):
    g = tmp_path / "g.json"
    run(["construct", "--family", "h0", "--k", "1", "--out", str(g)])
    out = tmp_path / "cert.json"
    rc = run(["certify", "--file", str(g), "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload["total_score"] == "0"
    assert payload["bound"]["bound_holds"] is True


def test_decompose_and_score(tmp_path, two_bump_ring):
    g = tmp_path / "ring.json"
    g.write_text(embedding_to_json(two_bump_ring))
    blocks_out = tmp_path / "blocks.json"
    assert run(["decompose", "--file", str(g), "--out", str(blocks_out)]) == 0
    blocks = json.loads(blocks_out.read_text())
    assert sorted(b["type"] for b in blocks).count("B5a") == 2
    score_out = tmp_path / "ledger.json"
    assert run(["score", "--file", str(g), "--out", str(score_out)]) == 0
    ledger = json.loads(score_out.read_text())
    assert ledger["adjustments"][0]["effective_length"] == 9


def test_oracle_subcommand(tmp_path):
    out = tmp_path / "oracle.json"
    rc = run(["oracle", "--n", "5", "--method", "both", "--out", str(out)])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert [r["max_edges"] for r in payload] == [9, 9]


def test_export_round_trip(tmp_path, c7):
    g = tmp_path / "c7.json"
    g.write_text(embedding_to_json(c7))
    dot_out = tmp_path / "c7.dot"
    assert run(["export", "--file", str(g), "--format", "dot", "--out", str(dot_out)]) == 0
    assert "0 -- 1;" in dot_out.read_text()
    json_out = tmp_path / "again.json"
    assert run(["export", "--file", str(g), "--format", "json", "--out", str(json_out)]) == 0
    assert embedding_from_json(json_out.read_text()).rotations == c7.rotations


def test_missing_file_is_input_error(tmp_path):
    assert run(["check", "--file", str(tmp_path / "nope.json")]) == 2


def test_outputs_deterministic(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(["construct", "--family", "chain", "--t", "2", "--out", str(a)])
    run(["construct", "--family", "chain", "--t", "2", "--out", str(b)])
    assert a.read_text() == b.read_text()
