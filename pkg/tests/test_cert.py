import json

import pytest

from polcert.cert import (
    FALSIFIED,
    REGISTRY,
    VERIFIED,
    ConfigError,
    RunConfig,
    body_json,
    classify,
    load_config,
    render_markdown,
    search,
    validate,
    verify,
)
from polcert.cert.cli import main
from polcert.cert.registry import claims_for
from polcert.polymap import heisenberg_3, symmetric_group_3, trivial_group

TS = "2000-01-01T00:00:00+00:00"


@pytest.fixture(scope="module")
def all_cert():
    return verify("all", RunConfig(), threads=1)


def verdicts(cert):
    return {r.claim_id: r.verdict for r in cert.records}


def test_verify_all_clean(all_cert):
    v = verdicts(all_cert)
    assert set(v) == {c.id for c in claims_for("all")}
    assert FALSIFIED not in v.values()
    assert v["char3.euclidean_lemma"] == "assumed-lemma"
    doc = all_cert.to_dict(TS)
    validate(doc)
    assert all(c["reference"] == REGISTRY[c["claim_id"]].reference for c in doc["body"]["claims"])


def test_determinism_and_thread_merge(all_cert):
    again = verify("all", RunConfig(), threads=3)
    assert body_json(all_cert.to_dict()) == body_json(again.to_dict())
    assert all_cert.to_json(TS) != again.to_json(TS)  # header differs (threads, timings)


def test_char3_level0_is_conjugate_not_equal(all_cert):
    rec = next(r for r in all_cert.records if r.claim_id == "char3.level0")
    assert rec.verdict == VERIFIED
    assert rec.witness["equals_standard"] is False
    assert rec.witness["conjugator_to_standard"] == [[0, 1, 0], [1, 0, 0], [0, 0, 2]]


@pytest.mark.parametrize("mutation, target, expect", [
    ("pol2_relator", "pol2", "pol2.cosets"),
    ("relator", "presentation", "gamma.abelianization"),
    ("relator", "presentation", "gamma.derivation"),
    ("pi_a", "char0", "char0.relators"),
    ("pi_b", "char0", "char0.relators"),
    ("rho_a", "char3", "char3.relators"),
    ("rho_b", "char3", "char3.relators"),
    ("rho_b", "remark", "remark.no_intertwiner"),
    ("rho_b", "nilpotency", "nilpotency.depth"),
])
def test_negative_controls(mutation, target, expect):
    cert = verify(target, RunConfig(corrupt=[mutation]), threads=1)
    assert verdicts(cert)[expect] == FALSIFIED
    assert cert.falsified


def test_config_validation(tmp_path):
    with pytest.raises(ConfigError):
        RunConfig(search_max_len=0).validate()
    with pytest.raises(ConfigError):
        RunConfig(corrupt=["nonsense"]).validate()
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"coset_limit": 5000, "battery": ["S3"]}))
    assert load_config(p).coset_limit == 5000
    p.write_text(json.dumps({"unknown": 1}))
    with pytest.raises(ConfigError):
        load_config(p)
    p.write_text("{bad json")
    with pytest.raises(ConfigError):
        load_config(p)


def test_classify_examples():
    c = classify(symmetric_group_3(), 3)
    v = {r.claim_id: r for r in c.records}
    assert v["classify.maps"].witness["count"] == 9 and v["classify.cross_oracle"].verdict == VERIFIED
    t = classify(trivial_group(), 4)
    assert {r.claim_id: r for r in t.records}["classify.maps"].witness["count"] == 1
    h = classify(heisenberg_3(), 2)
    assert {r.claim_id: r for r in h.records}["classify.cross_oracle"].witness["homomorphisms"] == 297
    unknown = classify(symmetric_group_3(), 4)
    assert {r.claim_id: r for r in unknown.records}["classify.cross_oracle"].verdict == "inconclusive"


def test_search_and_check_word():
    ident = search(3, "identity")
    assert ident.records[0].verdict == VERIFIED and ident.records[0].witness["word"] == "1"
    found = search(3, "E12:u", RunConfig(search_max_len=6))
    w = found.records[0].witness["word"]
    assert found.records[0].verdict == VERIFIED and w
    assert search(3, "E12:u", check_word=w).records[0].verdict == VERIFIED
    assert search(3, "E13:u", check_word=w).records[0].verdict == FALSIFIED
    nf = search(3, "E13:u^2", RunConfig(search_max_len=4))
    assert nf.records[0].verdict == "inconclusive"


def test_markdown_render(all_cert):
    md = render_markdown(all_cert.to_dict(TS))
    assert md.startswith("# polcert certificate") and "char3.elementary" in md


def test_cli_exit_codes(tmp_path, capsys):
    out = tmp_path / "c.json"
    assert main(["verify", "pol2", "--out", str(out)]) == 0
    assert main(["report", "--in", str(out), "--format", "markdown"]) == 0
    assert main(["verify", "char0", "--corrupt", "pi_b", "--out", str(tmp_path / "bad.json")]) == 1
    g = tmp_path / "g.txt"
    g.write_text("perm 3\n(1 2 4)\n")
    assert main(["classify", "--group", str(g), "--degree", "2"]) == 2
    assert "line 2" in capsys.readouterr().err
    g.write_text("perm 3\n(1 2 3)\n(1 2)\n")
    assert main(["classify", "--group", str(g), "--degree", "3", "--out", str(out)]) == 0
    assert main(["search", "--target", "E11:u"]) == 2
    assert main(["search", "--target", "E13:u^2", "--max-len", "3", "--strict", "--out", str(out)]) == 3
    assert main(["search", "--target", "E13:u^2", "--max-nodes", "50", "--out", str(out)]) == 4
    assert main(["report", "--in", str(out)]) == 4
    cfg = tmp_path / "tight.json"
    cfg.write_text(json.dumps({"coset_limit": 10}))
    assert main(["verify", "pol2", "--config", str(cfg), "--out", str(out)]) == 4
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nothing"])
    assert exc.value.code == 2


def test_report_rejects_tampering(tmp_path, all_cert):
    doc = all_cert.to_dict(TS)
    doc["body"]["claims"][0]["verdict"] = "verified!"
    p = tmp_path / "t.json"
    p.write_text(json.dumps(doc))
    assert main(["report", "--in", str(p)]) == 2
    doc = all_cert.to_dict(TS)
    doc["body"]["claims"][1]["witness"] = {"forged": True}
    p.write_text(json.dumps(doc))
    assert main(["report", "--in", str(p)]) == 2
