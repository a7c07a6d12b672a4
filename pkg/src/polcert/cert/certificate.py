"""Certificate documents: deterministic body plus an unsigned header."""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from datetime import datetime, timezone
from importlib import resources
from typing import Any

from .. import __version__
from .registry import ORDER, REGISTRY

VERIFIED = "verified"
FALSIFIED = "falsified"
INCONCLUSIVE = "inconclusive"
ASSUMED = "assumed-lemma"
VERDICTS = (VERIFIED, FALSIFIED, INCONCLUSIVE, ASSUMED)


def digest(obj: Any) -> str:
    blob = json.dumps(obj, sort_keys=True, separators=(",", ":"), default=str).encode()
    return "sha256:" + hashlib.sha256(blob).hexdigest()


@dataclass
class ClaimRecord:
    claim_id: str
    verdict: str
    witness: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.claim_id not in REGISTRY:
            raise KeyError(f"claim {self.claim_id!r} is not in the registry")
        if self.verdict not in VERDICTS:
            raise ValueError(f"bad verdict {self.verdict!r}")

    def body(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "reference": REGISTRY[self.claim_id].reference,
            "inputs_digest": digest(self.inputs),
            "verdict": self.verdict,
            "witness": self.witness,
        }


@dataclass
class Certificate:
    command: str
    records: list[ClaimRecord]
    config: dict = field(default_factory=dict)
    threads: int = 1

    def sorted_records(self) -> list[ClaimRecord]:
        return sorted(self.records, key=lambda r: ORDER[r.claim_id])

    def summary(self) -> dict:
        out = {v: 0 for v in VERDICTS}
        for r in self.records:
            out[r.verdict] += 1
        return out

    @property
    def falsified(self) -> bool:
        return any(r.verdict == FALSIFIED for r in self.records)

    @property
    def inconclusive(self) -> bool:
        return any(r.verdict == INCONCLUSIVE for r in self.records)

    @property
    def resource_limited(self) -> bool:
        """Some claim is undecided because a guard, budget or memory limit was hit."""
        return any(r.verdict == INCONCLUSIVE and r.witness.get("resource_limit") for r in self.records)

    def to_dict(self, timestamp: str | None = None) -> dict:
        recs = self.sorted_records()
        body = {
            "tool": "polcert",
            "tool_version": __version__,
            "command": self.command,
            "config_digest": digest(self.config),
            "claims": [r.body() for r in recs],
            "summary": self.summary(),
        }
        header = {
            "timestamp": timestamp or datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "threads": self.threads,
            "timings_ms": {r.claim_id: round(r.elapsed_ms, 3) for r in recs},
            "body_digest": digest(body),
        }
        return {"header": header, "body": body}

    def to_json(self, timestamp: str | None = None) -> str:
        return json.dumps(self.to_dict(timestamp), indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def body_json(doc: dict) -> str:
    """Canonical serialization of the deterministic part."""
    return json.dumps(doc["body"], sort_keys=True, ensure_ascii=False)


def load_schema() -> dict:
    return json.loads(resources.files("polcert.cert").joinpath("certificate.schema.json").read_text())


def validate(doc: dict) -> None:
    """Schema check plus registry and digest consistency; raises ValueError."""
    import jsonschema

    try:
        jsonschema.validate(doc, load_schema())
    except jsonschema.ValidationError as exc:
        raise ValueError(f"certificate does not match the schema: {exc.message}") from exc
    for rec in doc["body"]["claims"]:
        cid = rec["claim_id"]
        if cid not in REGISTRY or REGISTRY[cid].reference != rec["reference"]:
            raise ValueError(f"claim {cid!r} does not match the registry")
    if doc["header"].get("body_digest") not in (None, digest(doc["body"])):
        raise ValueError("body digest mismatch")


def render_markdown(doc: dict) -> str:
    body, header = doc["body"], doc["header"]
    lines = [
        f"# polcert certificate: `{body['command']}`",
        "",
        f"- tool version: {body['tool_version']}",
        f"- run at: {header.get('timestamp', '?')}",
        "- summary: " + ", ".join(f"{k} {v}" for k, v in body["summary"].items() if v),
        "",
        "| claim | verdict | reference | time (ms) |",
        "|---|---|---|---|",
    ]
    timings = header.get("timings_ms", {})
    for rec in body["claims"]:
        ref = rec["reference"].replace("|", "\\|")
        lines.append(f"| `{rec['claim_id']}` | **{rec['verdict']}** | {ref} | {timings.get(rec['claim_id'], '')} |")
    lines.append("")
    for rec in body["claims"]:
        lines.append(f"## {rec['claim_id']}: {rec['verdict']}")
        lines.append("")
        lines.append("```json")
        lines.append(json.dumps(rec["witness"], indent=2, ensure_ascii=False))
        lines.append("```")
        lines.append("")
    return "\n".join(lines)
