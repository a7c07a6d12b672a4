"""Run configuration: JSON file on top of built-in defaults."""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path

MUTATIONS = ("pi_a", "pi_b", "rho_a", "rho_b", "relator", "pol2_relator")


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    coset_limit: int = 100_000
    hom_guard: int = 1_000_000
    map_guard: int = 1_000_000
    search_max_len: int = 40
    search_max_degree: int = 3
    search_max_nodes: int = 500_000
    search_budget_ms: float | None = None
    search_meet_in_middle: bool = True
    freeness_length: int = 8
    nilpotency_levels: list[int] = field(default_factory=lambda: [2, 3, 4])
    battery: list[str] = field(default_factory=lambda: ["S3", "C9:C3", "Heis3", "C9xC3"])
    output: str | None = None
    corrupt: list[str] = field(default_factory=list)  # negative controls

    def validate(self) -> "RunConfig":
        for name in ("coset_limit", "hom_guard", "map_guard", "search_max_len", "search_max_degree",
                     "search_max_nodes", "freeness_length"):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive")
        if self.search_budget_ms is not None and self.search_budget_ms <= 0:
            raise ConfigError("search_budget_ms must be positive")
        if not self.nilpotency_levels or any(n < 2 for n in self.nilpotency_levels):
            raise ConfigError("nilpotency levels must be >= 2")
        bad = [m for m in self.corrupt if m not in MUTATIONS]
        if bad:
            raise ConfigError(f"unknown mutations {bad}; choose from {list(MUTATIONS)}")
        from ..polymap.groups import battery

        unknown = [b for b in self.battery if b not in battery()]
        if unknown:
            raise ConfigError(f"unknown battery groups {unknown}")
        return self

    def as_dict(self) -> dict:
        return asdict(self)


def load_config(path: str | Path | None = None, **overrides) -> RunConfig:
    data: dict = {}
    if path is not None:
        try:
            data = json.loads(Path(path).read_text())
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: line {exc.lineno}: {exc.msg}") from exc
        if not isinstance(data, dict):
            raise ConfigError(f"{path}: top level must be an object")
    known = {f.name for f in fields(RunConfig)}
    extra = sorted(set(data) - known)
    if extra:
        raise ConfigError(f"unknown config keys {extra}")
    data.update({k: v for k, v in overrides.items() if v is not None})
    return RunConfig(**data).validate()


def thread_count() -> int:
    raw = os.environ.get("POLCERT_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise ConfigError(f"POLCERT_THREADS must be an integer, got {raw!r}") from None
    return max(1, n)
