"""Run configuration: defaults, optional JSON file, SUPERSAT_* environment overrides."""
from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, fields, replace

FORMATS = ("json", "csv", "plain")
ENV_PREFIX = "SUPERSAT_"


@dataclass(frozen=True)
class RunConfig:
    perm_cap: int = 8          # largest n for explicit S_n families
    set_cap: int = 64          # largest ground set for mask families
    zeta_cap: int = 28         # largest n for the 2^n subset-sum table
    family_cap: int = 24       # largest C(n,k) for 2^C(n,k) enumeration
    time_budget: float = 0.0   # seconds per search, 0 = unlimited
    workers: int = 1
    format: str = "plain"
    seed: int = 20240601

    def __post_init__(self):
        for name in ("perm_cap", "set_cap", "zeta_cap", "family_cap", "workers"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")
        if self.time_budget < 0:
            raise ValueError("time_budget must be non-negative")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.set_cap > 64:
            raise ValueError("set_cap cannot exceed 64")

    @property
    def budget(self) -> float | None:
        return self.time_budget or None

    def as_dict(self) -> dict:
        return asdict(self)


def _coerce(name: str, raw):
    typ = {f.name: f.type for f in fields(RunConfig)}[name]
    if typ in ("int", int):
        return int(raw)
    if typ in ("float", float):
        return float(raw)
    return str(raw)


def load_config(path: str | None = None, env=None, **overrides) -> RunConfig:
    """Defaults, then the JSON file, then SUPERSAT_<FIELD> variables, then keyword overrides."""
    env = os.environ if env is None else env
    values = {}
    if path:
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, dict):
            raise ValueError("config file must hold a JSON object")
        known = {f.name for f in fields(RunConfig)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        values.update({k: _coerce(k, v) for k, v in data.items()})
    for f in fields(RunConfig):
        key = ENV_PREFIX + f.name.upper()
        if key in env:
            values[f.name] = _coerce(f.name, env[key])
    values.update({k: _coerce(k, v) for k, v in overrides.items() if v is not None})
    return replace(RunConfig(), **values)
