"""Job configuration: a JSON file, overridden field by field from the command line."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any

from ..errors import ConfigError

TASKS = ("zeta", "dirichlet", "curve", "twist", "equivariance", "trace-check", "divisor-check")


@dataclass
class JobConfig:
    task: str = "zeta"
    q: str = "3"
    trunc: int = 8
    include_infinity: bool = False
    derivatives: int = 0
    sigma: list[int] | None = None
    degree_bound_num: int | None = None
    degree_bound_den: int | None = None
    curve: dict | None = None
    characters: list[dict] = field(default_factory=list)
    out: str | None = None

    def validate(self) -> JobConfig:
        if self.task not in TASKS:
            raise ConfigError("task", f"unknown task {self.task!r}; expected one of {', '.join(TASKS)}")
        for name in ("trunc", "derivatives"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int):
                raise ConfigError(name, f"expected an integer, got {value!r}")
        if self.trunc < 1:
            raise ConfigError("trunc", "truncation order N must be at least 1")
        if self.derivatives < 0:
            raise ConfigError("derivatives", "derivative count must be non-negative")
        for name in ("degree_bound_num", "degree_bound_den"):
            value = getattr(self, name)
            if value is not None and (isinstance(value, bool) or not isinstance(value, int) or value < 0):
                raise ConfigError(name, "degree bound must be a non-negative integer")
        if not isinstance(self.include_infinity, bool):
            raise ConfigError("include_infinity", "expected true or false")
        if self.sigma is not None:
            if not isinstance(self.sigma, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in self.sigma):
                raise ConfigError("sigma", "expected a list of integers")
        if self.curve is not None:
            if not isinstance(self.curve, dict) or set(self.curve) - {"A", "B"} or "A" not in self.curve or "B" not in self.curve:
                raise ConfigError("curve", 'expected {"A": [...], "B": [...]}')
        if not isinstance(self.characters, list):
            raise ConfigError("characters", "expected a list of character records")
        needs = {"dirichlet": "characters", "twist": "characters", "equivariance": "characters"}
        if self.task in needs and not self.characters:
            raise ConfigError("characters", f"task {self.task} needs at least one character")
        if self.task == "curve" and self.curve is None:
            raise ConfigError("curve", "task curve needs curve coefficients")
        return self

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> JobConfig:
        if not isinstance(data, dict):
            raise ConfigError("config", "configuration must be a JSON object")
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise ConfigError(unknown[0], "unknown configuration field")
        cfg = cls(**data)
        if isinstance(cfg.q, int) and not isinstance(cfg.q, bool):
            cfg.q = str(cfg.q)
        return cfg

    @classmethod
    def load(cls, path: str) -> JobConfig:
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError("config", f"{path}: {exc}") from None
        if isinstance(data, dict) and "config" in data and isinstance(data["config"], dict):
            data = data["config"]  # an emitted report
        return cls.from_dict(data)


def parse_curve(text: str) -> dict:
    """'a0,a1,...;b0,b1,...' -> {"A": [...], "B": [...]}."""
    try:
        a, b = text.split(";")
        return {"A": [int(x) for x in a.split(",") if x.strip()], "B": [int(x) for x in b.split(",") if x.strip()]}
    except ValueError:
        raise ConfigError("curve", f"expected 'a0,a1,...;b0,b1,...', got {text!r}") from None


def parse_character(text: str) -> dict:
    """'m0,m1,...:n:e1,e2,...[:inf]' -> character record."""
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise ConfigError("characters", f"expected 'modulus:order:exponents[:infinity]', got {text!r}")
    try:
        rec: dict[str, Any] = {
            "modulus": [int(x) for x in parts[0].split(",")],
            "order": int(parts[1]),
            "exponents": [int(x) for x in parts[2].split(",") if x.strip()],
            "infinity": "ramified",
        }
        if len(parts) == 4 and parts[3] != "ramified":
            rec["infinity"] = int(parts[3])
    except ValueError:
        raise ConfigError("characters", f"could not parse {text!r}") from None
    return rec
