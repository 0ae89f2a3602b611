from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

PARALLELISM_ENV = "COMBINEQ_JOBS"
CAP_KEYS = ("max_n", "max_vertices", "max_N", "max_m")


@dataclass(frozen=True)
class Config:
    """Size caps and output options for a verification run.

    A cap left as ``None`` means "use each check group's own default"; the
    defaults reproduce the acceptance scales.  Setting a cap overrides it for
    every group that reads that key.
    """

    max_n: int | None = None
    max_vertices: int | None = None
    max_N: int | None = None
    max_m: int | None = None
    format: str = "text"
    parallelism: int = 1
    timing: bool = False

    def __post_init__(self):
        for key in CAP_KEYS:
            v = getattr(self, key)
            if v is not None and v < 1:
                raise ValueError(f"{key} must be positive, got {v}")
        if self.parallelism < 1:
            raise ValueError("parallelism must be positive")
        if self.format not in ("text", "json"):
            raise ValueError(f"unknown format {self.format!r}")

    def cap(self, key: str, default: int) -> int:
        v = getattr(self, key)
        return default if v is None else v

    @classmethod
    def minimum(cls, **kw) -> "Config":
        """Smoke-test scale."""
        return cls(max_n=4, max_vertices=4, max_N=4, max_m=4, **kw)

    def caps(self) -> dict[str, int | None]:
        return {k: getattr(self, k) for k in CAP_KEYS}


def _coerce(name: str, raw: str):
    if name in CAP_KEYS or name == "parallelism":
        return int(raw)
    if name == "timing":
        return raw.strip().lower() in ("1", "true", "yes", "on")
    return raw.strip()


def parse_config_text(text: str) -> dict:
    """Flat ``key = value`` lines; ``#`` starts a comment."""
    known = {f.name for f in fields(Config)}
    out = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected 'key = value'")
        key, raw = (s.strip() for s in line.split("=", 1))
        if key not in known:
            raise ValueError(f"line {lineno}: unknown key {key!r}")
        out[key] = _coerce(key, raw)
    return out


def load_config(path: str | Path | None = None, **overrides) -> Config:
    """File values, then the parallelism environment variable, then explicit overrides."""
    values: dict = {}
    if path is not None:
        values.update(parse_config_text(Path(path).read_text()))
    env = os.environ.get(PARALLELISM_ENV)
    if env:
        values["parallelism"] = int(env)
    values.update({k: v for k, v in overrides.items() if v is not None})
    return replace(Config(), **values)
