from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .. import __version__

SCHEMA_VERSION = 1

_RELATIONS = {
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<=": lambda a, b: a <= b,
    ">=": lambda a, b: a >= b,
}


def _jsonable(x: Any) -> Any:
    # counts overflow 64 bits, so every integer leaves as a decimal string
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    return str(x)


@dataclass
class Check:
    id: str
    inputs: dict[str, Any]
    lhs: Any
    rhs: Any
    relation: str
    passed: bool = field(init=False)
    expected_failure: bool = False

    def __post_init__(self):
        self.passed = bool(_RELATIONS[self.relation](self.lhs, self.rhs))

    @property
    def unexpected(self) -> bool:
        return not self.passed and not self.expected_failure

    def to_dict(self) -> dict:
        d = {
            "id": self.id,
            "inputs": _jsonable(self.inputs),
            "lhs": _jsonable(self.lhs),
            "rhs": _jsonable(self.rhs),
            "relation": self.relation,
            "pass": self.passed,
        }
        if self.expected_failure:
            d["expected_failure"] = True
        return d


@dataclass
class SuiteReport:
    suite: str
    parameters: dict[str, Any]
    checks: list[Check]
    counterexamples: list[dict] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)
    elapsed: float | None = None

    def __post_init__(self):
        self.checks.sort(key=lambda c: c.id)
        self.observations.sort()
        self.counterexamples.sort(key=lambda c: (c.get("check", ""), json.dumps(_jsonable(c), sort_keys=True)))
        # every failing check is replayable from the counterexample list
        listed = {c.get("check") for c in self.counterexamples}
        for c in self.checks:
            if not c.passed and c.id not in listed:
                self.counterexamples.append({"check": c.id, "expected": c.expected_failure, **c.inputs})

    @property
    def passed(self) -> bool:
        return not any(c.unexpected for c in self.checks)

    @property
    def expected_witnesses(self) -> list[Check]:
        return [c for c in self.checks if c.expected_failure and not c.passed]

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "version": __version__,
            "suite": self.suite,
            "parameters": _jsonable(self.parameters),
            "passed": self.passed,
            "summary": {
                "checks": str(len(self.checks)),
                "failed": str(sum(1 for c in self.checks if c.unexpected)),
                "expected_witnesses": str(len(self.expected_witnesses)),
            },
            "checks": [c.to_dict() for c in self.checks],
            "counterexamples": _jsonable(self.counterexamples),
            "observations": self.observations,
            "elapsed_seconds": None if self.elapsed is None else f"{self.elapsed:.3f}",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite}  (combineq {__version__})"]
        for c in self.checks:
            if c.passed:
                status = "PASS"
            elif c.expected_failure:
                status = "XFAIL"
            else:
                status = "FAIL"
            lines.append(f"{status:5} {c.id}: {c.lhs} {c.relation} {c.rhs}")
        for obs in self.observations:
            lines.append(f"NOTE  {obs}")
        failed = sum(1 for c in self.checks if c.unexpected)
        lines.append(
            f"{len(self.checks)} checks, {failed} failed, {len(self.expected_witnesses)} expected witnesses"
            + (f", {self.elapsed:.2f}s" if self.elapsed is not None else "")
        )
        lines.append("PASSED" if self.passed else "FAILED")
        return "\n".join(lines) + "\n"
