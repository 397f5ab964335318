"""Verification reports and exact probability distributions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .poly import Polynomial
from .state import State


def _jsonable(value: Any) -> Any:
    if isinstance(value, Polynomial):
        return value.to_json_obj()
    if isinstance(value, (Fraction, State)):
        return str(value)
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_json_obj"):
        return value.to_json_obj()
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class Report:
    """Outcome of checking one identity over many instances."""

    identity: str
    instances: int = 0
    failures: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, inputs: Any = None, lhs: Any = None, rhs: Any = None) -> bool:
        self.instances += 1
        if not ok:
            self.failures.append({"inputs": inputs, "lhs": lhs, "rhs": rhs})
        return ok

    def fail(self, inputs: Any = None, lhs: Any = None, rhs: Any = None) -> None:
        """Add a failure without counting an instance (bulk loops count separately)."""
        self.failures.append({"inputs": inputs, "lhs": lhs, "rhs": rhs})

    def merge(self, other: Report) -> None:
        self.instances += other.instances
        self.failures.extend(other.failures)

    def to_json_obj(self) -> dict:
        obj = {
            "identity": self.identity,
            "instances": self.instances,
            "failures": _jsonable(self.failures),
        }
        if self.details:
            obj["details"] = _jsonable(self.details)
        return obj

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_json_obj(), indent=indent, ensure_ascii=False)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.identity}: {self.instances} instances, {len(self.failures)} failures"


class RationalDistribution:
    """Exact probabilities indexed by state, kept in canonical state order."""

    def __init__(self, probs: Mapping[State | str, Fraction] | Iterable[tuple[State | str, Fraction]]):
        items = probs.items() if isinstance(probs, Mapping) else probs
        clean = {}
        for s, p in items:
            s = s if isinstance(s, State) else State.parse(s)
            clean[s] = Fraction(p)
        self._probs = dict(sorted(clean.items()))

    def __getitem__(self, s: State | str) -> Fraction:
        return self._probs[s if isinstance(s, State) else State.parse(s)]

    def __iter__(self):
        return iter(self._probs)

    def __len__(self):
        return len(self._probs)

    def items(self):
        return self._probs.items()

    def values(self):
        return self._probs.values()

    def total(self) -> Fraction:
        return sum(self._probs.values(), Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, RationalDistribution):
            return NotImplemented
        return self._probs == other._probs

    def to_json_obj(self) -> list[dict]:
        return [{"state": str(s), "p": str(p)} for s, p in self._probs.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    def __repr__(self):
        inner = ", ".join(f"{s}: {p}" for s, p in self._probs.items())
        return f"RationalDistribution({{{inner}}})"
