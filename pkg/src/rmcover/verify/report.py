"""Structured verification records and their JSON/text serializations."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "rmcover-report/1"


@dataclass
class CheckResult:
    """One verified claim: an expected value or relation against a computed one.

    ``expected`` is an integer for equality checks, or a relation string of
    the form ``"< 30"`` / ``"> 0"`` / ``"<= 40"`` applied to ``computed``.
    """

    check_id: str
    group: str
    paper_ref: str
    expected: int | str
    computed: int
    status: str
    elapsed_ms: float
    detail: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "check_id": self.check_id,
            "group": self.group,
            "paper_ref": self.paper_ref,
            "expected": self.expected,
            "computed": int(self.computed),
            "status": self.status,
            "elapsed_ms": round(float(self.elapsed_ms), 3) if timing else 0.0,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def evaluate_expected(expected: int | str, computed: int) -> bool:
    if isinstance(expected, int):
        return computed == expected
    op, _, rhs = expected.partition(" ")
    bound = int(rhs)
    if op == "<":
        return computed < bound
    if op == "<=":
        return computed <= bound
    if op == ">":
        return computed > bound
    if op == ">=":
        return computed >= bound
    raise ValueError(f"unknown relation {expected!r}")


@dataclass(frozen=True)
class BoundRow:
    n: int
    lower: int
    upper: int
    source: str

    def to_dict(self) -> dict:
        return {"n": self.n, "lower": self.lower, "upper": self.upper, "source": self.source}


@dataclass(frozen=True)
class BoundTable:
    """Covering-radius bounds for RM(2,n), n = 8..12, plus the RM(1,*) inputs."""

    rows: tuple
    rm1_bounds: dict

    def row(self, n: int) -> BoundRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(n)

    def to_dict(self) -> dict:
        return {
            "rows": [r.to_dict() for r in self.rows],
            "rm1_upper_bounds": {str(k): int(v) for k, v in sorted(self.rm1_bounds.items())},
        }


@dataclass
class VerificationReport:
    results: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    config: dict = field(default_factory=dict)
    structure: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "pass" if all(r.passed for r in self.results) else "fail"

    def failing_ids(self) -> list:
        return sorted(r.check_id for r in self.results if not r.passed)

    def to_dict(self, timing: bool = True, include_threads: bool = True) -> dict:
        config = dict(self.config)
        if not include_threads:
            config.pop("threads", None)
        return {
            "schema_version": SCHEMA_VERSION,
            "config": config,
            "results": [r.to_dict(timing=timing) for r in sorted(self.results, key=lambda r: r.check_id)],
            "assumptions": list(self.assumptions),
            "notes": list(self.notes),
            "structure": self.structure,
            "verdict": self.verdict,
        }

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2, sort_keys=True)

    def canonical_json(self) -> str:
        """Deterministic serialization: timings zeroed, worker count omitted.

        Two runs with identical seeds produce byte-identical canonical JSON
        regardless of thread count.
        """
        return json.dumps(self.to_dict(timing=False, include_threads=False), sort_keys=True)

    _GROUP_ORDER = ("preamble", "representatives", "nfh", "s16", "profiles",
                    "concat", "witness", "bounds")

    def to_text(self) -> str:
        lines = []
        groups: dict[str, list[CheckResult]] = {}
        for r in sorted(self.results, key=lambda r: r.check_id):
            groups.setdefault(r.group, []).append(r)
        order = [g for g in self._GROUP_ORDER if g in groups]
        order += [g for g in groups if g not in order]
        for group in order:
            results = groups[group]
            lines.append(f"[{group}]")
            for r in results:
                mark = "ok  " if r.passed else "FAIL"
                lines.append(
                    f"  {mark} {r.check_id:<42} expected {str(r.expected):>8}"
                    f"  computed {r.computed:>6}  ({r.elapsed_ms:.0f} ms)  {r.paper_ref}"
                )
        if self.assumptions:
            lines.append("[assumptions] (imported, not computed)")
            for i, a in enumerate(self.assumptions, 1):
                lines.append(f"  A{i}. {a}")
        if self.notes:
            lines.append("[notes]")
            for n in self.notes:
                lines.append(f"  - {n}")
        if self.structure:
            lines.append("[theorem structure]")
            lines.append(f"  claim: {self.structure.get('claim', '')}")
            upper = self.structure.get("upper_bound", {})
            lower = self.structure.get("lower_bound", {})
            lines.append(
                f"  upper bound 40: status {upper.get('status', 'not-evaluated')}; "
                f"depends on groups {', '.join(upper.get('depends_on_groups', []))} "
                f"plus assumptions A1, A2"
            )
            lines.append(
                f"  lower bound 40: status {lower.get('status', 'not-evaluated')}; "
                f"witness certificate {lower.get('witness', '-')}"
            )
        failing = self.failing_ids()
        if failing:
            lines.append(f"verdict: FAIL ({len(failing)} failing: {', '.join(failing)})")
        else:
            lines.append("verdict: PASS")
        return "\n".join(lines)


_CHECK_SCHEMA = {
    "type": "object",
    "required": ["check_id", "group", "paper_ref", "expected", "computed", "status", "elapsed_ms"],
    "properties": {
        "check_id": {"type": "string"},
        "group": {"type": "string"},
        "paper_ref": {"type": "string"},
        "expected": {"type": ["integer", "string"]},
        "computed": {"type": "integer"},
        "status": {"enum": ["pass", "fail"]},
        "elapsed_ms": {"type": "number"},
        "detail": {"type": "object"},
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "title": "rmcover verification report",
    "type": "object",
    "required": ["schema_version", "config", "results", "assumptions", "notes", "structure", "verdict"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "config": {"type": "object"},
        "results": {"type": "array", "items": _CHECK_SCHEMA},
        "assumptions": {"type": "array", "items": {"type": "string"}, "minItems": 0},
        "notes": {"type": "array", "items": {"type": "string"}},
        "structure": {"type": "object"},
        "verdict": {"enum": ["pass", "fail"]},
    },
    "additionalProperties": False,
}
