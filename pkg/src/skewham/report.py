"""Check outcomes and their canonical serialization."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction


def exact(x) -> str:
    """Exact string form: integers as-is, rationals as a/b, infinity as inf."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return repr(x)
    return str(x)


@dataclass
class Check:
    name: str
    passed: bool
    values: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        self.passed = bool(self.passed)
        self.values = {str(k): exact(v) for k, v in self.values.items()}


@dataclass
class Report:
    suite: str
    params: dict[str, str] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    seed: int = 0
    elapsed: float | None = None

    def __post_init__(self):
        self.params = {str(k): exact(v) for k, v in self.params.items()}

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, **values) -> Check:
        c = Check(name, passed, values)
        self.checks.append(c)
        return c


def _as_dict(r: Report, timing: bool) -> dict:
    out = {
        "checks": [{"name": c.name, "passed": c.passed, "values": c.values} for c in r.checks],
        "params": r.params,
        "passed": r.passed,
        "seed": str(r.seed),
        "suite": r.suite,
    }
    if timing and r.elapsed is not None:
        out["elapsed"] = f"{r.elapsed:.3f}"
    return out


def emit_report(r: Report, fmt: str = "json", timing: bool = False) -> bytes:
    """Canonical bytes.  Wall-clock time is left out unless ``timing`` is set,
    so identical inputs give identical output."""
    if fmt == "json":
        return json.dumps(_as_dict(r, timing), sort_keys=True, separators=(",", ":")).encode()
    if fmt != "text":
        raise ValueError(f"unknown report format {fmt!r}")
    lines = [f"suite {r.suite} seed {r.seed}"]
    lines += [f"param {k}={v}" for k, v in sorted(r.params.items())]
    for c in r.checks:
        vals = " ".join(f"{k}={v}" for k, v in sorted(c.values.items()))
        lines.append(f"{'PASS' if c.passed else 'FAIL'} {c.name}" + (f" [{vals}]" if vals else ""))
    if timing and r.elapsed is not None:
        lines.append(f"elapsed {r.elapsed:.3f}s")
    lines.append(f"result {'PASS' if r.passed else 'FAIL'}")
    return ("\n".join(lines) + "\n").encode()


def parse_report(data: bytes | str) -> Report:
    d = json.loads(data)
    checks = [Check(c["name"], c["passed"], c["values"]) for c in d["checks"]]
    elapsed = float(d["elapsed"]) if "elapsed" in d else None
    return Report(d["suite"], d["params"], checks, int(d["seed"]), elapsed)
