"""Law-check results and deterministic report containers.

Every sampled verification produces one :class:`LawResult` per law; a
:class:`Report` is an ordered collection of those plus free-form extras.
Reports serialize to JSON with sorted keys so that identical inputs give
byte-identical output.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class LawResult:
    law_id: str
    statement: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "statement": self.statement,
            "samples": self.samples,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass
class Report:
    name: str
    results: list[LawResult] = field(default_factory=list)
    extras: dict = field(default_factory=dict)

    def add(self, law_id, statement, samples, max_residual, tolerance) -> LawResult:
        res = LawResult(
            law_id=law_id,
            statement=statement,
            samples=samples,
            max_residual=float(max_residual),
            tolerance=float(tolerance),
            passed=bool(max_residual <= tolerance),
        )
        self.results.append(res)
        return res

    def add_flag(self, law_id, statement, passed, samples=0) -> LawResult:
        """Record a boolean law (residual 0/1 against tolerance 0.5)."""
        res = LawResult(
            law_id=law_id,
            statement=statement,
            samples=samples,
            max_residual=0.0 if passed else 1.0,
            tolerance=0.5,
            passed=bool(passed),
        )
        self.results.append(res)
        return res

    def merge(self, other: "Report", prefix: str = "") -> None:
        for res in other.results:
            self.results.append(
                LawResult(
                    law_id=prefix + res.law_id,
                    statement=res.statement,
                    samples=res.samples,
                    max_residual=res.max_residual,
                    tolerance=res.tolerance,
                    passed=res.passed,
                )
            )
        for key, value in other.extras.items():
            self.extras[prefix + key] = value

    @property
    def overall_pass(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "overall_pass": self.overall_pass,
            "results": [r.to_dict() for r in self.results],
            "extras": self.extras,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def summary_lines(self) -> list[str]:
        lines = []
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(
                f"[{status}] {r.law_id}: {r.statement} "
                f"(samples={r.samples}, max_residual={r.max_residual:.3e}, tol={r.tolerance:.1e})"
            )
        return lines
