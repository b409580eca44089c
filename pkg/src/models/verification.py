"""
Comparison, verification and sweep report models
"""
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.models.spectrum import complex_pair


class Verdict(str, Enum):
    """Outcome of a check"""
    PASS = "pass"
    FAIL = "fail"


class MatchedPair(BaseModel):
    """Two values paired by the multiset comparison"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left: complex
    right: complex
    gap: float = Field(..., ge=0.0)


class ComparisonReport(BaseModel):
    """Multiset match between two spectra"""
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    left_label: str
    right_label: str
    pairs: List[MatchedPair] = Field(default_factory=list)
    max_gap: float = 0.0
    unmatched_left: List[complex] = Field(default_factory=list)
    unmatched_right: List[complex] = Field(default_factory=list)
    tolerance: float
    verdict: Verdict

    @property
    def passed(self) -> bool:
        return self.verdict == Verdict.PASS

    def to_json_document(self) -> Dict[str, Any]:
        return {
            "left": self.left_label,
            "right": self.right_label,
            "matched": len(self.pairs),
            "max_gap": float(f"{self.max_gap:.3e}"),
            "unmatched_left": [complex_pair(v) for v in self.unmatched_left],
            "unmatched_right": [complex_pair(v) for v in self.unmatched_right],
            "tolerance": self.tolerance,
            "verdict": self.verdict.value,
        }


class CheckResult(BaseModel):
    """A named pass/fail check with a short detail line"""
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    detail: str = ""


class VerificationReport(BaseModel):
    """Everything `verify` checks for one base graph"""
    model_config = ConfigDict(frozen=True)

    label: str
    checks: List[CheckResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_json_document(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "passed": self.passed,
            "checks": [check.model_dump() for check in self.checks],
        }


class TrialOutcome(BaseModel):
    """Result of one adjacency mode in one sweep trial"""
    model_config = ConfigDict(frozen=True)

    complete: bool
    spectrum_size: int
    max_gap: float
    verdict: Verdict
    archived: Optional[str] = None
    error: Optional[str] = None


class SweepTrial(BaseModel):
    """One random base and its outcomes in both modes"""
    model_config = ConfigDict(frozen=True)

    trial_id: int
    m: int
    indices: List[int]
    arc_count: int
    N: int
    modes_agree: bool
    multiplicity: TrialOutcome
    simple: TrialOutcome


class SweepReport(BaseModel):
    """Aggregated randomized cross-validation results"""
    model_config = ConfigDict(frozen=True)

    seed: int
    trials: int
    max_m: int
    max_n: int
    restriction: str
    results: List[SweepTrial] = Field(default_factory=list)

    @property
    def multiplicity_passes(self) -> int:
        return sum(1 for t in self.results if t.multiplicity.verdict == Verdict.PASS)

    @property
    def simple_passes(self) -> int:
        return sum(1 for t in self.results if t.simple.verdict == Verdict.PASS)

    @property
    def mode_agreements(self) -> int:
        return sum(1 for t in self.results if t.modes_agree)

    def to_json_document(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "max_m": self.max_m,
            "max_n": self.max_n,
            "restriction": self.restriction,
            "multiplicity_pass": self.multiplicity_passes,
            "simple_pass": self.simple_passes,
            "modes_agree": self.mode_agreements,
            "failures": [
                t.model_dump(mode="json")
                for t in self.results
                if t.multiplicity.verdict != Verdict.PASS or t.simple.verdict != Verdict.PASS
            ],
        }
