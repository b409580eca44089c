"""
Structural and spectral checks bundled by `flift verify`
"""
import logging
from typing import List, Optional, Sequence

import numpy as np

from src.config import Settings
from src.lift.builder import LiftBuilder, permutation_matrix, translation_map
from src.models.base_graph import AdjacencyMode, CombinedBaseGraph
from src.models.lift import FactoredLift
from src.models.spectrum import SpectrumReport
from src.models.verification import CheckResult, ComparisonReport, VerificationReport
from src.spectral.engine import SpectralEngine
from src.verify.comparison import compare_multisets
from src.verify.oracles import direct_spectrum

logger = logging.getLogger(__name__)


def trace_identity(lift: FactoredLift, spectrum: Sequence[complex], tol: float = 1e-6) -> CheckResult:
    """Σλ equals trace(A)"""
    expected = float(np.trace(lift.adjacency))
    total = complex(sum(spectrum)) if spectrum else 0j
    gap = abs(total - expected)
    return CheckResult(
        name="trace",
        passed=gap <= tol * max(1.0, abs(expected)),
        detail=f"sum={total.real:.6g} trace={expected:.6g} gap={gap:.2e}",
    )


def frobenius_identity(lift: FactoredLift, spectrum: Sequence[complex], tol: float = 1e-6) -> CheckResult:
    """
    Σλ² equals trace(A²)

    For a symmetric adjacency that is the sum of squared entries.
    """
    a = lift.adjacency.astype(np.int64)
    expected = float(np.trace(a @ a))
    total = complex(sum(v * v for v in spectrum)) if spectrum else 0j
    gap = abs(total - expected)
    return CheckResult(
        name="frobenius",
        passed=gap <= tol * max(1.0, abs(expected)),
        detail=f"sum_sq={total.real:.6g} trace_A2={expected:.6g} gap={gap:.2e}",
    )


def automorphism_check(lift: FactoredLift) -> CheckResult:
    """
    Translation by every g ∈ Z_m fixes the adjacency and g ↦ P_g is a
    homomorphism (exact integer comparisons)
    """
    m = lift.base.m
    a = lift.adjacency
    images = [translation_map(lift, g) for g in range(m)]
    for g, image in enumerate(images):
        p = permutation_matrix(image)
        if not np.array_equal(p @ a @ p.T, a):
            return CheckResult(name="automorphisms", passed=False, detail=f"translation by {g} moves an arc")
    for g in range(m):
        for h in range(m):
            composed = [images[g][images[h][x]] for x in range(lift.N)]
            if composed != images[(g + h) % m]:
                return CheckResult(
                    name="automorphisms", passed=False, detail=f"P_{g}·P_{h} differs from P_{(g + h) % m}",
                )
    return CheckResult(name="automorphisms", passed=True, detail=f"{m} translations, homomorphism holds")


def residual_check(report: SpectrumReport, lift_tol: float) -> CheckResult:
    worst = max((v.residual for v in report.eigvectors), default=0.0)
    return CheckResult(
        name="residuals",
        passed=report.residual_failures == 0,
        detail=f"{len(report.eigvectors)} lifted eigenvectors, worst residual {worst:.2e} (bound {lift_tol:.0e})",
    )


def completeness_check(report: SpectrumReport) -> CheckResult:
    return CheckResult(
        name="completeness",
        passed=report.complete,
        detail=f"{len(report.spectrum)} of N={report.N} eigenvalues, valid per r {report.valid_counts()}",
    )


def comparison_check(comparison: ComparisonReport) -> CheckResult:
    return CheckResult(
        name="oracle-match",
        passed=comparison.passed,
        detail=(
            f"{len(comparison.pairs)} matched, max gap {comparison.max_gap:.2e}, "
            f"unmatched {len(comparison.unmatched_left)}/{len(comparison.unmatched_right)}"
        ),
    )


class VerificationSuite:
    """
    Full verification of one base graph in one adjacency mode

    Runs the polynomial-matrix pipeline and the direct oracle, then checks
    their agreement, completeness, lifted eigenvector residuals, the
    translation automorphisms and the trace identities.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()
        self.engine = SpectralEngine(self.settings)

    def run(
        self,
        base: CombinedBaseGraph,
        mode: AdjacencyMode = AdjacencyMode.MULTIPLICITY,
        label: str = "base",
    ) -> VerificationReport:
        mode = AdjacencyMode(mode)
        lift = LiftBuilder(mode).build(base)
        report = self.engine.full_spectrum(base, mode)
        direct = direct_spectrum(lift)
        comparison = compare_multisets(
            report.spectrum, direct, self.settings.compare_tol, left_label="polymat", right_label="direct",
        )
        checks: List[CheckResult] = [
            comparison_check(comparison),
            completeness_check(report),
            residual_check(report, self.settings.lift_tol),
            automorphism_check(lift),
            trace_identity(lift, report.spectrum, self.settings.compare_tol),
            frobenius_identity(lift, report.spectrum, self.settings.compare_tol),
        ]
        verification = VerificationReport(label=label, checks=checks)
        failed = [check.name for check in checks if not check.passed]
        if failed:
            logger.warning("verification of %s (%s mode) failed: %s", label, mode.value, ", ".join(failed))
        return verification
