"""
Randomized cross-validation of the polynomial-matrix spectrum against the
direct oracle, in both adjacency modes
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from math import lcm
from pathlib import Path
from typing import List, Optional

import numpy as np

from src.basegraph.text_format import serialize_base_graph
from src.config import Settings
from src.cyclic.arithmetic import divisors
from src.errors import ConditionViolationError, EigenSolverError
from src.lift.builder import LiftBuilder
from src.models.base_graph import AdjacencyMode, CombinedBaseGraph
from src.models.verification import SweepReport, SweepTrial, TrialOutcome, Verdict
from src.spectral.engine import SpectralEngine
from src.verify.comparison import compare_multisets
from src.verify.oracles import direct_spectrum

logger = logging.getLogger(__name__)

RESTRICTIONS = ("none", "trivial", "full-lcm")
EDGE_PROBABILITY = 0.5


def random_base_graph(
    rng: np.random.Generator,
    max_m: int,
    max_n: int,
    restriction: str = "none",
) -> CombinedBaseGraph:
    """
    Random graph-mode base over Z_m with 2 <= m <= max_m and 1..max_n vertices

    restriction:
        none: indices drawn uniformly from the divisors of m
        trivial: every index equals m
        full-lcm: only edges whose endpoint indices have lcm m
    """
    if restriction not in RESTRICTIONS:
        raise ValueError(f"unknown restriction {restriction!r}; expected one of {', '.join(RESTRICTIONS)}")
    m = int(rng.integers(2, max(2, max_m) + 1))
    n = int(rng.integers(1, max(1, max_n) + 1))
    choices = divisors(m)
    if restriction == "trivial":
        indices = [m] * n
    else:
        indices = [int(rng.choice(choices)) for _ in range(n)]

    names = [f"v{i}" for i in range(n)]
    edges = []
    for i in range(n):
        for j in range(i, n):
            if restriction == "full-lcm" and lcm(indices[i], indices[j]) != m:
                continue
            if rng.random() < EDGE_PROBABILITY:
                edges.append((names[i], names[j], int(rng.integers(0, m))))
    return CombinedBaseGraph.from_edges(m=m, vertices=list(zip(names, indices)), edges=edges)


class SweepRunner:
    """
    Runs random trials and archives every failing base as a .cvg file

    Trial t draws from numpy.random.default_rng([seed, t]), so a trial is
    reproducible on its own and the report does not depend on execution order.
    """

    def __init__(self, settings: Optional[Settings] = None, corpus_dir: Optional[str] = None):
        self.settings = settings or Settings()
        self.corpus_dir = Path(corpus_dir or self.settings.corpus_dir)
        self.engine = SpectralEngine(self.settings.model_copy(update={"max_workers": 1}))

    def run(
        self,
        seed: int,
        trials: int,
        max_m: int = 12,
        max_n: int = 5,
        restriction: str = "none",
    ) -> SweepReport:
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}")
        if restriction not in RESTRICTIONS:
            raise ValueError(f"unknown restriction {restriction!r}; expected one of {', '.join(RESTRICTIONS)}")

        def run_one(trial_id: int) -> SweepTrial:
            return self.trial(seed, trial_id, max_m, max_n, restriction)

        if self.settings.max_workers > 1:
            with ThreadPoolExecutor(max_workers=self.settings.max_workers) as pool:
                results = list(pool.map(run_one, range(trials)))
        else:
            results = [run_one(t) for t in range(trials)]
        results.sort(key=lambda t: t.trial_id)

        report = SweepReport(
            seed=seed, trials=trials, max_m=max_m, max_n=max_n, restriction=restriction, results=results,
        )
        logger.info(
            "sweep seed=%d: multiplicity %d/%d, simple %d/%d, modes agree %d/%d",
            seed, report.multiplicity_passes, trials, report.simple_passes, trials, report.mode_agreements, trials,
        )
        return report

    def trial(self, seed: int, trial_id: int, max_m: int, max_n: int, restriction: str) -> SweepTrial:
        rng = np.random.default_rng([seed, trial_id])
        base = random_base_graph(rng, max_m, max_n, restriction)
        multiplicity_lift = LiftBuilder(AdjacencyMode.MULTIPLICITY).build(base)
        simple_lift = LiftBuilder(AdjacencyMode.SIMPLE).build(base)
        return SweepTrial(
            trial_id=trial_id,
            m=base.m,
            indices=base.indices,
            arc_count=len(base.arcs),
            N=multiplicity_lift.N,
            modes_agree=bool(np.array_equal(multiplicity_lift.adjacency, simple_lift.adjacency)),
            multiplicity=self.outcome(base, AdjacencyMode.MULTIPLICITY, seed, trial_id),
            simple=self.outcome(base, AdjacencyMode.SIMPLE, seed, trial_id),
        )

    def outcome(self, base: CombinedBaseGraph, mode: AdjacencyMode, seed: int, trial_id: int) -> TrialOutcome:
        """Polymat spectrum vs direct oracle for one mode; failures become data"""
        try:
            report = self.engine.full_spectrum(base, mode)
            direct = direct_spectrum(LiftBuilder(mode).build(base))
        except (EigenSolverError, ConditionViolationError) as exc:
            archived = self.archive(base, mode, seed, trial_id, f"numerical failure: {exc}")
            return TrialOutcome(
                complete=False, spectrum_size=0, max_gap=0.0, verdict=Verdict.FAIL,
                archived=archived, error=str(exc),
            )

        comparison = compare_multisets(report.spectrum, direct, self.settings.compare_tol)
        passed = report.complete and comparison.passed
        archived = None
        if not passed:
            archived = self.archive(
                base, mode, seed, trial_id,
                f"{len(report.spectrum)} of N={report.N} eigenvalues, max gap {comparison.max_gap:.3e}",
            )
        return TrialOutcome(
            complete=report.complete,
            spectrum_size=len(report.spectrum),
            max_gap=float(f"{comparison.max_gap:.3e}"),
            verdict=Verdict.PASS if passed else Verdict.FAIL,
            archived=archived,
        )

    def archive(self, base: CombinedBaseGraph, mode: AdjacencyMode, seed: int, trial_id: int, reason: str) -> str:
        self.corpus_dir.mkdir(parents=True, exist_ok=True)
        path = self.corpus_dir / f"sweep-{seed}-{trial_id}-{mode.value}.cvg"
        comment = f"sweep seed={seed} trial={trial_id} mode={mode.value}\n{reason}"
        path.write_text(serialize_base_graph(base, comment=comment), encoding="utf-8")
        logger.warning("archived %s-mode counterexample %s (%s)", mode.value, path, reason)
        return str(path)


def random_sweep(
    seed: int,
    trials: int,
    max_m: int = 12,
    max_n: int = 5,
    restriction: str = "none",
    corpus_dir: Optional[str] = None,
    settings: Optional[Settings] = None,
) -> SweepReport:
    return SweepRunner(settings, corpus_dir).run(seed, trials, max_m, max_n, restriction)
