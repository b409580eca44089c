"""
Spectrum of a factored lift from the polynomial matrix of its associated base graph

For every r in [0, m): evaluate B(ζ^r), eigendecompose, cluster the
eigenvalues, keep the part of each eigenspace satisfying the support
condition and lift it to the factored lift. The kept eigenvalues over all
r form the lift spectrum.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.basegraph.validation import require_valid
from src.config import Settings
from src.cyclic.arithmetic import element_order
from src.lift.builder import LiftBuilder
from src.models.base_graph import AdjacencyMode, CombinedBaseGraph
from src.models.polymat import PolyMatrix
from src.models.spectrum import EigenCluster, LiftedEigenvector, RBlockReport, SpectrumReport
from src.polymat.matrices import associated_matrix, evaluate_matrix
from src.spectral.conditions import bad_vertices, constrained_eigenspace
from src.spectral.eigen import eig, frobenius_scale, order_key
from src.spectral.lifting import lift_eigenvector

logger = logging.getLogger(__name__)


def cluster_eigenvalues(values: Sequence[complex], tol: float) -> List[Tuple[complex, int]]:
    """
    Group eigenvalues lying within tol of a cluster's first member

    Returns:
        (mean value, count) per cluster, ascending by real then imaginary part
    """
    clusters: List[List[complex]] = []
    for value in sorted((complex(v) for v in values), key=order_key):
        for members in clusters:
            if abs(value - members[0]) <= tol:
                members.append(value)
                break
        else:
            clusters.append([value])
    result = [(complex(np.mean(members)), len(members)) for members in clusters]
    result.sort(key=lambda item: order_key(item[0]))
    return result


def descending(values: Sequence[complex]) -> List[complex]:
    return sorted(values, key=lambda v: tuple(-x for x in order_key(v)))


class SpectralEngine:
    """
    Runs the per-r polynomial-matrix pipeline and assembles the lift spectrum

    The m blocks are independent; with settings.max_workers > 1 they run on
    a thread pool and are merged by ascending r.
    """

    def __init__(self, settings: Optional[Settings] = None):
        self.settings = settings or Settings()

    def full_spectrum(
        self,
        base: CombinedBaseGraph,
        mode: AdjacencyMode = AdjacencyMode.MULTIPLICITY,
    ) -> SpectrumReport:
        """
        Spectrum and eigenvectors of the factored lift

        Args:
            base: combined base graph; must validate
            mode: lift adjacency the lifted eigenvectors are checked against

        Returns:
            SpectrumReport; `complete` is False when the valid multiplicities
            do not add up to N
        """
        require_valid(base)
        mode = AdjacencyMode(mode)
        lift = LiftBuilder(mode).build(base)
        polynomial = associated_matrix(base)
        adjacency = lift.adjacency.astype(float)

        def run(r: int):
            return self.block(base, polynomial, r, adjacency)

        if self.settings.max_workers > 1 and base.m > 1:
            with ThreadPoolExecutor(max_workers=self.settings.max_workers) as pool:
                results = list(pool.map(run, range(base.m)))
        else:
            results = [run(r) for r in range(base.m)]

        per_r = [block for block, _ in results]
        eigvectors = [vector for _, vectors in results for vector in vectors]
        report = SpectrumReport(
            N=lift.N,
            mode=mode,
            per_r=per_r,
            spectrum=descending([v.value for v in eigvectors]),
            eigvectors=eigvectors,
        )

        if not report.complete:
            logger.warning(
                "INCOMPLETE spectrum: %d values for N=%d (valid per r: %s)",
                len(report.spectrum), report.N, report.valid_counts(),
            )
        if report.residual_failures:
            logger.warning(
                "%d lifted eigenvectors miss the residual bound against the %s-mode lift",
                report.residual_failures, mode.value,
            )
        logger.info("assembled %d eigenvalues over %d blocks", len(report.spectrum), base.m)
        return report

    def block_values(self, base: CombinedBaseGraph, matrix: np.ndarray, bad: Sequence[int]) -> List[complex]:
        """
        Eigenvalues of B(ζ^r) with multiplicity

        Bad rows of B(ζ^r) vanish, so the matrix is block triangular and its
        spectrum is that of the good block plus one zero per bad vertex.
        """
        tol = self.settings.cluster_tol * frobenius_scale(matrix)
        if bad and float(np.max(np.abs(matrix[list(bad), :]))) > tol:
            logger.warning("rows %s of B(ζ^r) do not vanish; using the full matrix", list(bad))
            return [pair.value for pair in eig(matrix, self.settings.eig_tol)]
        good = [i for i in range(base.n) if i not in set(bad)]
        values = []
        if good:
            sub = matrix[np.ix_(good, good)]
            values = [pair.value for pair in eig(sub, self.settings.eig_tol)]
        return values + [0j] * len(bad)

    def block(
        self,
        base: CombinedBaseGraph,
        polynomial: PolyMatrix,
        r: int,
        adjacency: np.ndarray,
    ) -> Tuple[RBlockReport, List[LiftedEigenvector]]:
        """Clusters, valid multiplicities and lifted eigenvectors for one r"""
        settings = self.settings
        o_r = element_order(base.m, r)
        bad = bad_vertices(base, r)
        if base.n == 0:
            return RBlockReport(r=r, o_r=o_r, bad_vertices=tuple(bad), clusters=[]), []

        matrix = evaluate_matrix(polynomial, r)
        tol = settings.cluster_tol * frobenius_scale(matrix)
        a_scale = frobenius_scale(adjacency)

        clusters: List[EigenCluster] = []
        lifted: List[LiftedEigenvector] = []
        for value, algebraic in cluster_eigenvalues(self.block_values(base, matrix, bad), tol):
            basis = constrained_eigenspace(matrix, value, bad, tol)
            valid = basis.shape[1]
            if valid > algebraic:
                logger.debug("r=%d λ=%s: nullity %d capped at multiplicity %d", r, value, valid, algebraic)
                basis = basis[:, valid - algebraic:]
                valid = algebraic
            clusters.append(EigenCluster(value=value, algebraic=algebraic, valid=valid))

            for k in range(valid):
                vector = lift_eigenvector(basis[:, k], r, base, settings.zero_tol)
                norm = float(np.linalg.norm(vector))
                residual = float(np.linalg.norm(adjacency @ vector - value * vector)) / (a_scale * norm)
                lifted.append(LiftedEigenvector(
                    value=value,
                    vector=vector,
                    source_r=r,
                    residual=residual,
                    residual_ok=residual <= settings.lift_tol,
                ))

        report = RBlockReport(r=r, o_r=o_r, bad_vertices=tuple(bad), clusters=clusters)
        logger.debug(
            "r=%d o(r)=%d bad=%s valid=%d/%d",
            r, o_r, list(bad), report.valid_count, report.algebraic_count,
        )
        return report, lifted


def full_spectrum(
    base: CombinedBaseGraph,
    mode: AdjacencyMode = AdjacencyMode.MULTIPLICITY,
    settings: Optional[Settings] = None,
) -> SpectrumReport:
    return SpectralEngine(settings).full_spectrum(base, mode)
