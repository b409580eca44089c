"""
Per-r eigenvalue table of B(ζ^r) with support-rejected entries starred
"""
from typing import List, Optional, Tuple

from src.basegraph.validation import require_valid
from src.config import Settings
from src.models.base_graph import CombinedBaseGraph
from src.models.spectrum import RBlockReport, SpectrumReport
from src.spectral.engine import SpectralEngine
from src.spectral.rendering import format_value

TableRow = Tuple[str, List[str]]


def block_entries(block: RBlockReport) -> List[str]:
    """Eigenvalues descending; within a cluster the valid copies come first"""
    entries = []
    clusters = sorted(block.clusters, key=lambda c: (-round(c.value.real, 9), -round(c.value.imag, 9)))
    for cluster in clusters:
        text = format_value(cluster.value)
        entries.extend([text] * cluster.valid)
        entries.extend([text + "*"] * cluster.rejected)
    return entries


def rows_from_report(report: SpectrumReport) -> List[TableRow]:
    """
    (label, entries) per row; r and m - r share a row when their entries agree

    Labels read `spec(B(ζ^1))=spec(B(ζ^5))` for merged rows.
    """
    entries = {block.r: block_entries(block) for block in report.per_r}
    m = len(report.per_r)
    rows = []
    consumed = set()
    for r in range(m):
        if r in consumed:
            continue
        consumed.add(r)
        label = f"spec(B(ζ^{r}))"
        partner = (m - r) % m
        if partner > r and entries[partner] == entries[r]:
            consumed.add(partner)
            label += f"=spec(B(ζ^{partner}))"
        rows.append((label, entries[r]))
    return rows


def render_rows(rows: List[TableRow]) -> str:
    if not rows:
        return ""
    width = max(len(label) for label, _ in rows)
    return "\n".join(f"{label.ljust(width)} : {', '.join(values)}" for label, values in rows)


def table_rows(base: CombinedBaseGraph, settings: Optional[Settings] = None) -> List[TableRow]:
    require_valid(base)
    return rows_from_report(SpectralEngine(settings).full_spectrum(base))


def table_report(base: CombinedBaseGraph, settings: Optional[Settings] = None) -> str:
    """Text table, one line per row, labels padded to a common width"""
    return render_rows(table_rows(base, settings))
