"""
Text rendering of eigenvalues and spectrum multisets
"""
from typing import Sequence

from src.spectral.engine import cluster_eigenvalues, descending

INTEGER_TOL = 1e-8


def format_real(x: float, tol: float = INTEGER_TOL) -> str:
    nearest = round(x)
    if abs(x - nearest) <= tol:
        return str(int(nearest))
    return f"{x:.6g}"


def format_value(value: complex, tol: float = INTEGER_TOL) -> str:
    """Integers print bare, reals with 6 significant digits, else a+bi"""
    if abs(value.imag) <= tol:
        return format_real(value.real, tol)
    sign = "+" if value.imag >= 0 else "-"
    return f"{format_real(value.real, tol)}{sign}{format_real(abs(value.imag), tol)}i"


def format_spectrum(values: Sequence[complex], tol: float = INTEGER_TOL) -> str:
    """Multiset rendering {λ^[mult], ...} in descending order"""
    clusters = cluster_eigenvalues(values, tol)
    ordered = descending([value for value, _ in clusters])
    counts = {value: count for value, count in clusters}
    return "{" + ", ".join(f"{format_value(v, tol)}^[{counts[v]}]" for v in ordered) + "}"
