"""Polynomial-matrix spectra of factored lifts"""
from src.spectral.conditions import bad_vertices, constrained_eigenspace, valid_multiplicity
from src.spectral.eigen import eig
from src.spectral.engine import SpectralEngine, cluster_eigenvalues, full_spectrum
from src.spectral.lifting import lift_eigenvector
from src.spectral.rendering import format_spectrum, format_value

__all__ = [
    "SpectralEngine",
    "bad_vertices",
    "cluster_eigenvalues",
    "constrained_eigenspace",
    "eig",
    "format_spectrum",
    "format_value",
    "full_spectrum",
    "lift_eigenvector",
    "valid_multiplicity",
]
