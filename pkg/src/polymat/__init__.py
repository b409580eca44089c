"""Polynomial matrices B0(z), B(z) and their evaluation at roots of unity"""
from src.polymat.matrices import (
    associated_matrix,
    evaluate_matrix,
    factored_associated_matrix,
    ordinary_matrix,
    vanishing_rows,
    vertex_weights,
)
from src.polymat.rendering import format_laurent, format_poly_matrix

__all__ = [
    "associated_matrix",
    "evaluate_matrix",
    "factored_associated_matrix",
    "format_laurent",
    "format_poly_matrix",
    "ordinary_matrix",
    "vanishing_rows",
    "vertex_weights",
]
