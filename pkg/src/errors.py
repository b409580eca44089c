"""
Exception hierarchy for the factored-lift toolkit
"""
from typing import List, Optional


class FliftError(Exception):
    """Root of every error raised by this package"""


class GroupArgumentError(FliftError, ValueError):
    """Precondition violation in cyclic group arithmetic"""


class ConfigurationError(FliftError, ValueError):
    """Malformed setting or environment variable"""


class BaseGraphParseError(FliftError, ValueError):
    """Base graph text could not be parsed"""

    def __init__(self, message: str, line_no: Optional[int] = None):
        self.line_no = line_no
        self.reason = message
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(f"{prefix}{message}")


class InvalidBaseGraphError(FliftError, ValueError):
    """Base graph failed validation; carries the violation report"""

    def __init__(self, violations: List["object"]):
        self.violations = list(violations)
        details = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid combined base graph: {details}")


class ConditionViolationError(FliftError, ValueError):
    """Eigenvector lifting refused because the support condition fails"""

    def __init__(self, coordinate: int, magnitude: float, r: int):
        self.coordinate = coordinate
        self.magnitude = magnitude
        self.r = r
        super().__init__(
            f"coordinate {coordinate} has |f_i| = {magnitude:.3e} but o({r}) "
            f"does not divide its fibre size"
        )


class EigenSolverError(FliftError, RuntimeError):
    """Eigendecomposition did not converge or failed its residual bound"""

    def __init__(self, shape, detail: str):
        self.shape = tuple(shape)
        super().__init__(f"eigensolver failed on {self.shape[0]}x{self.shape[1]} matrix: {detail}")


class DirectedLiftError(FliftError, ValueError):
    """Undirected quantity requested for a digraph-mode lift"""
