"""
Compact rendering of group ring elements and polynomial matrices
"""
from typing import List, Optional

from src.models.group import GroupRingElement
from src.models.polymat import PolyMatrix


def display_exponent(e: int, m: int) -> int:
    """Exponents above m/2 are shown as negative powers"""
    return e - m if 2 * e > m else e


def format_laurent(p: GroupRingElement) -> str:
    """Render e.g. 1+z^2+z^-2; terms by ascending stored exponent"""
    parts: List[str] = []
    for e, c in p.terms():
        shown = display_exponent(e, p.m)
        if shown == 0:
            monomial = ""
        elif shown == 1:
            monomial = "z"
        else:
            monomial = f"z^{shown}"
        if not monomial:
            parts.append(str(c))
        elif c == 1:
            parts.append(monomial)
        else:
            parts.append(f"{c}{monomial}")
    return "+".join(parts) if parts else "0"


def format_poly_matrix(matrix: PolyMatrix, names: Optional[List[str]] = None) -> str:
    """Aligned text grid of a polynomial matrix, optional row labels"""
    cells = [[format_laurent(entry) for entry in row] for row in matrix.entries]
    if not cells:
        return ""
    width = max(len(cell) for row in cells for cell in row)
    label_width = max((len(name) for name in names), default=0) if names else 0
    lines = []
    for i, row in enumerate(cells):
        label = f"{names[i]:<{label_width}} | " if names else ""
        lines.append(label + "  ".join(cell.rjust(width) for cell in row))
    return "\n".join(lines)
