"""
Exact arithmetic in Z_m: subgroups, cosets, roots of unity and the group ring

Subgroups are keyed by their index d; in Z_m the subgroup of index d is
d·Z_m = {0, d, ..., m-d}. Cosets are keyed by their least nonnegative rep.
"""
import cmath
import math
from typing import List

import numpy as np

from src.errors import GroupArgumentError
from src.models.group import GroupRingElement

# exact values of e^{2πi·k/4}
_QUARTER_TURNS = (1 + 0j, 0 + 1j, -1 + 0j, 0 - 1j)


def _require_order(m: int) -> None:
    if m < 1:
        raise GroupArgumentError(f"group order must be positive, got m={m}")


def _require_index(m: int, d: int) -> None:
    _require_order(m)
    if d < 1 or m % d != 0:
        raise GroupArgumentError(f"index d={d} does not divide group order m={m}")


def _require_rep(d: int, j: int, label: str = "rep") -> None:
    if not 0 <= j < d:
        raise GroupArgumentError(f"{label} {j} outside [0, {d})")


def divisors(m: int) -> List[int]:
    """Ascending divisors of m"""
    _require_order(m)
    return [d for d in range(1, m + 1) if m % d == 0]


def element_order(m: int, r: int) -> int:
    """Order o(r) = m / gcd(m, r) of r in Z_m, with gcd(m, 0) = m"""
    _require_order(m)
    return m // math.gcd(m, r % m)


def subgroup_elements(m: int, d: int) -> List[int]:
    """Sorted elements of the index-d subgroup of Z_m"""
    _require_index(m, d)
    return list(range(0, m, d))


def coset_elements(m: int, d: int, j: int) -> List[int]:
    """Sorted elements of the coset j + d·Z_m"""
    _require_index(m, d)
    _require_rep(d, j)
    return list(range(j, m, d))


def coset_intersection_size(m: int, d1: int, j1: int, d2: int, j2: int) -> int:
    """
    |(j1 + d1·Z_m) ∩ (j2 + d2·Z_m)|

    Nonempty exactly when j1 ≡ j2 (mod gcd(d1, d2)); the intersection is then
    a coset of lcm(d1, d2)·Z_m, which has m / lcm(d1, d2) elements.
    """
    _require_index(m, d1)
    _require_index(m, d2)
    _require_rep(d1, j1, "rep j1")
    _require_rep(d2, j2, "rep j2")
    if (j1 - j2) % math.gcd(d1, d2) != 0:
        return 0
    return m // math.lcm(d1, d2)


def brute_force_intersection_size(m: int, d1: int, j1: int, d2: int, j2: int) -> int:
    """Element-by-element oracle for coset_intersection_size"""
    return len(set(coset_elements(m, d1, j1)) & set(coset_elements(m, d2, j2)))


def cosets_hit(m: int, d_u: int, j: int, g: int, d_v: int) -> List[int]:
    """
    Reps c in [0, d_v) of the cosets K = c + d_v·Z_m meeting H + g

    H is the coset j + d_u·Z_m. K is hit iff c ≡ j + g (mod gcd(d_u, d_v)).
    """
    _require_index(m, d_u)
    _require_index(m, d_v)
    _require_rep(d_u, j)
    _require_rep(m, g, "voltage")
    step = math.gcd(d_u, d_v)
    return list(range((j + g) % step, d_v, step))


def brute_force_cosets_hit(m: int, d_u: int, j: int, g: int, d_v: int) -> List[int]:
    """Oracle for cosets_hit: reduce every element of H + g mod d_v"""
    return sorted({(h + g) % m % d_v for h in coset_elements(m, d_u, j)})


def root_of_unity(m: int, r: int) -> complex:
    """ζ^r with ζ = e^{2πi/m}; quarter turns are returned exactly"""
    _require_order(m)
    _require_rep(m, r, "exponent")
    if (4 * r) % m == 0:
        return _QUARTER_TURNS[(4 * r) // m]
    return cmath.exp(2j * math.pi * r / m)


def powers_of_root(m: int, r: int) -> np.ndarray:
    """Vector (ζ^{r·e})_{e in [0, m)}, each entry reduced before evaluation"""
    _require_order(m)
    return np.array([root_of_unity(m, (r * e) % m) for e in range(m)], dtype=complex)


def ring_evaluate(p: GroupRingElement, m: int, r: int) -> complex:
    """Σ_e coeffs[e]·ζ^{r·e}"""
    if p.m != m:
        raise GroupArgumentError(f"element over Z_{p.m} evaluated in Z_{m}")
    _require_rep(m, r, "exponent")
    return complex(np.dot(np.asarray(p.coeffs, dtype=float), powers_of_root(m, r)))


def _require_same_order(p: GroupRingElement, q: GroupRingElement) -> None:
    if p.m != q.m:
        raise GroupArgumentError(f"group ring orders differ: Z_{p.m} vs Z_{q.m}")


def ring_add(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    _require_same_order(p, q)
    return GroupRingElement(m=p.m, coeffs=tuple(a + b for a, b in zip(p.coeffs, q.coeffs)))


def ring_shift(p: GroupRingElement, g: int) -> GroupRingElement:
    """Multiply by z^g (cyclic shift of the coefficient vector)"""
    m = p.m
    coeffs = [0] * m
    for e, c in enumerate(p.coeffs):
        coeffs[(e + g) % m] += c
    return GroupRingElement(m=m, coeffs=tuple(coeffs))


def ring_multiply(p: GroupRingElement, q: GroupRingElement) -> GroupRingElement:
    """Cyclic convolution of coefficient vectors"""
    _require_same_order(p, q)
    m = p.m
    full = np.convolve(np.asarray(p.coeffs, dtype=np.int64), np.asarray(q.coeffs, dtype=np.int64))
    folded = full[:m].copy()
    folded[: m - 1] += full[m:]
    return GroupRingElement(m=m, coeffs=tuple(int(c) for c in folded))


def subgroup_weight(m: int, d: int) -> GroupRingElement:
    """Σ_{h ∈ d·Z_m} z^h"""
    return GroupRingElement.from_exponents(m, subgroup_elements(m, d))
