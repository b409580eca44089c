"""
Tests for cyclic group arithmetic
"""
import cmath
import math

import pytest

from src.cyclic.arithmetic import (
    brute_force_cosets_hit,
    brute_force_intersection_size,
    coset_elements,
    coset_intersection_size,
    cosets_hit,
    divisors,
    element_order,
    powers_of_root,
    ring_add,
    ring_evaluate,
    ring_multiply,
    ring_shift,
    root_of_unity,
    subgroup_elements,
    subgroup_weight,
)
from src.errors import GroupArgumentError
from src.models.group import GroupRingElement


def test_subgroup_elements():
    """Test the subgroups of Z_12 by index"""
    assert subgroup_elements(12, 3) == [0, 3, 6, 9]
    assert subgroup_elements(12, 12) == list(range(12))
    assert subgroup_elements(12, 1) == [0]
    assert coset_elements(12, 4, 1) == [1, 5, 9]


def test_subgroup_elements_rejects_non_divisor():
    """Test precondition on the index"""
    with pytest.raises(GroupArgumentError):
        subgroup_elements(12, 5)
    with pytest.raises(ValueError):
        subgroup_elements(0, 1)


def test_element_order():
    """Test o(r) = m / gcd(m, r) with o(0) = 1"""
    assert element_order(6, 0) == 1
    assert element_order(6, 1) == 6
    assert element_order(6, 2) == 3
    assert element_order(6, 3) == 2
    assert element_order(6, 4) == 3


def test_coset_intersection_examples():
    """Test the closed form on small cosets of Z_12"""
    assert coset_intersection_size(12, 2, 0, 3, 0) == 2
    assert coset_intersection_size(12, 4, 1, 6, 2) == 0
    assert coset_intersection_size(12, 12, 5, 12, 5) == 1
    assert coset_intersection_size(12, 1, 0, 1, 0) == 12


def test_coset_closed_forms_match_brute_force():
    """Test intersection sizes and hit cosets exhaustively for every m <= 24"""
    mismatches = []
    for m in range(1, 25):
        ds = divisors(m)
        for d1 in ds:
            for d2 in ds:
                for j1 in range(d1):
                    for j2 in range(d2):
                        if coset_intersection_size(m, d1, j1, d2, j2) != brute_force_intersection_size(m, d1, j1, d2, j2):
                            mismatches.append(("intersection", m, d1, j1, d2, j2))
                    for g in range(m):
                        if cosets_hit(m, d1, j1, g, d2) != brute_force_cosets_hit(m, d1, j1, g, d2):
                            mismatches.append(("hit", m, d1, j1, g, d2))
    assert mismatches == []


def test_cosets_hit_example():
    """Test H = 1 + 3·Z_6 moved by 1 against the cosets of 2·Z_6"""
    # H + 1 = {2, 5} meets both cosets of 2·Z_6
    assert cosets_hit(6, 3, 1, 1, 2) == [0, 1]
    assert cosets_hit(6, 6, 0, 1, 2) == [1]


def test_root_of_unity_exact_quarter_turns():
    """Test that ±1 and ±i come out exact"""
    assert root_of_unity(4, 1) == 1j
    assert root_of_unity(8, 4) == -1
    assert root_of_unity(12, 9) == -1j
    assert root_of_unity(5, 0) == 1


def test_root_of_unity_matches_exponential():
    """Test a generic root against cmath"""
    assert abs(root_of_unity(7, 3) - cmath.exp(2j * math.pi * 3 / 7)) < 1e-15


def test_root_of_unity_rejects_unreduced_exponent():
    """Test the exponent range check"""
    with pytest.raises(GroupArgumentError):
        root_of_unity(6, 6)


def test_powers_of_root():
    """Test the power vector of ζ^2 in Z_4"""
    assert list(powers_of_root(4, 2)) == [1, -1, 1, -1]


def test_ring_evaluate():
    """Test evaluating the subgroup weight of 2·Z_6"""
    weight = subgroup_weight(6, 2)

    assert weight.coeffs == (1, 0, 1, 0, 1, 0)
    assert abs(ring_evaluate(weight, 6, 0) - 3) < 1e-12
    assert abs(ring_evaluate(weight, 6, 1)) < 1e-12
    assert abs(ring_evaluate(weight, 6, 3) - 3) < 1e-12


def test_ring_add_and_shift():
    """Test addition and multiplication by z^g"""
    p = GroupRingElement.from_exponents(5, [0, 4])

    assert ring_add(p, p).coeffs == (2, 0, 0, 0, 2)
    assert ring_shift(p, 1).coeffs == (1, 1, 0, 0, 0)
    assert ring_shift(p, -1).coeffs == (0, 0, 0, 1, 1)


def test_ring_multiply_is_cyclic_convolution():
    """Test (1 + z^3)(z + z^2) over Z_4"""
    p = GroupRingElement.from_exponents(4, [0, 3])
    q = GroupRingElement.from_exponents(4, [1, 2])

    assert ring_multiply(p, q).coeffs == (1, 2, 1, 0)


def test_ring_operations_reject_mixed_orders():
    """Test that elements over different groups do not combine"""
    with pytest.raises(GroupArgumentError):
        ring_add(GroupRingElement.zero(3), GroupRingElement.zero(4))


def test_intersections_partition_the_source_coset():
    """Test that the cosets of d_v·Z_m split H into parts summing to m / d_u"""
    for m in range(1, 25):
        ds = divisors(m)
        for d_u in ds:
            for d_v in ds:
                for j in range(d_u):
                    sizes = [coset_intersection_size(m, d_u, j, d_v, c) for c in range(d_v)]
                    assert sum(sizes) == m // d_u


def test_cosets_hit_are_the_nonempty_intersections():
    """Test that K is hit by H + g exactly when |(H + g) ∩ K| > 0"""
    for m in (6, 8, 12):
        ds = divisors(m)
        for d_u in ds:
            for d_v in ds:
                for j in range(d_u):
                    for g in range(m):
                        moved = (j + g) % d_u
                        nonempty = [c for c in range(d_v) if coset_intersection_size(m, d_u, moved, d_v, c) > 0]
                        assert cosets_hit(m, d_u, j, g, d_v) == nonempty


def test_ring_evaluate_examples():
    """Test 1 + z^2 + z^4 at ζ^2 in Z_6 and z + z^-1 at i in Z_4"""
    assert abs(ring_evaluate(GroupRingElement.from_exponents(6, [0, 2, 4]), 6, 2)) < 1e-12
    assert abs(ring_evaluate(GroupRingElement.from_exponents(4, [1, 3]), 4, 1)) < 1e-15


def test_shift_multiplies_value_by_root():
    """Test that evaluating p·z^g gives ζ^{rg} times the value of p"""
    p = GroupRingElement(m=7, coeffs=(2, 0, 1, 0, 0, 3, 1))
    for g in range(7):
        for r in range(7):
            expected = root_of_unity(7, (r * g) % 7) * ring_evaluate(p, 7, r)
            assert abs(ring_evaluate(ring_shift(p, g), 7, r) - expected) < 1e-12


def test_ring_multiply_matches_definition():
    """Test the product against the double sum over exponent pairs"""
    p = GroupRingElement(m=6, coeffs=(1, 0, 2, 0, 0, 3))
    q = GroupRingElement(m=6, coeffs=(0, 4, 1, 0, 1, 0))
    expected = [0] * 6
    for a, x in enumerate(p.coeffs):
        for b, y in enumerate(q.coeffs):
            expected[(a + b) % 6] += x * y

    assert ring_multiply(p, q).coeffs == tuple(expected)
    assert ring_multiply(GroupRingElement.monomial(1, 0, 2), GroupRingElement.monomial(1, 0, 3)).coeffs == (6,)
