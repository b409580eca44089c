"""Cyclic group arithmetic"""
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

__all__ = [
    "brute_force_cosets_hit",
    "brute_force_intersection_size",
    "coset_elements",
    "coset_intersection_size",
    "cosets_hit",
    "divisors",
    "element_order",
    "powers_of_root",
    "ring_add",
    "ring_evaluate",
    "ring_multiply",
    "ring_shift",
    "root_of_unity",
    "subgroup_elements",
    "subgroup_weight",
]
