"""
Cyclic group, subgroup, coset and group-ring models
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class CyclicGroup(BaseModel):
    """The cyclic group Z_m"""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Group order")

    def elements(self) -> List[int]:
        return list(range(self.m))

    def subgroup(self, d: int) -> "Subgroup":
        """Subgroup of index d"""
        return Subgroup(m=self.m, d=d)


class Subgroup(BaseModel):
    """Subgroup of Z_m keyed by its index d (the unique one of order m/d)"""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1, description="Group order")
    d: int = Field(..., ge=1, description="Index of the subgroup in Z_m")

    @model_validator(mode="after")
    def _index_divides_order(self) -> "Subgroup":
        if self.m % self.d != 0:
            raise ValueError(f"index {self.d} does not divide group order {self.m}")
        return self

    @property
    def order(self) -> int:
        return self.m // self.d

    @property
    def index(self) -> int:
        return self.d

    def elements(self) -> List[int]:
        return list(range(0, self.m, self.d))

    def cosets(self) -> List["Coset"]:
        return [Coset(subgroup=self, rep=j) for j in range(self.d)]


class Coset(BaseModel):
    """Coset rep + <d> of a subgroup, rep normalised to [0, d)"""
    model_config = ConfigDict(frozen=True)

    subgroup: Subgroup
    rep: int = Field(..., ge=0)

    @model_validator(mode="after")
    def _rep_is_least_residue(self) -> "Coset":
        if self.rep >= self.subgroup.d:
            raise ValueError(f"coset rep {self.rep} is not below index {self.subgroup.d}")
        return self

    def elements(self) -> List[int]:
        return [(self.rep + h) % self.subgroup.m for h in self.subgroup.elements()]

    def shifted(self, g: int) -> "Coset":
        """The coset H + g"""
        return Coset(subgroup=self.subgroup, rep=(self.rep + g) % self.subgroup.d)


class GroupRingElement(BaseModel):
    """
    Element of the group ring N[Z_m]: a Laurent polynomial in z with z^m = 1

    coeffs[e] is the coefficient of z^e; coefficients count parallel arcs.
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)
    coeffs: Tuple[int, ...]

    @model_validator(mode="after")
    def _shape_and_sign(self) -> "GroupRingElement":
        if len(self.coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("group ring coefficients must be nonnegative")
        return self

    @classmethod
    def zero(cls, m: int) -> "GroupRingElement":
        return cls(m=m, coeffs=(0,) * m)

    @classmethod
    def monomial(cls, m: int, exponent: int, coefficient: int = 1) -> "GroupRingElement":
        coeffs = [0] * m
        coeffs[exponent % m] = coefficient
        return cls(m=m, coeffs=tuple(coeffs))

    @classmethod
    def from_exponents(cls, m: int, exponents) -> "GroupRingElement":
        """Sum of z^e over the given exponents (repeats add up)"""
        coeffs = [0] * m
        for e in exponents:
            coeffs[e % m] += 1
        return cls(m=m, coeffs=tuple(coeffs))

    def terms(self) -> List[Tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs by ascending exponent"""
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def total(self) -> int:
        """Value at z = 1"""
        return sum(self.coeffs)

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        from src.cyclic.arithmetic import ring_add
        return ring_add(self, other)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        from src.cyclic.arithmetic import ring_multiply
        return ring_multiply(self, other)
