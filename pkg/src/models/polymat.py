"""
Polynomial matrix model: a square grid of group ring elements
"""
from typing import List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.models.group import GroupRingElement


class PolyMatrix(BaseModel):
    """n x n matrix over the group ring of Z_m (B(z) or B0(z))"""
    model_config = ConfigDict(frozen=True)

    m: int = Field(..., ge=1)
    n: int = Field(..., ge=0)
    entries: Tuple[Tuple[GroupRingElement, ...], ...]

    @model_validator(mode="after")
    def _square_and_same_order(self) -> "PolyMatrix":
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise ValueError(f"entries do not form a {self.n}x{self.n} grid")
        for row in self.entries:
            for entry in row:
                if entry.m != self.m:
                    raise ValueError(f"entry of order {entry.m} in a matrix over Z_{self.m}")
        return self

    @classmethod
    def zeros(cls, m: int, n: int) -> "PolyMatrix":
        zero = GroupRingElement.zero(m)
        return cls(m=m, n=n, entries=tuple(tuple(zero for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_rows(cls, m: int, rows: List[List[GroupRingElement]]) -> "PolyMatrix":
        return cls(m=m, n=len(rows), entries=tuple(tuple(row) for row in rows))

    def entry(self, i: int, j: int) -> GroupRingElement:
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[GroupRingElement, ...]:
        return self.entries[i]
