"""
Sparse Integer Matrices
=======================
Entries are arbitrary-precision Python ints keyed by (row, col); zeros are
never stored.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Tuple


@dataclass
class IntegerMatrix:
    rows: int
    cols: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: int(v) for k, v in self.entries.items() if v}
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_dense(cls, dense: Iterable[Iterable[int]]) -> "IntegerMatrix":
        dense = [list(row) for row in dense]
        cols = len(dense[0]) if dense else 0
        entries = {(i, j): v for i, row in enumerate(dense) for j, v in enumerate(row) if v}
        return cls(len(dense), cols, entries)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def get(self, r: int, c: int) -> int:
        return self.entries.get((r, c), 0)

    def is_zero(self) -> bool:
        return not self.entries

    def row_dicts(self) -> Dict[int, Dict[int, int]]:
        out: Dict[int, Dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            out.setdefault(r, {})[c] = v
        return out

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, {(c, r): v for (r, c), v in self.entries.items()})

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        right = other.row_dicts()
        out: Dict[Tuple[int, int], int] = {}
        for (r, k), v in self.entries.items():
            for c, w in right.get(k, {}).items():
                out[(r, c)] = out.get((r, c), 0) + v * w
        return IntegerMatrix(self.rows, other.cols, out)

    __matmul__ = matmul

    def to_dense(self) -> List[List[int]]:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense
