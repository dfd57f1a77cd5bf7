"""
ElementSet - Bitset of Group Element Indices
============================================
A subset of {0, ..., n-1} stored as the bits of a Python int, so union,
intersection and subset tests are word-parallel and equality is int equality.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple


@dataclass(frozen=True)
class ElementSet:
    """Fixed-width bitset; bit i set iff element i is a member."""
    n: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.n:
            raise ValueError(f"bitset {self.bits:#x} does not fit width {self.n}")

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "ElementSet":
        bits = 0
        for i in indices:
            i = int(i)
            if not 0 <= i < n:
                raise ValueError(f"element index {i} outside 0..{n - 1}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> "ElementSet":
        return cls(n, (1 << n) - 1)

    @classmethod
    def empty(cls, n: int) -> "ElementSet":
        return cls(n, 0)

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and (self.bits >> i) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def _check(self, other: "ElementSet") -> None:
        if self.n != other.n:
            raise ValueError(f"width mismatch: {self.n} vs {other.n}")

    def __or__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.bits | other.bits)

    def __and__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.bits & other.bits)

    def __sub__(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.bits & ~other.bits)

    def issubset(self, other: "ElementSet") -> bool:
        self._check(other)
        return self.bits & ~other.bits == 0

    def with_element(self, i: int) -> "ElementSet":
        return ElementSet(self.n, self.bits | (1 << i))

    def minimum(self) -> int:
        if not self.bits:
            raise ValueError("empty set has no minimum")
        return (self.bits & -self.bits).bit_length() - 1

    def indices(self) -> Tuple[int, ...]:
        return tuple(self)

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """(size, increasing indices): the canonical order used everywhere."""
        return (len(self), self.indices())

    def __repr__(self) -> str:
        return f"ElementSet({list(self)})"
