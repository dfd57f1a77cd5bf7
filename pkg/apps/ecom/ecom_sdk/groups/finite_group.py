"""
Finite Groups as Multiplication Tables
======================================
Elements are dense indices 0..n-1 with the identity pinned at index 0.
table[i, j] is the index of g_i * g_j.

Commutator convention: [x, y] = x^-1 y^-1 x y.
"""

from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ecom_sdk.errors import GroupSpecError
from ecom_sdk.groups.element_set import ElementSet


class FiniteGroup:
    """
    Immutable finite group given by its full multiplication table.

    Args:
        table: n x n array of element indices
        name: text label for reports
        labels: optional per-element labels
        check_associativity: run the O(n^3) check (mandatory up to the budget limit)
    """

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        name: str = "G",
        labels: Optional[Sequence[str]] = None,
        check_associativity: bool = True,
    ):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
            raise GroupSpecError(f"table must be a non-empty square array, got shape {arr.shape}")
        n = arr.shape[0]
        if arr.min() < 0 or arr.max() >= n:
            raise GroupSpecError("table entries must be element indices 0..n-1")

        expected = np.arange(n)
        if not (np.sort(arr, axis=1) == expected).all() or not (np.sort(arr, axis=0) == expected[:, None]).all():
            raise GroupSpecError("table is not a Latin square")
        if not (arr[0] == expected).all() or not (arr[:, 0] == expected).all():
            raise GroupSpecError("index 0 is not a two-sided identity")

        self.order = n
        self.table = arr
        self.table.flags.writeable = False
        self.name = name
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise GroupSpecError(f"{len(self.labels)} labels for {n} elements")

        # In a Latin square with identity 0, each row contains 0 exactly once.
        inverse = np.argmin(arr, axis=1)
        if not (arr[inverse, np.arange(n)] == 0).all():
            raise GroupSpecError("left and right inverses disagree")
        self.inverse = inverse
        self.inverse.flags.writeable = False

        self.associativity_checked = False
        if check_associativity:
            self.verify_associativity()

        self._is_abelian = bool((arr == arr.T).all())

    def verify_associativity(self) -> None:
        """Run the O(n^3) check once and record it in associativity_checked."""
        if self.associativity_checked:
            return
        t = self.table
        for a in range(self.order):
            # (a b) c versus a (b c), for all b, c at once
            left = t[t[a]]
            right = t[a][t]
            if not (left == right).all():
                b, c = np.argwhere(left != right)[0]
                raise GroupSpecError(f"table is not associative at ({a}, {b}, {c})")
        self.associativity_checked = True

    @property
    def is_abelian(self) -> bool:
        return self._is_abelian

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def commutator(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        t = self.table
        return int(t[t[self.inverse[x], self.inverse[y]], t[x, y]])

    def product(self, elements: Iterable[int]) -> int:
        result = 0
        for g in elements:
            result = int(self.table[result, g])
        return result

    def element_set(self, indices: Iterable[int]) -> ElementSet:
        return ElementSet.from_indices(self.order, indices)

    def everything(self) -> ElementSet:
        return ElementSet.full(self.order)

    def commute(self, a: int, b: int) -> bool:
        return self.table[a, b] == self.table[b, a]

    def is_abelian_set(self, elements: Iterable[int]) -> bool:
        """True iff the given elements pairwise commute."""
        idx = np.fromiter(elements, dtype=np.int64)
        if idx.size < 2:
            return True
        block = self.table[np.ix_(idx, idx)]
        return bool((block == block.T).all())

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = int(self.table[x, g])
            k += 1
        return k

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(name={self.name!r}, order={self.order})"


@dataclass(frozen=True)
class Subgroup:
    """A subgroup, stored as its element bitset."""
    elements: ElementSet

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements

    def sort_key(self):
        return self.elements.sort_key()

    def to_dict(self, group: Optional[FiniteGroup] = None) -> dict:
        members = list(self.elements)
        out = {"order": self.order, "elements": members}
        if group is not None:
            out["labels"] = [group.labels[g] for g in members]
        return out


@dataclass(frozen=True, eq=False)
class Coset:
    """
    Left coset representative * subgroup.

    The representative is always the minimal element index, so two cosets
    are equal exactly when their element bitsets are equal.
    """
    subgroup: Subgroup
    representative: int
    elements: ElementSet = field(repr=False)

    @classmethod
    def of(cls, group: FiniteGroup, subgroup: Subgroup, g: int) -> "Coset":
        members = group.table[g, list(subgroup.elements)]
        elements = group.element_set(members)
        return cls(subgroup, elements.minimum(), elements)

    def __eq__(self, other) -> bool:
        return isinstance(other, Coset) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, g: int) -> bool:
        return g in self.elements

    def issubset(self, other: "Coset") -> bool:
        return self.elements.issubset(other.elements)

    def sort_key(self):
        return self.elements.sort_key()

    def label(self, group: FiniteGroup) -> str:
        return f"{group.labels[self.representative]}*<{self.subgroup.order}>{{{','.join(map(str, self.elements))}}}"


def sorted_subgroups(subgroups: Iterable[Subgroup]) -> List[Subgroup]:
    return sorted(subgroups, key=Subgroup.sort_key)
