"""
Subgroup Machinery
==================
Centralizers, closures, commutator subgroups, abelian subgroup enumeration
and left cosets, all on top of the multiplication table.
"""

import logging
from collections import deque
from typing import Iterable, List, Optional, Set, Union

import numpy as np

from ecom_sdk.errors import BudgetExceeded
from ecom_sdk.groups.element_set import ElementSet
from ecom_sdk.groups.finite_group import Coset, FiniteGroup, Subgroup, sorted_subgroups
from ecom_sdk.settings import checkpoint, current_budget

logger = logging.getLogger(__name__)

Elements = Union[ElementSet, Subgroup, Iterable[int]]


def as_element_set(G: FiniteGroup, S: Elements) -> ElementSet:
    if isinstance(S, Subgroup):
        return S.elements
    if isinstance(S, ElementSet):
        if S.n != G.order:
            raise ValueError(f"element set of width {S.n} used with group of order {G.order}")
        return S
    return G.element_set(S)


def centralizer(G: FiniteGroup, S: Elements) -> Subgroup:
    """{g : gs = sg for all s in S}; the centralizer of the empty set is G."""
    idx = list(as_element_set(G, S))
    if not idx:
        return Subgroup(G.everything())
    t = G.table
    mask = (t[:, idx] == t[idx, :].T).all(axis=1)
    return Subgroup(G.element_set(np.flatnonzero(mask)))


def center(G: FiniteGroup) -> Subgroup:
    return centralizer(G, G.everything())


def generated_subgroup(G: FiniteGroup, S: Elements) -> Subgroup:
    """Smallest subgroup containing S, by closure under right multiplication."""
    gens = [g for g in as_element_set(G, S) if g != 0]
    t = G.table
    seen = 1  # identity
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in gens:
            y = int(t[x, s])
            if not (seen >> y) & 1:
                seen |= 1 << y
                queue.append(y)
    return Subgroup(ElementSet(G.order, seen))


def cyclic_subgroup(G: FiniteGroup, g: int) -> Subgroup:
    bits, x = 1, g
    while x != 0:
        bits |= 1 << x
        x = int(G.table[x, g])
    return Subgroup(ElementSet(G.order, bits))


def commutator_set(G: FiniteGroup, H: Optional[Elements] = None) -> ElementSet:
    """All commutators [x, y] with x, y in H (default G)."""
    idx = np.arange(G.order) if H is None else np.fromiter(as_element_set(G, H), dtype=np.int64)
    t, inv = G.table, G.inverse
    left = t[np.ix_(inv[idx], inv[idx])]
    right = t[np.ix_(idx, idx)]
    return G.element_set(np.unique(t[left, right]))


def derived_subgroup(G: FiniteGroup, H: Optional[Elements] = None) -> Subgroup:
    """[H, H] under [x, y] = x^-1 y^-1 x y; H defaults to G."""
    return generated_subgroup(G, commutator_set(G, H))


def is_subgroup(G: FiniteGroup, S: Elements) -> bool:
    elements = as_element_set(G, S)
    return bool(elements) and generated_subgroup(G, elements).elements == elements


def is_abelian_subgroup(G: FiniteGroup, H: Subgroup) -> bool:
    return G.is_abelian_set(H.elements)


def _extend(G: FiniteGroup, A: Subgroup, g: int) -> Subgroup:
    """<A, g> for g commuting with abelian A, which is the product A<g>."""
    powers = list(cyclic_subgroup(G, g).elements)
    members = G.table[np.ix_(list(A.elements), powers)].ravel()
    return Subgroup(G.element_set(members))


def abelian_subgroups(G: FiniteGroup, limit: Optional[int] = None) -> List[Subgroup]:
    """
    Every abelian subgroup of G, sorted by (order, elements).

    Breadth-first closure seeded with the cyclic subgroups: each abelian A is
    extended by every g in C(A) \\ A. Non-abelian subgroups are never built.

    Raises:
        BudgetExceeded: more than max_abelian_subgroups subgroups found
    """
    limit = current_budget().max_abelian_subgroups if limit is None else limit
    found: Set[ElementSet] = set()
    queue: deque = deque()

    def admit(A: Subgroup) -> None:
        if A.elements in found:
            return
        if len(found) >= limit:
            raise BudgetExceeded("max_abelian_subgroups", limit, len(found) + 1)
        found.add(A.elements)
        queue.append(A)

    for g in range(G.order):
        admit(cyclic_subgroup(G, g))

    while queue:
        A = queue.popleft()
        checkpoint("abelian_subgroups")
        for g in centralizer(G, A).elements - A.elements:
            admit(_extend(G, A, g))

    logger.debug("%s has %d abelian subgroups", G.name, len(found))
    return sorted_subgroups(Subgroup(e) for e in found)


def maximal_abelian_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """
    Abelian subgroups equal to their own centralizer, sorted canonically.

    Depth-first search upwards from the centre, which lies in every maximal
    abelian subgroup.
    """
    start = center(G)
    visited: Set[ElementSet] = {start.elements}
    stack = [start]
    maximal: List[Subgroup] = []
    while stack:
        A = stack.pop()
        checkpoint("maximal_abelian_subgroups")
        extra = centralizer(G, A).elements - A.elements
        if not extra:
            maximal.append(A)
            continue
        for g in extra:
            B = _extend(G, A, g)
            if B.elements not in visited:
                visited.add(B.elements)
                stack.append(B)
    return sorted_subgroups(maximal)


def left_cosets(G: FiniteGroup, H: Subgroup) -> List[Coset]:
    """The |G|/|H| left cosets gH, ordered by representative."""
    cosets: List[Coset] = []
    covered = ElementSet.empty(G.order)
    for g in range(G.order):
        if g in covered:
            continue
        coset = Coset.of(G, H, g)
        cosets.append(coset)
        covered = covered | coset.elements
    return cosets
