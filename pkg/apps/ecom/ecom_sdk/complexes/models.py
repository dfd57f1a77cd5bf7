"""
Combinatorial Models of Ecom G
==============================
afcom_complex   vertices = G, simplices = affinely commutative subsets
abco_poset      cosets of all abelian subgroups
mabco_poset     cosets of intersections of maximal abelian subgroups

All three have the homotopy type of Ecom G.
"""

import logging
from typing import Iterable, List, Set

from ecom_sdk.complexes.poset import Poset
from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.groups.element_set import ElementSet
from ecom_sdk.groups.finite_group import Coset, FiniteGroup, Subgroup, sorted_subgroups
from ecom_sdk.groups.subgroups import Elements, abelian_subgroups, as_element_set, left_cosets, maximal_abelian_subgroups
from ecom_sdk.settings import reserve

logger = logging.getLogger(__name__)


def afcom_complex(G: FiniteGroup) -> SimplicialComplex:
    """Facets are the distinct left cosets of the maximal abelian subgroups."""
    facets = set()
    for M in maximal_abelian_subgroups(G):
        for coset in left_cosets(G, M):
            facets.add(coset.elements.indices())
    labels = {g: G.labels[g] for g in range(G.order)}
    K = SimplicialComplex(G.order, facets, labels=labels)
    logger.info("AfCom(%s): %d vertices, %d facets", G.name, K.vertex_count, len(K.facets))
    return K


def _all_cosets(G: FiniteGroup, subgroups: Iterable[Subgroup]) -> List[Coset]:
    subgroups = list(subgroups)
    reserve("max_simplices", sum(G.order // H.order for H in subgroups))
    cosets = {}
    for H in subgroups:
        for coset in left_cosets(G, H):
            cosets.setdefault(coset.elements, coset)
    return list(cosets.values())


def abco_poset(G: FiniteGroup) -> Poset:
    """Cosets of all abelian subgroups under inclusion."""
    return Poset(_all_cosets(G, abelian_subgroups(G)), group=G)


def intersection_closure(G: FiniteGroup, generators: Iterable[Subgroup]) -> List[Subgroup]:
    """Close a family of subgroups under pairwise intersection, to a fixed point."""
    family: Set[ElementSet] = {H.elements for H in generators}
    frontier = set(family)
    while frontier:
        fresh = set()
        for a in frontier:
            for b in family:
                meet = a & b
                if meet not in family:
                    fresh.add(meet)
        family |= fresh
        frontier = fresh
    return sorted_subgroups(Subgroup(e) for e in family)


def mabco_subgroups(G: FiniteGroup) -> List[Subgroup]:
    """Intersections of non-empty families of maximal abelian subgroups."""
    return intersection_closure(G, maximal_abelian_subgroups(G))


def mabco_poset(G: FiniteGroup) -> Poset:
    return Poset(_all_cosets(G, mabco_subgroups(G)), group=G)


def mabco_envelope(G: FiniteGroup, C: Elements) -> Coset:
    """
    Least element gM of {C' in mAbCo(G) : C subset C'} for an abelian coset C.

    M is the intersection of every member of the closure containing
    A = g^-1 C, which is again a member of the closure.
    """
    elements = as_element_set(G, C)
    g = elements.minimum()
    g_inv = G.inv(g)
    A = G.element_set(G.mul(g_inv, c) for c in elements)
    meet = G.everything()
    for H in mabco_subgroups(G):
        if A.issubset(H.elements):
            meet = meet & H.elements
    return Coset.of(G, Subgroup(meet), g)
