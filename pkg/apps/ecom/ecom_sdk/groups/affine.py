"""
Affinely Commutative Sets
=========================
A finite S in G is affinely commutative when it lies in a single coset of an
abelian subgroup, equivalently when all quotients s_i^-1 s_j commute.

Three independent tests are provided and must agree:

1. consecutive quotients s_i^-1 s_{i+1} commute pairwise (increasing index order,
   or the given order when S is a list or tuple)
2. the subgroup generated by all quotients s_i^-1 s_j is abelian
3. the minimal enclosing coset s<s^-1 S> exists, i.e. <s^-1 S> is inside its
   own centralizer
"""

from typing import Optional

from ecom_sdk.errors import InvalidInputError
from ecom_sdk.groups.finite_group import Coset, FiniteGroup
from ecom_sdk.groups.subgroups import Elements, as_element_set, centralizer, generated_subgroup


def _quotients(G: FiniteGroup, members, base: int):
    inv = G.inv(base)
    return [G.mul(inv, s) for s in members]


def is_affinely_commutative(G: FiniteGroup, S: Elements, method: int = 1) -> bool:
    """
    Args:
        G: the group
        S: non-empty set of element indices
        method: 1, 2 or 3 (see module docstring)

    Raises:
        InvalidInputError: S is empty or method is unknown
    """
    if method not in (1, 2, 3):
        raise InvalidInputError(f"unknown method {method}; expected 1, 2 or 3")
    if isinstance(S, (list, tuple)):
        members = list(dict.fromkeys(int(s) for s in S))
    else:
        members = list(as_element_set(G, S))
    if not members:
        raise InvalidInputError("affine commutativity is undefined for the empty set")
    if len(members) <= 2:
        return True

    if method == 1:
        steps = [G.mul(G.inv(a), b) for a, b in zip(members, members[1:])]
        return G.is_abelian_set(steps)
    if method == 2:
        quotients = {G.mul(G.inv(a), b) for a in members for b in members}
        return G.is_abelian_set(generated_subgroup(G, quotients).elements)
    return minimal_enclosing_coset(G, S) is not None


def minimal_enclosing_coset(G: FiniteGroup, S: Elements) -> Optional[Coset]:
    """
    The coset s<s^-1 S> for s = min(S) if S is affinely commutative, else None.

    That coset is contained in every abelian coset containing S.
    """
    elements = as_element_set(G, S)
    if not elements:
        raise InvalidInputError("the empty set has no enclosing coset")
    s = elements.minimum()
    quotients = G.element_set(_quotients(G, elements, s))
    H = generated_subgroup(G, quotients)
    # <Q> is abelian iff every generator centralises Q
    if not quotients.issubset(centralizer(G, quotients).elements):
        return None
    return Coset.of(G, H, s)
