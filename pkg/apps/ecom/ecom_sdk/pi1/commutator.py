"""
The Commutator Homomorphism
===========================
x_{g,h} -> [g, h] sends every triangle relator of pi_1(AfCom(G)) to the
identity, because [g,h][h,k] = [g,k] on affinely commutative triples. The
image is exactly [G, G].

On simplices the same map reads (g_0, ..., g_n) -> ([g_0,g_1], ..., [g_{n-1},g_n]),
which is compatible with the bar-construction face maps.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from ecom_sdk.complexes.models import afcom_complex
from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import InvalidInputError, RelatorViolation
from ecom_sdk.groups.affine import is_affinely_commutative
from ecom_sdk.groups.finite_group import FiniteGroup, Subgroup
from ecom_sdk.groups.subgroups import derived_subgroup, generated_subgroup
from ecom_sdk.pi1.presentation import Presentation, pi1_presentation
from ecom_sdk.pi1.words import Word, generator_of
from ecom_sdk.settings import checkpoint

logger = logging.getLogger(__name__)


@dataclass
class CommutatorMorphismReport:
    image: Subgroup
    derived: Subgroup
    relators_checked: int
    generator_images: List[int]

    @property
    def surjective(self) -> bool:
        return self.image.elements == self.derived.elements

    def to_dict(self, group: Optional[FiniteGroup] = None) -> dict:
        return {
            "image": self.image.to_dict(group),
            "derived": self.derived.to_dict(group),
            "surjective_onto_derived": self.surjective,
            "relators_checked": self.relators_checked,
        }


def _evaluate(G: FiniteGroup, word: Word, images: Sequence[int]) -> int:
    result = 0
    for l in word:
        x = images[generator_of(l)]
        result = G.mul(result, x if l > 0 else G.inv(x))
    return result


def commutator_morphism(
    G: FiniteGroup,
    K: Optional[SimplicialComplex] = None,
    P: Optional[Presentation] = None,
) -> CommutatorMorphismReport:
    """
    Evaluate x_{g,h} -> [g, h] on pi_1(AfCom(G)).

    Args:
        G: the group
        K: afcom_complex(G), built when omitted
        P: presentation of K over the star tree at the identity, whose tree
            edges already map to [e, h] = e

    Raises:
        RelatorViolation: a triangle relator is not sent to the identity
    """
    K = afcom_complex(G) if K is None else K
    P = pi1_presentation(K, base=0, tree="star") if P is None else P
    images = [G.commutator(u, v) for u, v in P.labels]

    for i, relator in enumerate(P.relators):
        if i % 4096 == 0:
            checkpoint("commutator relators")
        value = _evaluate(G, relator, images)
        if value != 0:
            raise RelatorViolation(relator.to_list(), value, 0)

    image = generated_subgroup(G, images)
    report = CommutatorMorphismReport(image, derived_subgroup(G), len(P.relators), images)
    logger.debug("Commutator image of %s has order %d (derived %d)", G.name, image.order, report.derived.order)
    return report


def simplicial_commutator(G: FiniteGroup, simplex: Sequence[int]) -> Tuple[int, ...]:
    """(g_0, ..., g_n) -> ([g_0, g_1], ..., [g_{n-1}, g_n])."""
    return tuple(G.commutator(a, b) for a, b in zip(simplex, simplex[1:]))


def _bar_face(G: FiniteGroup, entries: Tuple[int, ...], i: int) -> Tuple[int, ...]:
    """i-th face of a bar tuple (h_1, ..., h_n): drop an end or multiply neighbours."""
    n = len(entries)
    if i == 0:
        return entries[1:]
    if i == n:
        return entries[:-1]
    return entries[: i - 1] + (G.mul(entries[i - 1], entries[i]),) + entries[i + 1:]


def check_face_compatibility(G: FiniteGroup, simplex: Sequence[int]) -> List[int]:
    """
    Face indices i where c(d_i s) differs from d_i c(s); empty when compatible.

    Raises:
        InvalidInputError: the simplex is not affinely commutative
    """
    simplex = tuple(simplex)
    if not is_affinely_commutative(G, simplex):
        raise InvalidInputError(f"{simplex} is not affinely commutative")
    image = simplicial_commutator(G, simplex)
    bad = []
    for i in range(len(simplex)):
        face = simplex[:i] + simplex[i + 1:]
        if simplicial_commutator(G, face) != _bar_face(G, image, i):
            bad.append(i)
    return bad


def feit_thompson_witness(G: FiniteGroup) -> bool:
    """
    Whether the abelianized commutator morphism is non-zero, i.e. whether
    [G, G] is not perfect.

    Raises:
        InvalidInputError: G is abelian
    """
    if G.is_abelian:
        raise InvalidInputError(f"{G.name} is abelian")
    D = derived_subgroup(G)
    return derived_subgroup(G, D).elements != D.elements

