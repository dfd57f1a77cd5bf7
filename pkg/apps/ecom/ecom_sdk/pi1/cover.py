"""
Universal Cover
===============
Given a completed coset enumeration of pi_1 over the trivial subgroup, the
universal cover of |K| is triangulated by the lifts of its facets: vertex
(v, c) sits over v on sheet c (index v * m + c for m sheets), and a facet
v_0 < ... < v_k on sheet c lifts to (v_i, c * w(v_0, v_i)), where w is the
edge word of v_0 -> v_i.

The cover is simply connected, so its H_2 is pi_2(|K|).
"""

import logging
from typing import Optional

from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import InvalidInputError
from ecom_sdk.homology.chains import HomologyGroup, homology
from ecom_sdk.pi1.presentation import Presentation, pi1_presentation
from ecom_sdk.pi1.tietze import tietze_simplify
from ecom_sdk.pi1.todd_coxeter import CosetEnumeration, todd_coxeter
from ecom_sdk.settings import checkpoint, reserve

logger = logging.getLogger(__name__)


def universal_cover(K: SimplicialComplex, P: Presentation, enumeration: CosetEnumeration) -> SimplicialComplex:
    """
    Args:
        K: the complex P was read from
        P: presentation whose edge_words cover every edge of K
        enumeration: completed enumeration of P over the trivial subgroup

    Raises:
        InvalidInputError: the enumeration did not complete or P lacks edge words
    """
    if not enumeration.completed:
        raise InvalidInputError("universal cover needs a completed coset enumeration")
    missing = [e for e in K.faces(1) if e not in P.edge_words]
    if missing:
        raise InvalidInputError(f"presentation has no edge word for {missing[0]}")

    sheets = enumeration.order
    reserve("max_simplices", len(K.facets) * sheets, bytes_each=64 + 8 * (K.dimension + 1))
    facets = []
    for i, facet in enumerate(K.facets):
        if i % 1024 == 0:
            checkpoint("universal cover")
        v0 = facet[0]
        words = [P.edge_word(v0, v) if v != v0 else None for v in facet]
        for c in range(sheets):
            lifted = [v * sheets + (c if w is None else enumeration.act(c, w)) for v, w in zip(facet, words)]
            facets.append(lifted)

    labels = {v * sheets + c: f"{K.label(v)}@{c}" for v in range(K.vertex_count) for c in range(sheets)}
    cover = SimplicialComplex(K.vertex_count * sheets, facets, labels=labels, check_maximality=False)
    logger.info("Universal cover: %d sheets, %d vertices, %d facets", sheets, cover.vertex_count, len(cover.facets))
    return cover


def second_homotopy(K: SimplicialComplex, tree: str = "auto", max_cosets: Optional[int] = None) -> dict:
    """
    pi_2(|K|) as H_2 of the universal cover, when pi_1 enumerates.

    Returns:
        {"pi1_order": n, "pi2": {...}} or {"pi1_order": "unknown", ...} when the
        coset enumeration does not complete
    """
    P = tietze_simplify(pi1_presentation(K, tree=tree))
    enumeration = todd_coxeter(P, max_cosets)
    if not enumeration.completed:
        return {"pi1_order": "unknown", "cosets_used": enumeration.cosets_used, "pi2": "unknown"}
    cover = universal_cover(K, P, enumeration)
    groups = homology(cover, max_dim=2).groups
    pi2 = groups[2] if len(groups) > 2 else HomologyGroup()
    return {
        "pi1_order": enumeration.order,
        "pi2": pi2.to_dict(2),
        "pi2_text": str(pi2),
        "cover_f_vector": cover.f_vector(),
    }
