"""
Reference Results Suite
=======================
Known desk-scale numbers for Ecom G, recomputed from scratch:

- S_3: AfCom is a wedge of 8 circles (6 vertices, 15 edges, 2 triangles)
- Q_{2^n}: mAbCo counts and H_1 = Z^(2^(2n-4) - 1), n = 3, 4, 5
- AfCom(G) and the mAbCo nerve have the same homology
- [g,h][h,k] = [g,k] on affinely commutative triples
- x_{g,h} -> [g,h] maps pi_1 onto [G, G]
- H_1 agrees with the abelianized pi_1 presentation
- exact O(2) commutator identities
- abelian groups give contractible complexes
- extraspecial groups of order 32: pi_1 = Z/2, pi_2 = Z^151 (stretch)
- S_5: torsion in pi_1 (opt-in stretch)
"""

import itertools
import logging
from typing import Dict, List, Optional

import numpy as np

from ecom_sdk.complexes.models import afcom_complex, mabco_poset
from ecom_sdk.complexes.poset import order_complex
from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.groups.loader import GroupSpec, load_group
from ecom_sdk.groups.named import dihedral_group
from ecom_sdk.homology.chains import HomologyGroup, homology, is_homology_wedge_of_circles
from ecom_sdk.o2 import commutator_identities, dihedral_table, random_angles
from ecom_sdk.pi1.abelian import abelian_invariants, torsion_certificate
from ecom_sdk.pi1.commutator import commutator_morphism, feit_thompson_witness
from ecom_sdk.pi1.cover import universal_cover
from ecom_sdk.pi1.presentation import Presentation, pi1_presentation
from ecom_sdk.pi1.tietze import tietze_simplify
from ecom_sdk.pi1.todd_coxeter import todd_coxeter
from ecom_sdk.settings import SharedSettings, checkpoint
from ecom_sdk.verification.catalog import catalog, catalog_group
from ecom_sdk.verification.checks import Check, Outcome, Verdict, verdict

logger = logging.getLogger(__name__)


def _padded(groups: List[HomologyGroup], length: int) -> List[HomologyGroup]:
    return list(groups) + [HomologyGroup()] * (length - len(groups))


def s3_wedge_of_eight() -> Outcome:
    K = afcom_complex(catalog_group("S_3"))
    report = homology(K)
    P = tietze_simplify(pi1_presentation(K))
    expected = [HomologyGroup(1), HomologyGroup(8), HomologyGroup()]
    ok = (
        _padded(report.groups, 3) == expected
        and is_homology_wedge_of_circles(K) == 8
        and P.generator_count == 8
        and not P.relators
    )
    return verdict(ok), {
        "homology": [str(h) for h in report.groups],
        "pi1_generators": P.generator_count,
        "pi1_relators": len(P.relators),
    }


def s3_census() -> Outcome:
    K = afcom_complex(catalog_group("S_3"))
    triangles = K.faces(2)
    disjoint = len(triangles) == 2 and not set(triangles[0]) & set(triangles[1])
    counts = [K.vertex_count, len(K.faces(1)), len(triangles)]
    ok = counts == [6, 15, 2] and disjoint and K.euler_characteristic() == -7 and len(K.facets) == 11
    return verdict(ok), {"f_vector": counts, "chi": K.euler_characteristic(), "facets": len(K.facets)}


def quaternion_formulas(n: int) -> Outcome:
    G = load_group(GroupSpec.named("quaternion", 2 ** n))
    P = mabco_poset(G)
    vertices, edges = len(P), len(P.hasse_edges())
    r = 2 ** (2 * n - 4) - 1
    nerve = order_complex(P)
    h_nerve = homology(nerve, max_dim=1).groups
    h_afcom = homology(afcom_complex(G), max_dim=1).groups
    ok = (
        vertices == 2 ** (2 * n - 4) + 2 ** (n - 1) + 2
        and edges == 2 ** (2 * n - 3) + 2 ** (n - 1)
        and h_nerve == [HomologyGroup(1), HomologyGroup(r)]
        and h_afcom == [HomologyGroup(1), HomologyGroup(r)]
        and is_homology_wedge_of_circles(nerve) == r
    )
    return verdict(ok), {
        "group": G.name,
        "mabco_vertices": vertices,
        "mabco_hasse_edges": edges,
        "H1_nerve": str(h_nerve[1]),
        "H1_afcom": str(h_afcom[1]),
    }


def model_agreement(max_order: int = 16) -> Outcome:
    mismatches = []
    for G in catalog(max_order):
        checkpoint("model agreement")
        afcom = homology(afcom_complex(G)).groups
        nerve = homology(order_complex(mabco_poset(G))).groups
        length = max(len(afcom), len(nerve))
        if _padded(afcom, length) != _padded(nerve, length):
            mismatches.append({"group": G.name, "afcom": [str(h) for h in afcom], "nerve": [str(h) for h in nerve]})
    return verdict(not mismatches), {"groups": len(catalog(max_order)), "mismatches": mismatches}


def commutator_triples(max_order: int = 24) -> Outcome:
    checked, violations = 0, []
    for G in catalog(max_order):
        for triangle in afcom_complex(G).faces(2):
            for g, h, k in itertools.permutations(triangle):
                checked += 1
                if G.mul(G.commutator(g, h), G.commutator(h, k)) != G.commutator(g, k):
                    violations.append({"group": G.name, "triple": [g, h, k]})
    return verdict(not violations), {"ordered_triples": checked, "violations": violations[:10]}


def commutator_surjectivity(max_order: int = 24) -> Outcome:
    failures = []
    images: Dict[str, int] = {}
    for G in catalog(max_order):
        report = commutator_morphism(G)
        images[G.name] = report.image.order
        if not report.surjective:
            failures.append(G.name)
    return verdict(not failures), {"image_orders": images, "not_surjective": failures}


def feit_thompson_examples() -> Outcome:
    cases = {
        "S_3": (catalog_group("S_3"), True),
        "F_21": (catalog_group("F_21"), True),
        "A_5": (load_group(GroupSpec.named("alternating", 5)), False),
    }
    results = {name: feit_thompson_witness(G) for name, (G, _) in cases.items()}
    ok = all(results[name] == expected for name, (_, expected) in cases.items())
    return verdict(ok), {"witness": results}


def _hurewicz_complexes(max_order: int):
    yield "AfCom(S_3)", afcom_complex(catalog_group("S_3"))
    for n in (3, 4, 5):
        G = load_group(GroupSpec.named("quaternion", 2 ** n))
        yield f"AfCom({G.name})", afcom_complex(G)
        yield f"mAbCo({G.name})", order_complex(mabco_poset(G))
    for G in catalog(max_order):
        yield f"AfCom({G.name})", afcom_complex(G)
        yield f"mAbCo({G.name})", order_complex(mabco_poset(G))


def first_homology_matches_pi1(K: SimplicialComplex, P: Optional[Presentation] = None, h1: Optional[HomologyGroup] = None) -> bool:
    """H_1(K) equals the abelianization of pi_1(K); P and h1 are reused when already computed."""
    if h1 is None:
        h1 = homology(K, max_dim=1).groups[1] if K.dimension >= 1 else HomologyGroup()
    if P is None:
        P = pi1_presentation(K)
    return abelian_invariants(P).as_homology_group() == h1


def hurewicz_consistency(max_order: int = 16) -> Outcome:
    mismatches, checked = [], 0
    for name, K in _hurewicz_complexes(max_order):
        checkpoint("hurewicz")
        checked += 1
        if not first_homology_matches_pi1(K):
            mismatches.append(name)
    return verdict(not mismatches), {"complexes": checked, "mismatches": mismatches}


def o2_identities(samples: int, seed: int) -> Outcome:
    violations = []
    for theta, tau in random_angles(samples, seed):
        for name, (computed, expected) in commutator_identities(theta, tau).items():
            if computed != expected or computed.reflect:
                violations.append({"identity": name, "theta": str(theta), "tau": str(tau)})
    dihedral_mismatch = [n for n in range(1, 13) if not np.array_equal(dihedral_table(n), dihedral_group(n).table)]
    ok = not violations and not dihedral_mismatch
    return verdict(ok), {"samples": samples, "violations": violations[:10], "dihedral_mismatch": dihedral_mismatch}


def abelian_contractibility(max_order: int = 16) -> Outcome:
    failures = []
    groups = catalog(max_order, abelian=True)
    for G in groups:
        K = afcom_complex(G)
        reduced = homology(K, reduced=True).groups
        if len(K.facets) != 1 or not all(h.is_trivial() for h in reduced):
            failures.append(G.name)
        # no shortcut for the small ones
        if G.order <= 8 and not all(h.is_trivial() for h in homology(K, reduced=True, shortcuts=False).groups):
            failures.append(f"{G.name} (eliminated)")
    return verdict(not failures), {"groups": len(groups), "failures": failures}


def extraspecial32(kind: str) -> Outcome:
    G = load_group(GroupSpec.named("extraspecial32", kind))
    K = afcom_complex(G)
    afcom = homology(K, max_dim=2)
    P = tietze_simplify(pi1_presentation(K))
    enumeration = todd_coxeter(P)

    nerve = order_complex(mabco_poset(G))
    nerve_pi1 = tietze_simplify(pi1_presentation(nerve))
    nerve_enumeration = todd_coxeter(nerve_pi1)
    hurewicz = first_homology_matches_pi1(K, P, afcom.groups[1]) and first_homology_matches_pi1(nerve, nerve_pi1)
    details = {
        "afcom_chi": afcom.chi,
        "afcom_homology": [str(h) for h in afcom.groups],
        "hurewicz": hurewicz,
        "pi1_order": enumeration.to_dict()["order"],
        "nerve_f_vector": nerve.f_vector(),
    }
    if not hurewicz:
        return Verdict.FAIL, details
    if not (enumeration.completed and nerve_enumeration.completed):
        return Verdict.SKIPPED, {**details, "reason": "coset enumeration did not complete"}

    cover = universal_cover(nerve, nerve_pi1, nerve_enumeration)
    lifted = homology(cover, max_dim=2).groups
    details["cover_homology"] = [str(h) for h in lifted]
    ok = (
        hurewicz
        and afcom.groups[1] == HomologyGroup(0, (2,))
        and afcom.groups[2] == HomologyGroup(75)
        and enumeration.order == 2
        and nerve_enumeration.order == 2
        and _padded(lifted, 3) == [HomologyGroup(1), HomologyGroup(), HomologyGroup(151)]
    )
    return verdict(ok), details


def s5_torsion() -> Outcome:
    K = afcom_complex(load_group(GroupSpec.named("symmetric", 5)))
    P = tietze_simplify(pi1_presentation(K))
    invariants = abelian_invariants(P)
    certificate = torsion_certificate(P)
    details = {
        "generators": P.generator_count,
        "relators": len(P.relators),
        "abelian_invariants": str(invariants),
        "certificate": certificate.to_dict() if certificate else None,
    }
    return (Verdict.PASS if certificate else Verdict.SKIPPED), details


def reference_checks(stretch: bool = False) -> List[Check]:
    settings = SharedSettings.get()
    checks = [
        Check("s3-wedge-of-8", s3_wedge_of_eight),
        Check("s3-census", s3_census),
        *(Check(f"quaternion-Q{2 ** n}", quaternion_formulas, kwargs={"n": n}) for n in (3, 4, 5)),
        Check("model-agreement", model_agreement),
        Check("commutator-triples", commutator_triples),
        Check("commutator-surjectivity", commutator_surjectivity),
        Check("feit-thompson", feit_thompson_examples),
        Check("hurewicz", hurewicz_consistency),
        Check("o2-identities", o2_identities, kwargs={"samples": settings.samples, "seed": settings.seed}),
        Check("abelian-contractible", abelian_contractibility),
        Check("extraspecial32+", extraspecial32, stretch=True, kwargs={"kind": "+"}),
        Check("extraspecial32-", extraspecial32, stretch=True, kwargs={"kind": "-"}),
    ]
    if stretch:
        checks.append(Check("s5-torsion", s5_torsion, stretch=True))
    return checks
