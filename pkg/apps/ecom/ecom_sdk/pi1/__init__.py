"""
Fundamental Groups
==================
Edge-path presentations, Tietze simplification, abelianization, coset
enumeration, universal covers and the commutator homomorphism onto [G, G].
"""

from ecom_sdk.pi1.abelian import AbelianInvariants, TorsionCertificate, abelian_invariants, torsion_certificate
from ecom_sdk.pi1.commutator import (
    CommutatorMorphismReport,
    check_face_compatibility,
    commutator_morphism,
    feit_thompson_witness,
    simplicial_commutator,
)
from ecom_sdk.pi1.cover import second_homotopy, universal_cover
from ecom_sdk.pi1.presentation import Presentation, pi1_presentation, spanning_tree
from ecom_sdk.pi1.tietze import tietze_simplify
from ecom_sdk.pi1.todd_coxeter import CosetEnumeration, group_order, todd_coxeter
from ecom_sdk.pi1.words import Word

__all__ = [
    "AbelianInvariants",
    "CommutatorMorphismReport",
    "CosetEnumeration",
    "Presentation",
    "TorsionCertificate",
    "Word",
    "abelian_invariants",
    "check_face_compatibility",
    "commutator_morphism",
    "feit_thompson_witness",
    "group_order",
    "pi1_presentation",
    "second_homotopy",
    "simplicial_commutator",
    "spanning_tree",
    "tietze_simplify",
    "todd_coxeter",
    "torsion_certificate",
    "universal_cover",
]
