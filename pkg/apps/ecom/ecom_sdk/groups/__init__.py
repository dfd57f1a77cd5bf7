"""
Group Core
==========
Finite groups as multiplication tables, their subgroups and cosets, and the
affinely commutative subsets that make up AfCom(G).
"""

from ecom_sdk.groups.affine import is_affinely_commutative, minimal_enclosing_coset
from ecom_sdk.groups.element_set import ElementSet
from ecom_sdk.groups.finite_group import Coset, FiniteGroup, Subgroup
from ecom_sdk.groups.loader import GroupSpec, load_group, parse_spec_json, read_spec
from ecom_sdk.groups.named import direct_product, quotient_by_central
from ecom_sdk.groups.subgroups import (
    abelian_subgroups,
    center,
    centralizer,
    cyclic_subgroup,
    derived_subgroup,
    generated_subgroup,
    left_cosets,
    maximal_abelian_subgroups,
)

__all__ = [
    "Coset",
    "ElementSet",
    "FiniteGroup",
    "GroupSpec",
    "Subgroup",
    "abelian_subgroups",
    "center",
    "centralizer",
    "cyclic_subgroup",
    "derived_subgroup",
    "direct_product",
    "generated_subgroup",
    "is_affinely_commutative",
    "left_cosets",
    "load_group",
    "maximal_abelian_subgroups",
    "minimal_enclosing_coset",
    "parse_spec_json",
    "quotient_by_central",
    "read_spec",
]
