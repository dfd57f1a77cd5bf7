"""
Named Group Catalog
===================
The groups the verification suites sweep over: every named family member of
order at most 24 plus a handful of direct products and the Frobenius group
of order 21.
"""

from functools import lru_cache
from typing import Dict, List

from ecom_sdk.groups.finite_group import FiniteGroup
from ecom_sdk.groups.loader import GroupSpec, load_group


def _named(family: str, param) -> Dict:
    return {"kind": "named", "family": family, "param": param}


def _product(*factors: Dict) -> Dict:
    return {"kind": "product", "factors": list(factors)}


Z2, Z3, Z4 = _named("cyclic", 2), _named("cyclic", 3), _named("cyclic", 4)
S3 = _named("symmetric", 3)

# F21 = <(1 2 3 4 5 6 7), (2 3 5)(4 7 6)>, x -> 2x acting on Z/7
FROBENIUS_21 = {"kind": "permutations", "degree": 7, "generators": [[[1, 2, 3, 4, 5, 6, 7]], [[2, 3, 5], [4, 7, 6]]]}


def catalog_specs() -> Dict[str, Dict]:
    specs: Dict[str, Dict] = {}
    for n in range(1, 25):
        specs[f"Z/{n}"] = _named("cyclic", n)
    for n in range(1, 13):
        specs[f"D_{2 * n}"] = _named("dihedral", n)
    for n in range(1, 5):
        specs[f"S_{n}"] = _named("symmetric", n)
    for n in (3, 4):
        specs[f"A_{n}"] = _named("alternating", n)
    specs["Q_8"] = _named("quaternion", 8)
    specs["Q_16"] = _named("quaternion", 16)
    specs["Z/2 x Z/2"] = _product(Z2, Z2)
    specs["Z/2 x Z/2 x Z/2"] = _product(Z2, Z2, Z2)
    specs["Z/2 x S_3"] = _product(Z2, S3)
    specs["Z/3 x S_3"] = _product(Z3, S3)
    specs["Z/2 x D_8"] = _product(Z2, _named("dihedral", 4))
    specs["Z/2 x Q_8"] = _product(Z2, _named("quaternion", 8))
    specs["Z/2 x A_4"] = _product(Z2, _named("alternating", 4))
    specs["Z/4 x S_3"] = _product(Z4, S3)
    specs["F_21"] = FROBENIUS_21
    return specs


@lru_cache(maxsize=None)
def catalog_group(name: str) -> FiniteGroup:
    group = load_group(GroupSpec.from_dict(catalog_specs()[name]))
    group.name = name
    return group


def catalog(max_order: int = 24, abelian=None) -> List[FiniteGroup]:
    """
    Catalog groups up to max_order, in catalog order.

    Args:
        max_order: largest order included
        abelian: True / False to keep only abelian / non-abelian groups
    """
    out = []
    for name in catalog_specs():
        G = catalog_group(name)
        if G.order > max_order:
            continue
        if abelian is not None and G.is_abelian != abelian:
            continue
        out.append(G)
    return out
