"""
Posets and Complexes
====================
AfCom(G), the coset posets AbCo(G) and mAbCo(G), order complexes, and the
facet-based SimplicialComplex they are all expressed in.
"""

from ecom_sdk.complexes.models import abco_poset, afcom_complex, mabco_envelope, mabco_poset
from ecom_sdk.complexes.poset import Poset, hasse_edges, order_complex
from ecom_sdk.complexes.simplicial import (
    Simplex,
    SimplicialComplex,
    complex_from_dict,
    dimension,
    euler_characteristic,
    export_complex,
    f_vector,
    is_cone,
    k_simplices,
    load_complex,
)

__all__ = [
    "Poset",
    "Simplex",
    "SimplicialComplex",
    "abco_poset",
    "afcom_complex",
    "complex_from_dict",
    "dimension",
    "euler_characteristic",
    "export_complex",
    "f_vector",
    "hasse_edges",
    "is_cone",
    "k_simplices",
    "load_complex",
    "mabco_envelope",
    "mabco_poset",
    "order_complex",
]
