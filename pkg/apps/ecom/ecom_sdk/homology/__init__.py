"""
Homology
========
Sparse exact Smith normal form and integral simplicial homology.
"""

from ecom_sdk.homology.chains import (
    HomologyGroup,
    HomologyReport,
    boundary_matrix,
    homology,
    is_homology_wedge_of_circles,
)
from ecom_sdk.homology.matrix import IntegerMatrix
from ecom_sdk.homology.smith import SmithNormalFormResult, matrix_rank, rank_mod_p, smith_normal_form

__all__ = [
    "HomologyGroup",
    "HomologyReport",
    "IntegerMatrix",
    "SmithNormalFormResult",
    "boundary_matrix",
    "homology",
    "is_homology_wedge_of_circles",
    "matrix_rank",
    "rank_mod_p",
    "smith_normal_form",
]
