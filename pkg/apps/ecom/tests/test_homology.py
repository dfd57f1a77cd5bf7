"""
Homology Tests - Smith normal form and simplicial homology snapshots
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.complexes.models import afcom_complex, mabco_poset
from ecom_sdk.complexes.poset import order_complex
from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import DisconnectedComplexError, InvalidInputError
from ecom_sdk.groups.named import build_named
from ecom_sdk.homology.chains import (
    HomologyGroup,
    boundary_matrix,
    euler_from_betti,
    homology,
    is_homology_wedge_of_circles,
)
from ecom_sdk.homology.matrix import IntegerMatrix
from ecom_sdk.homology.smith import matrix_rank, rank_mod_p, smith_normal_form


def _padded(groups, length):
    return list(groups) + [HomologyGroup()] * (length - len(groups))


class TestSmithNormalForm:
    """Invariant factors of small integer matrices"""

    CASES = [
        ([[6, 0], [0, 4]], (2, 12)),
        ([[1, 2], [3, 4]], (1, 2)),
        ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], (2, 6, 12)),
        ([[0, 0], [0, 0]], ()),
        ([[3]], (3,)),
        ([[2, 0, 0], [0, 3, 0]], (1, 6)),
    ]

    def test_invariant_factors(self):
        for dense, expected in self.CASES:
            result = smith_normal_form(IntegerMatrix.from_dense(dense))
            assert result.invariant_factors == expected, f"{dense}"

    def test_rank_and_torsion(self):
        result = smith_normal_form(IntegerMatrix.from_dense([[6, 0], [0, 4]]))
        assert result.rank == 2
        assert result.torsion == [2, 12]

    def test_modular_rank(self):
        M = IntegerMatrix.from_dense([[2, 0], [0, 3]])
        assert rank_mod_p(M, 2) == 1
        assert rank_mod_p(M, 3) == 1
        assert rank_mod_p(M, 5) == 2
        assert matrix_rank(M) == 2
        assert matrix_rank(M, exact=True) == 2


class TestSimplicialHomology:
    """Homology of standard complexes"""

    def test_circle(self):
        K = SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]])
        report = homology(K)
        assert report.groups == [HomologyGroup(1), HomologyGroup(1)]
        assert is_homology_wedge_of_circles(K, report) == 1

    def test_sphere(self):
        K = SimplicialComplex(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
        report = homology(K)
        assert report.betti_numbers() == [1, 0, 1]
        assert report.chi == 2

    def test_reduced(self):
        K = SimplicialComplex(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
        assert homology(K, reduced=True).betti_numbers() == [0, 0, 1]

    def test_projective_plane_torsion(self):
        """Six-vertex real projective plane: H_1 = Z/2, H_2 = 0"""
        facets = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
            [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
        ]
        K = SimplicialComplex(6, facets)
        report = homology(K, shortcuts=False)
        assert report.groups == [HomologyGroup(1), HomologyGroup(0, (2,)), HomologyGroup()]
        assert is_homology_wedge_of_circles(K, report) is None

    def test_betti_only_matches(self):
        K = afcom_complex(build_named("dihedral", 4))
        exact = homology(K)
        fast = homology(K, torsion=False)
        assert exact.betti_numbers() == fast.betti_numbers()
        assert not fast.torsion_computed

    def test_boundary_squared_is_zero(self):
        K = afcom_complex(build_named("quaternion", 8))
        for k in range(1, K.dimension):
            assert (boundary_matrix(K, k) @ boundary_matrix(K, k + 1)).is_zero()

    def test_disconnected_wedge_check(self):
        K = SimplicialComplex(2, [])
        with pytest.raises(DisconnectedComplexError):
            is_homology_wedge_of_circles(K)

    def test_cone_shortcut_matches_elimination(self):
        K = SimplicialComplex(4, [[0, 1, 2], [0, 2, 3]])
        assert K.is_cone()
        fast = homology(K, max_dim=4)
        slow = homology(K, max_dim=4, shortcuts=False)
        assert fast.to_dict() == slow.to_dict()
        assert len(fast.groups) == 5
        assert fast.simplex_counts == [4, 5, 2]

    def test_empty_complex_rejected(self):
        with pytest.raises(InvalidInputError):
            homology(SimplicialComplex(0, []))

    def test_text(self):
        assert str(HomologyGroup(3, (2, 4))) == "Z^3 + Z/2 + Z/4"
        assert str(HomologyGroup()) == "0"


class TestEcomHomology:
    """Snapshot homology of the models of Ecom G"""

    def test_s3_wedge_of_eight_circles(self):
        K = afcom_complex(build_named("symmetric", 3))
        report = homology(K)
        assert [str(h) for h in report.groups] == ["Z", "Z^8", "0"]
        assert is_homology_wedge_of_circles(K, report) == 8

    def test_models_agree(self):
        for family, param in (("symmetric", 3), ("dihedral", 4), ("quaternion", 8), ("alternating", 4)):
            G = build_named(family, param)
            afcom = homology(afcom_complex(G))
            mabco = homology(order_complex(mabco_poset(G)))
            top = max(len(afcom.groups), len(mabco.groups))
            assert _padded(afcom.groups, top) == _padded(mabco.groups, top), f"{family} {param}"

    def test_q16_first_homology(self):
        K = order_complex(mabco_poset(build_named("quaternion", 16)))
        assert homology(K).groups[1] == HomologyGroup(15)

    def test_abelian_group_is_contractible(self):
        report = homology(afcom_complex(build_named("cyclic", 6)))
        assert report.groups[0] == HomologyGroup(1)
        assert all(h.is_trivial() for h in report.groups[1:])

    def test_euler_characteristic_matches_betti(self):
        report = homology(afcom_complex(build_named("dihedral", 6)))
        assert euler_from_betti(report.groups) == report.chi

    def test_worker_processes_give_same_answer(self):
        K = afcom_complex(build_named("quaternion", 8))
        assert homology(K, jobs=2).groups == homology(K).groups
