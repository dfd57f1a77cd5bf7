"""
Complex Tests - AfCom, the coset posets and their order complexes
"""
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.complexes.models import abco_poset, afcom_complex, mabco_envelope, mabco_poset, mabco_subgroups
from ecom_sdk.complexes.poset import order_complex
from ecom_sdk.complexes.simplicial import SimplicialComplex, complex_from_dict, export_complex
from ecom_sdk.errors import BudgetExceeded, InvalidInputError
from ecom_sdk.groups.named import build_named
from ecom_sdk.settings import Budget


class TestSimplicialComplex:
    """Facet storage and derived counts"""

    def test_non_maximal_facets_dropped(self):
        K = SimplicialComplex(4, [[0, 1, 2], [0, 1], [2, 3]])
        assert K.facets == [(0, 1, 2), (2, 3)]
        assert K.f_vector() == [4, 4, 1]
        assert K.euler_characteristic() == 1

    def test_isolated_vertices_become_facets(self):
        K = SimplicialComplex(3, [[0, 1]])
        assert (2,) in K.facets
        assert K.connected_components() == 2

    def test_vertex_out_of_range(self):
        with pytest.raises(InvalidInputError):
            SimplicialComplex(2, [[0, 2]])

    def test_cone(self):
        assert SimplicialComplex(4, [[0, 1, 2], [0, 2, 3]]).is_cone()
        assert not SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]]).is_cone()

    def test_export_round_trip(self):
        K = SimplicialComplex(4, [[0, 1, 2], [2, 3]], labels={0: "e"})
        again = complex_from_dict(json.loads(export_complex(K)))
        assert again.facets == K.facets
        assert again.labels == {0: "e"}

    def test_malformed_documents_rejected(self):
        for document in ({"vertices": 0, "facets": []}, {"vertices": 2, "facets": [[0, "x"]]}, {"vertices": 2, "facets": 5}):
            with pytest.raises(InvalidInputError):
                complex_from_dict(document)

    def test_simplex_budget(self):
        K = SimplicialComplex(6, [[0, 1, 2, 3, 4, 5]])
        with Budget(max_simplices=10).active():
            with pytest.raises(BudgetExceeded):
                K.faces(2)


class TestAfCom:
    """Census of AfCom(G) for small groups"""

    def test_s3_census(self):
        K = afcom_complex(build_named("symmetric", 3))
        assert K.vertex_count == 6
        assert K.f_vector() == [6, 15, 2]
        assert len(K.facets) == 11
        assert K.euler_characteristic() == -7

    def test_q8_census(self):
        K = afcom_complex(build_named("quaternion", 8))
        assert len(K.facets) == 6
        assert K.f_vector() == [8, 28, 24, 6]
        assert K.euler_characteristic() == -2

    def test_abelian_group_is_a_simplex(self):
        K = afcom_complex(build_named("cyclic", 5))
        assert K.facets == [(0, 1, 2, 3, 4)]
        assert K.is_cone()

    def test_labels_follow_group(self):
        G = build_named("dihedral", 3)
        K = afcom_complex(G)
        assert K.label(0) == G.labels[0] == "e"


class TestCosetPosets:
    """AbCo and mAbCo posets and their nerves"""

    def test_mabco_q8(self):
        P = mabco_poset(build_named("quaternion", 8))
        assert len(P) == 10
        K = order_complex(P)
        assert K.f_vector() == [10, 12]

    def test_mabco_s3(self):
        G = build_named("symmetric", 3)
        assert sorted(H.order for H in mabco_subgroups(G)) == [1, 2, 2, 2, 3]
        K = order_complex(mabco_poset(G))
        assert K.f_vector() == [17, 24]
        assert K.euler_characteristic() == -7

    def test_quaternion_vertex_and_edge_formulas(self):
        """|V| = 2^(2n-4) + 2^(n-1) + 2 and |E| = 2^(2n-3) + 2^(n-1)"""
        for n in (3, 4):
            K = order_complex(mabco_poset(build_named("quaternion", 2 ** n)))
            assert K.vertex_count == 2 ** (2 * n - 4) + 2 ** (n - 1) + 2
            assert len(K.faces(1)) == 2 ** (2 * n - 3) + 2 ** (n - 1)

    def test_abco_s3(self):
        P = abco_poset(build_named("symmetric", 3))
        # 6 points, 9 cosets of order-2 subgroups, 2 cosets of A_3
        assert len(P) == 17
        assert len(P.minimal_elements()) == 6
        assert P.rank() == 1

    def test_abelian_mabco_is_a_point(self):
        P = mabco_poset(build_named("cyclic", 4))
        assert len(P) == 1
        assert order_complex(P).f_vector() == [1]

    def test_envelope_of_a_point(self):
        G = build_named("quaternion", 8)
        envelope = mabco_envelope(G, {3})
        assert 3 in envelope
        assert envelope.subgroup.order == 2

    def test_hasse_edges_are_covers(self):
        P = abco_poset(build_named("dihedral", 4))
        for i, j in P.hasse_edges():
            assert P.leq(i, j) and i != j
            assert not any(P.leq(i, k) and P.leq(k, j) for k in range(len(P)) if k not in (i, j))

    def test_order_complex_chain_budget(self):
        P = abco_poset(build_named("symmetric", 3))
        with Budget(max_simplices=5).active():
            with pytest.raises(BudgetExceeded):
                order_complex(P)
