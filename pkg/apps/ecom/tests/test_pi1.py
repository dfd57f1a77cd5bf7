"""
Fundamental Group Tests - words, presentations, Tietze moves, covers and the
commutator homomorphism
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.complexes.models import afcom_complex, mabco_poset
from ecom_sdk.complexes.poset import order_complex
from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import InvalidInputError, RelatorViolation
from ecom_sdk.groups.named import build_named
from ecom_sdk.homology.chains import HomologyGroup, homology
from ecom_sdk.pi1.abelian import AbelianInvariants, abelian_invariants, torsion_certificate
from ecom_sdk.pi1.commutator import (
    check_face_compatibility,
    commutator_morphism,
    feit_thompson_witness,
    simplicial_commutator,
)
from ecom_sdk.pi1.cover import second_homotopy, universal_cover
from ecom_sdk.pi1.presentation import Presentation, pi1_presentation, spanning_tree
from ecom_sdk.pi1.tietze import tietze_simplify
from ecom_sdk.pi1.todd_coxeter import todd_coxeter
from ecom_sdk.pi1.words import Word

# Six-vertex real projective plane
RP2_FACETS = [
    [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 1, 5],
    [1, 2, 4], [2, 3, 5], [1, 3, 4], [2, 4, 5], [1, 3, 5],
]


class TestWords:
    """Free reduction and relator normal forms"""

    def test_free_reduction(self):
        assert Word([1, -1, 2]).reduced() == Word([2])
        assert Word([1, 2]) * Word([-2, 3]) == Word([1, 3])

    def test_inverse(self):
        assert ~Word([1, -2, 3]) == Word([-3, 2, -1])

    def test_zero_is_not_a_letter(self):
        with pytest.raises(ValueError):
            Word([0])

    def test_cyclic_reduction(self):
        assert Word([-1, 2, 3, 1]).cyclically_reduced() == Word([2, 3])

    def test_canonical_form_ignores_rotation_and_inversion(self):
        w = Word([1, 2, -3])
        assert w.canonical() == Word([2, -3, 1]).canonical() == (~w).canonical()

    def test_root(self):
        assert Word([1, 2, 1, 2, 1, 2]).root() == (Word([1, 2]), 3)
        assert Word([1, 2, 2]).root() == (Word([1, 2, 2]), 1)

    def test_exponent_sums(self):
        assert Word([1, 1, -2, 3, -1]).exponent_sums(3) == [1, -1, 1]


class TestPresentation:
    """Edge-path presentations"""

    SQUARE = [[0, 1], [1, 2], [2, 3], [0, 3]]

    def test_star_tree_at_identity(self):
        K = afcom_complex(build_named("symmetric", 3))
        edges, strategy = spanning_tree(K, 0)
        assert strategy == "star"
        assert len(edges) == 5

    def test_star_unavailable(self):
        K = SimplicialComplex(4, self.SQUARE)
        with pytest.raises(InvalidInputError):
            spanning_tree(K, 0, tree="star")
        edges, strategy = spanning_tree(K, 0)
        assert strategy == "bfs"
        assert len(edges) == 3

    def test_s3_presentation(self):
        P = pi1_presentation(afcom_complex(build_named("symmetric", 3)))
        assert P.generator_count == 10
        assert len(P.relators) == 2
        assert abelian_invariants(P) == AbelianInvariants(8)

    def test_tree_choice_does_not_change_abelianization(self):
        K = afcom_complex(build_named("dihedral", 4))
        star = abelian_invariants(pi1_presentation(K, tree="star"))
        bfs = abelian_invariants(pi1_presentation(K, tree="bfs"))
        assert star == bfs

    def test_relator_letter_out_of_range(self):
        with pytest.raises(InvalidInputError):
            Presentation.from_relators(1, [[1, 2]])

    def test_export(self):
        P = pi1_presentation(SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]]))
        document = P.to_dict()
        assert document["generators"] == 1
        assert document["relators"] == []


class TestTietze:
    """Simplification preserves the group and never grows it"""

    def test_s3_is_free_of_rank_eight(self):
        P = tietze_simplify(pi1_presentation(afcom_complex(build_named("symmetric", 3))))
        assert P.generator_count == 8
        assert P.relators == []

    def test_projective_plane(self):
        P = pi1_presentation(SimplicialComplex(6, RP2_FACETS))
        Q = tietze_simplify(P, check_invariants=True)
        assert abelian_invariants(Q) == AbelianInvariants(0, (2,))
        assert Q.generator_count <= P.generator_count
        assert Q.total_length() <= P.total_length()

    def test_invariants_preserved(self):
        for family, param in (("dihedral", 4), ("quaternion", 8), ("alternating", 4)):
            P = pi1_presentation(afcom_complex(build_named(family, param)))
            Q = tietze_simplify(P, check_invariants=True)
            assert abelian_invariants(P) == abelian_invariants(Q)

    def test_edge_words_use_surviving_generators(self):
        Q = tietze_simplify(pi1_presentation(afcom_complex(build_named("dihedral", 3))))
        for word in Q.edge_words.values():
            assert all(abs(l) <= Q.generator_count for l in word)


class TestAbelianization:
    """Abelian invariants and torsion certificates"""

    def test_cyclic_relator(self):
        P = Presentation.from_relators(2, [[1, 1, 1, 1], [2, 2, 2, 2, 2, 2]])
        invariants = abelian_invariants(P)
        assert invariants == AbelianInvariants(0, (2, 12))
        assert invariants.order() == 24

    def test_infinite_order(self):
        assert AbelianInvariants(2).order() is None

    def test_torsion_certificate(self):
        certificate = torsion_certificate(Presentation.from_relators(1, [[1, 1]]))
        assert certificate is not None
        assert certificate.prime == 2
        assert certificate.word == Word([1])

    def test_no_certificate_for_trivial_group(self):
        assert torsion_certificate(Presentation.from_relators(1, [[1, 1], [1, 1, 1]])) is None


class TestUniversalCover:
    """Covers from completed coset enumerations"""

    def test_projective_plane_double_cover_is_a_sphere(self):
        K = SimplicialComplex(6, RP2_FACETS)
        P = tietze_simplify(pi1_presentation(K))
        enumeration = todd_coxeter(P)
        assert enumeration.order == 2
        cover = universal_cover(K, P, enumeration)
        assert cover.f_vector() == [12, 30, 20]
        assert homology(cover).betti_numbers() == [1, 0, 1]

    def test_second_homotopy_of_projective_plane(self):
        result = second_homotopy(SimplicialComplex(6, RP2_FACETS))
        assert result["pi1_order"] == 2
        assert result["pi2"] == HomologyGroup(1).to_dict(2)
        assert result["pi2_text"] == "Z"

    def test_infinite_fundamental_group(self):
        result = second_homotopy(SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]]), max_cosets=64)
        assert result["pi1_order"] == "unknown"
        assert result["pi2"] == "unknown"

    def test_incomplete_enumeration_rejected(self):
        K = SimplicialComplex(3, [[0, 1], [1, 2], [0, 2]])
        P = pi1_presentation(K)
        with pytest.raises(InvalidInputError):
            universal_cover(K, P, todd_coxeter(P, max_cosets=8))


class TestCommutatorMorphism:
    """x_{g,h} -> [g, h] kills every relator and hits [G, G]"""

    GROUPS = [("symmetric", 3), ("dihedral", 4), ("quaternion", 8), ("alternating", 4), ("dihedral", 6)]

    def test_surjective_onto_derived_subgroup(self):
        for family, param in self.GROUPS:
            G = build_named(family, param)
            report = commutator_morphism(G)
            assert report.surjective, f"{family} {param}"
            assert report.relators_checked > 0

    def test_s3_image(self):
        G = build_named("symmetric", 3)
        report = commutator_morphism(G)
        assert report.image.order == 3
        assert report.to_dict(G)["surjective_onto_derived"]

    def test_violation_is_reported(self):
        G = build_named("symmetric", 3)
        # (2 3) and (1 2) do not commute, so x_{1,2} alone is not killed
        P = Presentation(1, [Word([1])], labels=[(1, 2)])
        with pytest.raises(RelatorViolation):
            commutator_morphism(G, afcom_complex(G), P)

    def test_simplicial_map(self):
        G = build_named("symmetric", 3)
        assert simplicial_commutator(G, (0, 1, 2)) == (G.commutator(0, 1), G.commutator(1, 2))

    def test_face_maps_commute(self):
        G = build_named("quaternion", 8)
        for facet in afcom_complex(G).facets:
            assert check_face_compatibility(G, facet) == []
            assert check_face_compatibility(G, facet[:3]) == []

    def test_face_check_needs_affine_simplex(self):
        G = build_named("symmetric", 3)
        with pytest.raises(InvalidInputError):
            check_face_compatibility(G, range(6))

    def test_feit_thompson_witness(self):
        assert feit_thompson_witness(build_named("symmetric", 3))
        assert feit_thompson_witness(build_named("alternating", 4))
        assert not feit_thompson_witness(build_named("alternating", 5))

    def test_witness_undefined_for_abelian(self):
        with pytest.raises(InvalidInputError):
            feit_thompson_witness(build_named("cyclic", 4))

    def test_q8_nerve_is_a_graph(self):
        K = order_complex(mabco_poset(build_named("quaternion", 8)))
        P = tietze_simplify(pi1_presentation(K))
        assert P.relators == []
        assert P.generator_count == 3
