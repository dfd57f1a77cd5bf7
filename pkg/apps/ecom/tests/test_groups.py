"""
Group Core Tests - tables, named families, spec loading, subgroups
"""
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.errors import GroupSpecError
from ecom_sdk.groups.finite_group import FiniteGroup
from ecom_sdk.groups.loader import GroupSpec, load_group, parse_spec_json, read_spec
from ecom_sdk.groups.named import build_named, direct_product, family_order
from ecom_sdk.groups.subgroups import (
    abelian_subgroups,
    center,
    derived_subgroup,
    generated_subgroup,
    left_cosets,
    maximal_abelian_subgroups,
)
from ecom_sdk.settings import Budget


class TestFiniteGroup:
    """Table invariants are enforced on construction"""

    Z2_TABLE = [[0, 1], [1, 0]]

    def test_identity_and_inverses(self):
        G = build_named("symmetric", 3)
        assert G.order == 6
        for g in range(G.order):
            assert G.mul(0, g) == g == G.mul(g, 0)
            assert G.mul(g, G.inv(g)) == 0

    def test_commutator_convention(self):
        """[x, y] = x^-1 y^-1 x y"""
        G = build_named("dihedral", 4)
        for x in range(G.order):
            for y in range(G.order):
                expected = G.product([G.inv(x), G.inv(y), x, y])
                assert G.commutator(x, y) == expected

    def test_rejects_non_latin_square(self):
        with pytest.raises(GroupSpecError):
            FiniteGroup([[0, 1], [1, 1]])

    def test_rejects_misplaced_identity(self):
        with pytest.raises(GroupSpecError):
            FiniteGroup([[1, 0], [0, 1]])

    def test_associativity_is_checked(self):
        G = FiniteGroup(self.Z2_TABLE)
        assert G.associativity_checked
        assert G.is_abelian

    def test_table_is_read_only(self):
        G = FiniteGroup(self.Z2_TABLE)
        with pytest.raises(ValueError):
            G.table[0, 0] = 1


class TestNamedFamilies:
    """Orders and basic structure of the shipped families"""

    ORDERS = [
        ("cyclic", 7, 7),
        ("dihedral", 5, 10),
        ("quaternion", 16, 16),
        ("symmetric", 4, 24),
        ("alternating", 4, 12),
        ("extraspecial32", "+", 32),
        ("extraspecial32", "-", 32),
    ]

    def test_orders(self):
        for family, param, order in self.ORDERS:
            assert family_order(family, param) == order
            assert build_named(family, param).order == order, f"{family} {param}"

    def test_bad_quaternion_order(self):
        with pytest.raises(GroupSpecError):
            family_order("quaternion", 12)

    def test_unknown_family(self):
        with pytest.raises(GroupSpecError):
            build_named("sporadic", 1)

    def test_extraspecial_centre_and_derived(self):
        """Both groups of order 32 have centre = derived subgroup of order 2"""
        for kind in ("+", "-"):
            G = build_named("extraspecial32", kind)
            assert center(G).order == 2
            assert derived_subgroup(G).elements == center(G).elements

    def test_extraspecial_types_differ(self):
        """D8 o D8 has more involutions than D8 o Q8"""
        involutions = {}
        for kind in ("+", "-"):
            G = build_named("extraspecial32", kind)
            involutions[kind] = sum(1 for g in range(1, G.order) if G.element_order(g) == 2)
        assert involutions["+"] == 19
        assert involutions["-"] == 11

    def test_direct_product(self):
        Z2 = build_named("cyclic", 2)
        S3 = build_named("symmetric", 3)
        G = direct_product([Z2, S3])
        assert G.order == 12
        assert center(G).order == 2
        assert not G.is_abelian


class TestSpecLoader:
    """Group spec documents"""

    F21 = {"kind": "permutations", "degree": 7, "generators": [[[1, 2, 3, 4, 5, 6, 7]], [[2, 3, 5], [4, 7, 6]]]}

    def test_named_spec(self):
        G = load_group({"kind": "named", "family": "symmetric", "param": 3})
        assert G.order == 6

    def test_table_spec(self):
        G = load_group({"kind": "table", "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
        assert G.order == 3
        assert G.is_abelian

    def test_permutation_spec(self):
        G = load_group(self.F21)
        assert G.order == 21
        assert not G.is_abelian
        assert derived_subgroup(G).order == 7

    def test_product_spec(self):
        spec = GroupSpec.from_dict({
            "kind": "product",
            "factors": [
                {"kind": "named", "family": "cyclic", "param": 2},
                {"kind": "named", "family": "quaternion", "param": 8},
            ],
        })
        assert spec.expected_order() == 16
        assert load_group(spec).order == 16

    def test_unknown_kind(self):
        with pytest.raises(GroupSpecError):
            load_group({"kind": "lattice"})

    def test_bad_json(self):
        with pytest.raises(GroupSpecError):
            parse_spec_json("{not json")

    def test_cycle_point_out_of_range(self):
        with pytest.raises(GroupSpecError):
            load_group({"kind": "permutations", "degree": 3, "generators": [[[1, 4]]]})

    def test_every_kind_is_checked_for_associativity(self):
        specs = [
            GroupSpec.named("symmetric", 3),
            GroupSpec.named("quaternion", 8),
            GroupSpec.named("extraspecial32", "-"),
            self.F21,
            {"kind": "product", "factors": [{"kind": "named", "family": "cyclic", "param": 2}, {"kind": "named", "family": "dihedral", "param": 3}]},
        ]
        for spec in specs:
            assert load_group(spec).associativity_checked

    def test_associativity_trusted_above_limit(self):
        with Budget(associativity_check_limit=4).active():
            G = load_group(GroupSpec.named("symmetric", 3))
        assert not G.associativity_checked

    def test_table_must_be_a_list(self):
        spec = GroupSpec.from_dict({"kind": "table", "table": 5})
        with pytest.raises(GroupSpecError):
            spec.expected_order()
        with pytest.raises(GroupSpecError):
            spec.describe()
        with pytest.raises(GroupSpecError):
            load_group(spec)

    def test_spec_file_must_be_utf8(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_bytes(b'{"kind": "\xff"}')
        with pytest.raises(GroupSpecError):
            read_spec(path)


class TestSubgroups:
    """Subgroup lattice pieces used by the complexes"""

    def test_s3_maximal_abelian(self):
        G = build_named("symmetric", 3)
        maximal = maximal_abelian_subgroups(G)
        assert sorted(M.order for M in maximal) == [2, 2, 2, 3]
        assert len(abelian_subgroups(G)) == 5

    def test_q8_maximal_abelian(self):
        G = build_named("quaternion", 8)
        maximal = maximal_abelian_subgroups(G)
        assert [M.order for M in maximal] == [4, 4, 4]
        assert center(G).order == 2

    def test_abelian_group_is_its_own_maximal(self):
        G = build_named("cyclic", 6)
        maximal = maximal_abelian_subgroups(G)
        assert len(maximal) == 1
        assert maximal[0].order == 6

    def test_left_cosets_partition(self):
        G = build_named("symmetric", 4)
        H = generated_subgroup(G, [1])
        cosets = left_cosets(G, H)
        assert len(cosets) == G.order // H.order
        seen = set()
        for coset in cosets:
            members = set(coset.elements)
            assert not members & seen
            assert coset.representative == min(members)
            seen |= members
        assert seen == set(range(G.order))

    def test_derived_subgroups(self):
        assert derived_subgroup(build_named("symmetric", 4)).order == 12
        assert derived_subgroup(build_named("alternating", 4)).order == 4
        assert derived_subgroup(build_named("quaternion", 8)).order == 2
        assert derived_subgroup(build_named("cyclic", 5)).order == 1
