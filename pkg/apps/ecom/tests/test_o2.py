"""
Exact O(2) Tests - reflection/rotation commutators and dihedral subgroups
"""
import os
import sys
from fractions import Fraction

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk.groups.named import dihedral_group
from ecom_sdk.o2 import (
    A,
    IDENTITY,
    O2Element,
    commutator_identities,
    dihedral_table,
    generated_subgroup,
    random_angles,
    reflection,
    rotation,
)


class TestO2Arithmetic:
    """Exact rational angles mod 1"""

    def test_angles_normalised(self):
        assert rotation(Fraction(5, 4)) == rotation(Fraction(1, 4))
        assert rotation(-Fraction(1, 4)).angle == Fraction(3, 4)

    def test_reflection_conjugates_rotation(self):
        """A R_t A = R_-t"""
        t = Fraction(2, 7)
        assert A * rotation(t) * A == rotation(-t)

    def test_reflections_are_involutions(self):
        r = reflection(Fraction(3, 11))
        assert r * r == IDENTITY
        assert ~r == r

    def test_inverse(self):
        for x in (rotation(Fraction(1, 3)), reflection(Fraction(5, 9)), O2Element(True, Fraction(1, 2))):
            assert x * ~x == IDENTITY == ~x * x

    def test_text(self):
        assert str(reflection(Fraction(1, 2))) == "AR_1/2"
        assert str(rotation(0)) == "R_0"


class TestCommutatorIdentities:
    """Closed forms for commutators of reflections and rotations"""

    ANGLES = [
        (Fraction(0), Fraction(0)),
        (Fraction(1, 3), Fraction(1, 5)),
        (Fraction(7, 8), Fraction(1, 2)),
        (Fraction(999, 1000), Fraction(1, 999)),
    ]

    def test_fixed_angles(self):
        for theta, tau in self.ANGLES:
            for name, (computed, expected) in commutator_identities(theta, tau).items():
                assert computed == expected, f"{name} at {theta}, {tau}"

    def test_random_angles(self):
        for theta, tau in random_angles(200, seed=7):
            for computed, expected in commutator_identities(theta, tau).values():
                assert computed == expected

    def test_random_angles_are_seeded(self):
        assert random_angles(5, seed=3) == random_angles(5, seed=3)
        assert all(0 <= a < 1 and 0 <= b < 1 for a, b in random_angles(50, seed=3))


class TestDihedralSubgroups:
    """<A, R_1/n> is the dihedral group of order 2n"""

    def test_orders(self):
        for n in (1, 2, 3, 5, 8):
            assert len(generated_subgroup([A, rotation(Fraction(1, n))])) == 2 * n

    def test_tables_match_dihedral_family(self):
        for n in (3, 4, 6):
            assert np.array_equal(dihedral_table(n), dihedral_group(n).table)

    def test_large_cyclic_closure_hits_limit(self):
        with pytest.raises(ValueError):
            generated_subgroup([rotation(Fraction(1, 10 ** 6))], limit=1000)
