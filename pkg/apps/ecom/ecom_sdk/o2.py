"""
Exact O(2)
==========
O(2) = SO(2) u A.SO(2) with angles as exact rationals mod 1 (theta / 2pi).

An element (reflect, angle) stands for A^reflect R_angle, and products follow
(r1, t1)(r2, t2) = (r1 xor r2, t2 + (-1)^r2 t1 mod 1), so A R_t A = R_-t.
This is the same law the dihedral tables use, which makes <A, R_1/n> and
D_2n agree index for index (index = reflect * n + angle * n).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

import numpy as np

Angle = Union[Fraction, int, str]


def _mod1(angle: Angle) -> Fraction:
    value = Fraction(angle)
    return value - (value.numerator // value.denominator)


@dataclass(frozen=True)
class O2Element:
    reflect: bool = False
    angle: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "reflect", bool(self.reflect))
        object.__setattr__(self, "angle", _mod1(self.angle))

    def __mul__(self, other: "O2Element") -> "O2Element":
        return o2_multiply(self, other)

    def __invert__(self) -> "O2Element":
        return o2_inverse(self)

    def __str__(self) -> str:
        rotation = f"R_{self.angle}"
        return f"A{rotation}" if self.reflect else rotation


IDENTITY = O2Element()
A = O2Element(True, Fraction(0))


def rotation(angle: Angle) -> O2Element:
    return O2Element(False, Fraction(angle))


def reflection(angle: Angle) -> O2Element:
    """A R_angle."""
    return O2Element(True, Fraction(angle))


def o2_multiply(a: O2Element, b: O2Element) -> O2Element:
    sign = -1 if b.reflect else 1
    return O2Element(a.reflect != b.reflect, b.angle + sign * a.angle)


def o2_inverse(a: O2Element) -> O2Element:
    # reflections are involutions
    return O2Element(a.reflect, a.angle if a.reflect else -a.angle)


def o2_commutator(a: O2Element, b: O2Element) -> O2Element:
    """[a, b] = a^-1 b^-1 a b."""
    return o2_inverse(a) * o2_inverse(b) * a * b


def commutator_identities(theta: Angle, tau: Angle) -> Dict[str, Tuple[O2Element, O2Element]]:
    """
    (computed, expected) for the three reflection/rotation commutator identities:

    [A R_theta, R_tau] = R_2tau, [R_theta, A R_tau] = R_-2theta,
    [A R_theta, A R_tau] = R_2(tau - theta).
    """
    theta, tau = Fraction(theta), Fraction(tau)
    return {
        "[AR_theta,R_tau]=R_2tau": (o2_commutator(reflection(theta), rotation(tau)), rotation(2 * tau)),
        "[R_theta,AR_tau]=R_-2theta": (o2_commutator(rotation(theta), reflection(tau)), rotation(-2 * theta)),
        "[AR_theta,AR_tau]=R_2(tau-theta)": (
            o2_commutator(reflection(theta), reflection(tau)),
            rotation(2 * (tau - theta)),
        ),
    }


def random_angles(samples: int, seed: int, max_denominator: int = 10 ** 6) -> List[Tuple[Fraction, Fraction]]:
    """Seeded pairs of rational angles in [0, 1)."""
    rng = np.random.default_rng(seed)
    denominators = rng.integers(1, max_denominator, size=(samples, 2))
    pairs = []
    for q1, q2 in denominators:
        p1, p2 = rng.integers(0, q1), rng.integers(0, q2)
        pairs.append((Fraction(int(p1), int(q1)), Fraction(int(p2), int(q2))))
    return pairs


def generated_subgroup(generators: List[O2Element], limit: int = 100000) -> List[O2Element]:
    """Closure of finitely many elements; raises ValueError past `limit` (infinite order)."""
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for x in frontier:
            for g in generators:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        if len(seen) > limit:
            raise ValueError(f"subgroup has more than {limit} elements")
        frontier = nxt
    return sorted(seen, key=lambda x: (x.reflect, x.angle))


def dihedral_index(x: O2Element, n: int) -> int:
    """reflect * n + angle * n for elements of <A, R_1/n>."""
    steps = x.angle * n
    if steps.denominator != 1:
        raise ValueError(f"{x} is not in <A, R_1/{n}>")
    return int(x.reflect) * n + int(steps)


def dihedral_table(n: int) -> np.ndarray:
    """Multiplication table of <A, R_1/n> indexed like the dihedral family."""
    elements = generated_subgroup([A, rotation(Fraction(1, n))])
    order = len(elements)
    table = np.empty((order, order), dtype=np.int64)
    for x in elements:
        for y in elements:
            table[dihedral_index(x, n), dihedral_index(y, n)] = dihedral_index(x * y, n)
    return table
