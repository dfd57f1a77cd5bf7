"""
Named Group Families
====================
Explicit multiplication tables for the families the toolkit ships with:

- cyclic n          Z/n, order n
- dihedral n        symmetries of the n-gon, order 2n
- quaternion 2^k    generalised quaternion group, order 2^k (k >= 3)
- symmetric n       S_n, order n!
- alternating n     A_n, order n!/2
- extraspecial32 +  D8 o D8, order 32
- extraspecial32 -  D8 o Q8, order 32

Dihedral elements are A^j R^i (index j*n + i) with the law
(j1, i1)(j2, i2) = (j1 xor j2, i2 + (-1)^j2 i1 mod n), the same law the exact
O(2) model uses, so the two agree element by element.
"""

import math
from typing import List, Sequence

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from ecom_sdk.errors import GroupSpecError
from ecom_sdk.groups.finite_group import FiniteGroup

FAMILIES = ("symmetric", "alternating", "cyclic", "dihedral", "quaternion", "extraspecial32")


def family_order(family: str, param) -> int:
    """Order a named group will have, computed before building any table."""
    if family == "cyclic":
        return _positive(param, family)
    if family == "dihedral":
        return 2 * _positive(param, family)
    if family == "quaternion":
        order = _positive(param, family)
        if order < 8 or order & (order - 1):
            raise GroupSpecError(f"quaternion order must be a power of two >= 8, got {order}")
        return order
    if family == "symmetric":
        return math.factorial(_positive(param, family))
    if family == "alternating":
        n = _positive(param, family)
        return max(1, math.factorial(n) // 2)
    if family == "extraspecial32":
        if param not in ("+", "-"):
            raise GroupSpecError(f"extraspecial32 type must be '+' or '-', got {param!r}")
        return 32
    raise GroupSpecError(f"unknown group family {family!r}; expected one of {', '.join(FAMILIES)}")


def _positive(param, family: str) -> int:
    if isinstance(param, bool) or not isinstance(param, int) or param < 1:
        raise GroupSpecError(f"{family} parameter must be a positive integer, got {param!r}")
    return param


def cyclic_group(n: int) -> FiniteGroup:
    i = np.arange(n)
    table = (i[:, None] + i[None, :]) % n
    labels = ["e"] + [f"g^{k}" for k in range(1, n)]
    return FiniteGroup(table, name=f"Z/{n}", labels=labels, check_associativity=False)


def dihedral_group(n: int) -> FiniteGroup:
    order = 2 * n
    table = np.empty((order, order), dtype=np.int64)
    for a in range(order):
        j1, i1 = divmod(a, n)
        for b in range(order):
            j2, i2 = divmod(b, n)
            sign = -1 if j2 else 1
            table[a, b] = (j1 ^ j2) * n + (i2 + sign * i1) % n
    labels = [("s" if j else "") + (f"r^{i}" if i else ("" if j else "e")) for j in range(2) for i in range(n)]
    return FiniteGroup(table, name=f"D_{order}", labels=labels, check_associativity=False)


def quaternion_group(order: int) -> FiniteGroup:
    """Q_{2^k} = <a, b | a^{2m} = 1, b^2 = a^m, b a b^-1 = a^-1>, index j*2m + i for a^i b^j."""
    two_m = order // 2
    m = two_m // 2
    table = np.empty((order, order), dtype=np.int64)
    for x in range(order):
        j, i = divmod(x, two_m)
        for y in range(order):
            l, k = divmod(y, two_m)
            power = i + (-k if j else k)
            if j + l == 2:
                power += m
            table[x, y] = ((j + l) % 2) * two_m + power % two_m
    labels = [(f"a^{i}" if i else "e") if j == 0 else (f"a^{i}b" if i else "b") for j in range(2) for i in range(two_m)]
    return FiniteGroup(table, name=f"Q_{order}", labels=labels, check_associativity=False)


def table_from_permutations(perms: Sequence[Permutation], name: str) -> FiniteGroup:
    """
    Tabulate a list of sympy permutations forming a group.

    Elements are sorted by array form, which puts the identity first.
    Products use sympy's left-to-right convention (p*q applies p, then q).
    """
    ordered = sorted(perms, key=lambda p: tuple(p.array_form))
    index = {tuple(p.array_form): k for k, p in enumerate(ordered)}
    n = len(ordered)
    table = np.empty((n, n), dtype=np.int64)
    for a, p in enumerate(ordered):
        for b, q in enumerate(ordered):
            key = tuple((p * q).array_form)
            if key not in index:
                raise GroupSpecError(f"{name}: permutations are not closed under multiplication")
            table[a, b] = index[key]
    return FiniteGroup(table, name=name, labels=[cycle_label(p) for p in ordered], check_associativity=False)


def cycle_label(p: Permutation) -> str:
    """1-based cycle notation, '()' for the identity."""
    cycles = p.cyclic_form
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x + 1) for x in cycle) + ")" for cycle in cycles)


def symmetric_group(n: int) -> FiniteGroup:
    if n == 1:
        return _trivial("S_1")
    group = SymmetricGroup(n)
    return table_from_permutations(list(group.generate()), name=f"S_{n}")


def alternating_group(n: int) -> FiniteGroup:
    if n <= 2:
        return _trivial(f"A_{n}")
    group = AlternatingGroup(n)
    return table_from_permutations(list(group.generate()), name=f"A_{n}")


def _trivial(name: str) -> FiniteGroup:
    return FiniteGroup([[0]], name=name, labels=["e"], check_associativity=False)


def direct_product(factors: Sequence[FiniteGroup], name: str = "") -> FiniteGroup:
    """
    Direct product; element (g_1, ..., g_k) has index g_1 + n_1 g_2 + n_1 n_2 g_3 + ...
    """
    if not factors:
        return _trivial(name or "1")
    table = factors[0].table
    labels: List[str] = [f"({l}" for l in factors[0].labels]
    for factor in factors[1:]:
        n1, n2 = table.shape[0], factor.order
        # combined[a1 + n1*b1, a2 + n1*b2] = table[a1, a2] + n1 * factor.table[b1, b2]
        combined = (table[None, :, None, :] + n1 * factor.table[:, None, :, None])
        table = combined.reshape(n1 * n2, n1 * n2)
        labels = [f"{left}, {right}" for right in factor.labels for left in labels]
    labels = [f"{l})" for l in labels]
    return FiniteGroup(
        table,
        name=name or " x ".join(f.name for f in factors),
        labels=labels if len(factors) > 1 else factors[0].labels,
        check_associativity=False,
    )


def quotient_by_central(group: FiniteGroup, central: Sequence[int], name: str) -> FiniteGroup:
    """
    Quotient by a central subgroup given by its elements.

    Cosets are numbered by their minimal element, so the identity coset is 0.
    """
    members = sorted(set(int(z) for z in central) | {0})
    t = group.table
    for z in members:
        if not (t[z] == t[:, z]).all():
            raise GroupSpecError(f"element {z} is not central in {group.name}")
    coset_of = np.full(group.order, -1, dtype=np.int64)
    representatives: List[int] = []
    for g in range(group.order):
        if coset_of[g] < 0:
            coset_of[t[g, members]] = len(representatives)
            representatives.append(g)
    reps = np.array(representatives)
    table = coset_of[t[np.ix_(reps, reps)]]
    return FiniteGroup(table, name=name, labels=[group.labels[g] for g in representatives], check_associativity=False)


def extraspecial32(kind: str) -> FiniteGroup:
    """
    Central products D8 o D8 (plus type) and D8 o Q8 (minus type).

    Both centres sit at index 2 (r^2 in D8, a^2 in Q8); the quotient identifies
    (z, 1) with (1, z).
    """
    d8 = dihedral_group(4)
    other = d8 if kind == "+" else quaternion_group(8)
    product = direct_product([d8, other])
    z_diag = 2 + 8 * 2
    group = quotient_by_central(product, [0, z_diag], name=f"2^(1+4){kind}")
    return group


def build_named(family: str, param) -> FiniteGroup:
    family_order(family, param)
    if family == "cyclic":
        return cyclic_group(param) if param > 1 else _trivial("Z/1")
    if family == "dihedral":
        return dihedral_group(param)
    if family == "quaternion":
        return quaternion_group(param)
    if family == "symmetric":
        return symmetric_group(param)
    if family == "alternating":
        return alternating_group(param)
    return extraspecial32(param)
