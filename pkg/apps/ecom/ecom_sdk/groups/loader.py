"""
Group Spec Loader
=================
Turns a group-spec document into a FiniteGroup.

Accepted shapes (JSON, UTF-8):
    {"kind": "table", "table": [[...], ...]}
    {"kind": "permutations", "degree": k, "generators": [[[1, 2, 3], [4, 5]], ...]}
    {"kind": "named", "family": "symmetric", "param": 3}
    {"kind": "product", "factors": [spec, spec, ...]}

Permutation points are 1-based, matching the cycle notation used in labels.
"""

import json
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from sympy.combinatorics import Permutation, PermutationGroup

from ecom_sdk.errors import GroupSpecError
from ecom_sdk.groups.finite_group import FiniteGroup
from ecom_sdk.groups.named import build_named, direct_product, family_order, table_from_permutations
from ecom_sdk.settings import current_budget

logger = logging.getLogger(__name__)

KINDS = ("table", "permutations", "named", "product")


@dataclass(frozen=True)
class GroupSpec:
    """Parsed group-spec document; payload keeps the kind-specific fields."""
    kind: str
    payload: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> "GroupSpec":
        if not isinstance(document, dict):
            raise GroupSpecError(f"group spec must be a JSON object, got {type(document).__name__}")
        kind = document.get("kind")
        if kind not in KINDS:
            raise GroupSpecError(f"unknown spec kind {kind!r}; expected one of {', '.join(KINDS)}")
        payload = {k: v for k, v in document.items() if k != "kind"}
        return cls(kind, payload)

    @classmethod
    def named(cls, family: str, param) -> "GroupSpec":
        return cls("named", {"family": family, "param": param})

    def to_dict(self) -> Dict[str, Any]:
        out = {"kind": self.kind}
        out.update(self.payload)
        return out

    def expected_order(self) -> Optional[int]:
        """Order known before building the table, or None for permutation specs."""
        if self.kind == "table":
            return len(self._table())
        if self.kind == "named":
            return family_order(self.payload.get("family"), self.payload.get("param"))
        if self.kind == "product":
            orders = [GroupSpec.from_dict(f).expected_order() for f in self._factors()]
            return None if None in orders else math.prod(orders)
        return None

    def _table(self) -> List[Any]:
        table = self.payload.get("table")
        if not isinstance(table, list) or not table:
            raise GroupSpecError("table spec needs a non-empty 'table' list")
        return table

    def _factors(self) -> List[Dict[str, Any]]:
        factors = self.payload.get("factors")
        if not isinstance(factors, list) or not factors:
            raise GroupSpecError("product spec needs a non-empty 'factors' list")
        return factors

    def describe(self) -> str:
        if self.kind == "named":
            return f"{self.payload.get('family')} {self.payload.get('param')}"
        if self.kind == "product":
            return " x ".join(GroupSpec.from_dict(f).describe() for f in self._factors())
        if self.kind == "permutations":
            return f"permutation group of degree {self.payload.get('degree')}"
        return f"table of order {len(self._table())}"


def _check_order(order: int) -> None:
    limit = current_budget().max_group_order
    if order > limit:
        raise GroupSpecError(f"group order {order} exceeds max_group_order {limit}")


def _parse_permutation(cycles, degree: int) -> Permutation:
    if not isinstance(cycles, list):
        raise GroupSpecError(f"generator must be a list of cycles, got {cycles!r}")
    zero_based = []
    for cycle in cycles:
        if not isinstance(cycle, list) or not cycle:
            raise GroupSpecError(f"cycle must be a non-empty list of points, got {cycle!r}")
        for point in cycle:
            if isinstance(point, bool) or not isinstance(point, int) or not 1 <= point <= degree:
                raise GroupSpecError(f"cycle point {point!r} outside 1..{degree}")
        if len(set(cycle)) != len(cycle):
            raise GroupSpecError(f"cycle {cycle} repeats a point")
        zero_based.append([p - 1 for p in cycle])
    try:
        return Permutation(zero_based, size=degree)
    except ValueError as e:
        raise GroupSpecError(f"invalid permutation {cycles}: {e}") from e


def _load_permutations(payload: Dict[str, Any]) -> FiniteGroup:
    degree = payload.get("degree")
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise GroupSpecError(f"permutation spec needs a positive integer 'degree', got {degree!r}")
    generators = payload.get("generators")
    if not isinstance(generators, list):
        raise GroupSpecError("permutation spec needs a 'generators' list")
    perms = [_parse_permutation(g, degree) for g in generators] or [Permutation(list(range(degree)))]
    group = PermutationGroup(perms)
    _check_order(int(group.order()))
    return table_from_permutations(list(group.generate()), name=payload.get("name", f"<{len(perms)} perms on {degree}>"))


def _load_table(payload: Dict[str, Any]) -> FiniteGroup:
    table = GroupSpec("table", payload)._table()
    if any(not isinstance(row, list) or len(row) != len(table) for row in table):
        raise GroupSpecError("table must be square")
    if any(isinstance(x, bool) or not isinstance(x, int) for row in table for x in row):
        raise GroupSpecError("table entries must be integers")
    _check_order(len(table))
    return FiniteGroup(table, name=payload.get("name", f"G{len(table)}"), labels=payload.get("labels"), check_associativity=False)


def load_group(spec: Union[GroupSpec, Dict[str, Any]]) -> FiniteGroup:
    """
    Build the FiniteGroup a spec describes.

    Args:
        spec: a GroupSpec or the raw JSON document

    Returns:
        FiniteGroup satisfying all table invariants

    Raises:
        GroupSpecError: malformed spec or table, unknown family, order over budget
    """
    if not isinstance(spec, GroupSpec):
        spec = GroupSpec.from_dict(spec)

    expected = spec.expected_order()
    if expected is not None:
        _check_order(expected)

    if spec.kind == "table":
        group = _load_table(spec.payload)
    elif spec.kind == "permutations":
        group = _load_permutations(spec.payload)
    elif spec.kind == "named":
        group = build_named(spec.payload.get("family"), spec.payload.get("param"))
    else:
        factors = [load_group(f) for f in spec._factors()]
        group = direct_product(factors, name=spec.payload.get("name", ""))

    if group.order <= current_budget().associativity_check_limit:
        group.verify_associativity()
    else:
        logger.info("Associativity of %s (order %d) trusted without checking", group.name, group.order)
    logger.debug("Loaded %s (order %d)", group.name, group.order)
    return group


def read_spec(source: Union[str, Path]) -> GroupSpec:
    """Read a spec file; '-' reads stdin."""
    try:
        if str(source) == "-":
            document = json.load(sys.stdin)
        else:
            with open(source, "r", encoding="utf-8") as f:
                document = json.load(f)
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise GroupSpecError(f"{source}: invalid JSON ({e})") from e
    except OSError as e:
        raise GroupSpecError(f"{source}: {e.strerror or e}") from e
    return GroupSpec.from_dict(document)


def parse_spec_json(text: str) -> GroupSpec:
    try:
        return GroupSpec.from_dict(json.loads(text))
    except json.JSONDecodeError as e:
        raise GroupSpecError(f"--spec-json: invalid JSON ({e})") from e
