"""
Coset Posets and Their Order Complexes
======================================
Elements are Cosets ordered by inclusion of their element bitsets. The nerve
(order complex) has the poset elements as vertices and the chains as
simplices; its facets are the maximal chains, read off the Hasse diagram.
"""

import logging
import random
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import BudgetExceeded, InvalidInputError
from ecom_sdk.groups.finite_group import Coset, FiniteGroup
from ecom_sdk.settings import SharedSettings, checkpoint, current_budget

logger = logging.getLogger(__name__)

AXIOM_CHECK_LIMIT = 2000


class Poset:
    """
    Finite poset of cosets under inclusion.

    Elements are kept in canonical order (size, then increasing indices), so
    any smaller element precedes every element containing it.

    Args:
        elements: distinct cosets
        group: owning group, used for labels
        check: spot-check the order axioms (skipped above 2000 elements)
    """

    def __init__(self, elements: Sequence[Coset], group: Optional[FiniteGroup] = None, check: bool = True):
        ordered = sorted(set(elements), key=Coset.sort_key)
        if len(ordered) != len(elements):
            raise InvalidInputError("poset elements must be distinct cosets")
        self.elements: List[Coset] = ordered
        self.group = group
        self.labels: List[str] = [c.label(group) if group is not None else str(i) for i, c in enumerate(ordered)]
        self._bits = [c.elements.bits for c in ordered]
        self._hasse: Optional[nx.DiGraph] = None
        if check and len(ordered) <= AXIOM_CHECK_LIMIT:
            self._spot_check()

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        a = self._bits[i]
        return a & ~self._bits[j] == 0

    def _spot_check(self, samples: int = 2000) -> None:
        n = len(self.elements)
        if n == 0:
            return
        rng = random.Random(SharedSettings.get().seed)
        for _ in range(samples):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            if not self.leq(a, a):
                raise InvalidInputError(f"order is not reflexive at {a}")
            if a != b and self.leq(a, b) and self.leq(b, a):
                raise InvalidInputError(f"order is not antisymmetric at ({a}, {b})")
            if self.leq(a, b) and self.leq(b, c) and not self.leq(a, c):
                raise InvalidInputError(f"order is not transitive at ({a}, {b}, {c})")

    def strict_relations(self) -> List[Tuple[int, int]]:
        """All pairs i < j (as elements) with i strictly below j."""
        pairs = []
        sizes = [len(c) for c in self.elements]
        for j in range(len(self.elements)):
            bj = self._bits[j]
            for i in range(j):
                if sizes[i] < sizes[j] and self._bits[i] & ~bj == 0:
                    pairs.append((i, j))
        return pairs

    def hasse_diagram(self) -> nx.DiGraph:
        """Covering relation as a DAG (edge i -> j when j covers i)."""
        if self._hasse is None:
            order = nx.DiGraph()
            order.add_nodes_from(range(len(self.elements)))
            order.add_edges_from(self.strict_relations())
            self._hasse = nx.transitive_reduction(order)
        return self._hasse

    def hasse_edges(self) -> List[Tuple[int, int]]:
        return sorted(self.hasse_diagram().edges())

    def minimal_elements(self) -> List[int]:
        hasse = self.hasse_diagram()
        return [v for v in sorted(hasse.nodes) if hasse.in_degree(v) == 0]

    def maximal_elements(self) -> List[int]:
        hasse = self.hasse_diagram()
        return [v for v in sorted(hasse.nodes) if hasse.out_degree(v) == 0]

    def rank(self) -> int:
        """Length of the longest chain minus one."""
        if not self.elements:
            return -1
        return nx.dag_longest_path_length(self.hasse_diagram())

    def stats(self) -> dict:
        hasse = self.hasse_diagram()
        return {
            "elements": len(self.elements),
            "hasse_edges": hasse.number_of_edges(),
            "rank": nx.dag_longest_path_length(hasse) if self.elements else -1,
            "minimal": sum(1 for v in hasse if hasse.in_degree(v) == 0),
            "maximal": sum(1 for v in hasse if hasse.out_degree(v) == 0),
        }


def hasse_edges(P: Poset) -> List[Tuple[int, int]]:
    return P.hasse_edges()


def order_complex(P: Poset) -> SimplicialComplex:
    """
    Nerve of P: facets are the maximal chains, i.e. the maximal paths of the
    Hasse diagram from a minimal to a maximal element.
    """
    hasse = P.hasse_diagram()
    up: Dict[int, List[int]] = {v: sorted(hasse.successors(v)) for v in hasse.nodes}
    limit = current_budget().max_simplices
    chains: List[Tuple[int, ...]] = []

    for start in sorted(v for v in hasse.nodes if hasse.in_degree(v) == 0):
        stack = [(start, (start,))]
        while stack:
            v, chain = stack.pop()
            if not up[v]:
                chains.append(chain)
                if len(chains) > limit:
                    raise BudgetExceeded("max_simplices", limit, len(chains))
                if len(chains) % 4096 == 0:
                    checkpoint("maximal chains")
                continue
            for w in reversed(up[v]):
                stack.append((w, chain + (w,)))

    logger.debug("Order complex: %d elements, %d maximal chains", len(P), len(chains))
    labels = {i: text for i, text in enumerate(P.labels)}
    return SimplicialComplex(len(P), chains, labels=labels, check_maximality=False)
