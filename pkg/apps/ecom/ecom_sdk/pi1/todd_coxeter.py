"""
Todd-Coxeter Coset Enumeration
==============================
HLT strategy over the trivial subgroup: every live coset scans and fills
every relator, then gets all of its undefined images defined. Coincidences
are processed with a union-find forest and a queue.

Column 2i holds generator i and column 2i+1 its inverse. A completed run
gives the exact group order and the regular action on cosets; running out of
cosets gives "unknown", never a wrong order.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

from ecom_sdk.pi1.presentation import Presentation
from ecom_sdk.pi1.words import Word, generator_of
from ecom_sdk.settings import checkpoint, current_budget

logger = logging.getLogger(__name__)

UNDEFINED = -1


def _column(letter: int) -> int:
    return 2 * generator_of(letter) + (1 if letter < 0 else 0)


@dataclass
class CosetEnumeration:
    """
    Attributes:
        order: group order, or None when enumeration did not complete
        cosets_used: cosets defined during the run
        table: completed coset table (cosets renumbered 0..order-1, coset 0 = identity)
    """
    order: Optional[int]
    cosets_used: int
    table: List[List[int]] = field(default_factory=list, repr=False)

    @property
    def completed(self) -> bool:
        return self.order is not None

    def act(self, coset: int, word: Word) -> int:
        """Coset reached from `coset` by reading `word` left to right."""
        for letter in word:
            coset = self.table[coset][_column(letter)]
        return coset

    def to_dict(self) -> dict:
        if self.order is None:
            return {"order": "unknown", "cosets_used": self.cosets_used}
        return {"order": self.order}


class _CosetTable:
    def __init__(self, generator_count: int, max_cosets: int, memory_mb: int):
        self.width = 2 * generator_count
        self.table: List[List[int]] = [[UNDEFINED] * self.width]
        self.parent: List[int] = [0]
        self.max_cosets = max_cosets
        # row list + ints, roughly
        self.max_rows_for_memory = max(1, memory_mb * 1024 * 1024 // (64 + 8 * max(1, self.width)))

    def define(self, alpha: int, column: int) -> bool:
        """New coset beta = alpha * letter; False when the budget is exhausted."""
        beta = len(self.table)
        if beta >= self.max_cosets or beta >= self.max_rows_for_memory:
            return False
        self.table.append([UNDEFINED] * self.width)
        self.parent.append(beta)
        self.table[alpha][column] = beta
        self.table[beta][column ^ 1] = alpha
        if beta % 8192 == 0:
            checkpoint("todd-coxeter")
        return True

    def rep(self, k: int) -> int:
        root = k
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[k] != root:
            self.parent[k], k = root, self.parent[k]
        return root

    def merge(self, a: int, b: int, queue: List[int]) -> None:
        phi, psi = self.rep(a), self.rep(b)
        if phi != psi:
            low, high = min(phi, psi), max(phi, psi)
            self.parent[high] = low
            queue.append(high)

    def coincidence(self, alpha: int, beta: int) -> None:
        table = self.table
        queue: List[int] = []
        self.merge(alpha, beta, queue)
        i = 0
        while i < len(queue):
            gamma = queue[i]
            i += 1
            for column in range(self.width):
                delta = table[gamma][column]
                if delta == UNDEFINED:
                    continue
                table[delta][column ^ 1] = UNDEFINED
                mu, nu = self.rep(gamma), self.rep(delta)
                if table[mu][column] != UNDEFINED:
                    self.merge(nu, table[mu][column], queue)
                elif table[nu][column ^ 1] != UNDEFINED:
                    self.merge(mu, table[nu][column ^ 1], queue)
                else:
                    table[mu][column] = nu
                    table[nu][column ^ 1] = mu

    def live(self, k: int) -> bool:
        return self.parent[k] == k

    def scan_and_fill(self, alpha: int, columns: List[int]) -> bool:
        """Scan a relator from alpha, defining cosets as needed; False on budget exhaustion."""
        table = self.table
        f, b = alpha, alpha
        i, j = 0, len(columns) - 1
        while True:
            while i <= j and table[f][columns[i]] != UNDEFINED:
                f = table[f][columns[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return True
            while j >= i and table[b][columns[j] ^ 1] != UNDEFINED:
                b = table[b][columns[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return True
            if i == j:
                table[f][columns[i]] = b
                table[b][columns[i] ^ 1] = f
                return True
            if not self.define(f, columns[i]):
                return False


def todd_coxeter(P: Presentation, max_cosets: Optional[int] = None) -> CosetEnumeration:
    """
    Order of the group presented by P, when enumeration completes.

    Args:
        P: the presentation
        max_cosets: coset definitions allowed (default: budget max_cosets)
    """
    budget = current_budget()
    max_cosets = budget.max_cosets if max_cosets is None else max_cosets
    if max_cosets < 1:
        raise ValueError("max_cosets must be at least 1")
    ct = _CosetTable(P.generator_count, max_cosets, budget.memory_mb)
    relators = [[_column(l) for l in r] for r in P.relators if r]

    alpha = 0
    while True:
        while alpha < len(ct.table):
            if ct.live(alpha):
                for columns in relators:
                    if not ct.scan_and_fill(alpha, columns):
                        return _unknown(ct)
                    if not ct.live(alpha):
                        break
                if ct.live(alpha):
                    for column in range(ct.width):
                        if ct.table[alpha][column] == UNDEFINED and not ct.define(alpha, column):
                            return _unknown(ct)
            alpha += 1
        live = [k for k in range(len(ct.table)) if ct.live(k)]
        # coincidences can reopen rows that were already complete
        reopened = next((k for k in live if UNDEFINED in ct.table[k]), None)
        if reopened is None:
            break
        alpha = reopened

    number = {k: i for i, k in enumerate(live)}
    table = [[number[ct.rep(ct.table[k][c])] for c in range(ct.width)] for k in live]
    logger.debug("Todd-Coxeter completed: order %d using %d cosets", len(live), len(ct.table))
    return CosetEnumeration(len(live), len(ct.table), table)


def _unknown(ct: _CosetTable) -> CosetEnumeration:
    logger.info("Todd-Coxeter stopped after %d cosets without completing", len(ct.table))
    return CosetEnumeration(None, len(ct.table))


def group_order(P: Presentation, max_cosets: Optional[int] = None) -> Optional[int]:
    return todd_coxeter(P, max_cosets).order
