"""
Smith Normal Form and Rank
==========================
Exact sparse elimination over the integers. The pivot is the entry of least
absolute value, ties broken by lowest row and then lowest column; boundary
matrices are full of units, so the scan stops at the first row holding one.

rank_mod_p runs the same elimination over GF(p) for the Betti-only fast path.
"""

import bisect
import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from ecom_sdk.homology.matrix import IntegerMatrix
from ecom_sdk.settings import SharedSettings, checkpoint

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmithNormalFormResult:
    """Invariant factors d_1 | d_2 | ... | d_r of a matrix."""
    invariant_factors: Tuple[int, ...] = field(default_factory=tuple)

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> List[int]:
        return [d for d in self.invariant_factors if d > 1]

    def to_dict(self) -> dict:
        return {"rank": self.rank, "invariant_factors": list(self.invariant_factors)}


class _SparseElimination:
    """Row dicts plus column index sets, mutated in place by unimodular operations."""

    def __init__(self, M: IntegerMatrix):
        self.rows: Dict[int, Dict[int, int]] = M.row_dicts()
        self.cols: Dict[int, Set[int]] = {}
        for (r, c) in M.entries:
            self.cols.setdefault(c, set()).add(r)
        self.live: List[int] = sorted(self.rows)

    def set(self, r: int, c: int, value: int) -> None:
        if value:
            self.rows[r][c] = value
            self.cols.setdefault(c, set()).add(r)
        else:
            self.rows[r].pop(c, None)
            col = self.cols.get(c)
            if col is not None:
                col.discard(r)
                if not col:
                    del self.cols[c]

    def drop_row(self, r: int) -> None:
        for c in self.rows.pop(r):
            col = self.cols[c]
            col.discard(r)
            if not col:
                del self.cols[c]
        i = bisect.bisect_left(self.live, r)
        if i < len(self.live) and self.live[i] == r:
            del self.live[i]

    def pick_pivot(self) -> Optional[Tuple[int, int]]:
        """Least |entry|; ties by lowest row, then column."""
        best: Optional[Tuple[int, int, int]] = None
        empty = []
        for r in self.live:
            row = self.rows[r]
            if not row:
                empty.append(r)
                continue
            c, v = min(row.items(), key=lambda item: (abs(item[1]), item[0]))
            if abs(v) == 1:
                best = (1, r, c)
                break
            if best is None or abs(v) < best[0]:
                best = (abs(v), r, c)
        for r in empty:
            self.rows.pop(r)
            self.live.remove(r)
        return None if best is None else (best[1], best[2])

    def add_row_multiple(self, target: int, source: int, q: int) -> None:
        """row[target] -= q * row[source]."""
        row_t = self.rows[target]
        for c, v in list(self.rows[source].items()):
            self.set(target, c, row_t.get(c, 0) - q * v)

    def isolate(self, r: int, c: int) -> int:
        """Clear row r and column c around the pivot and return |pivot|."""
        while True:
            p = self.rows[r][c]
            for i in sorted(self.cols[c] - {r}):
                q = self.rows[i][c] // p
                if q:
                    self.add_row_multiple(i, r, q)
            others = [i for i in self.cols[c] if i != r]
            if others:
                r = min(others, key=lambda i: (abs(self.rows[i][c]), i))
                continue
            # Column c is the singleton {r}, so column operations touch row r only.
            row = self.rows[r]
            for j in [j for j in row if j != c]:
                self.set(r, j, row[j] - (row[j] // p) * p)
            rest = [j for j in row if j != c]
            if not rest:
                self.drop_row(r)
                return abs(p)
            c = min(rest, key=lambda j: (abs(row[j]), j))


def _divisibility_chain(diagonal: Sequence[int]) -> Tuple[int, ...]:
    units = sum(1 for d in diagonal if d == 1)
    rest = sorted(d for d in diagonal if d != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            a, b = rest[i], rest[j]
            g = math.gcd(a, b)
            rest[i], rest[j] = g, a // g * b
    return tuple([1] * units + rest)


def smith_normal_form(M: IntegerMatrix) -> SmithNormalFormResult:
    """Invariant factors of M over the integers."""
    work = _SparseElimination(M)
    diagonal: List[int] = []
    while True:
        pivot = work.pick_pivot()
        if pivot is None:
            break
        diagonal.append(work.isolate(*pivot))
        if len(diagonal) % 512 == 0:
            checkpoint("smith normal form")
    result = SmithNormalFormResult(_divisibility_chain(diagonal))
    logger.debug("SNF of %dx%d: rank %d, torsion %s", M.rows, M.cols, result.rank, result.torsion)
    return result


def rank_mod_p(M: IntegerMatrix, p: int) -> int:
    """Rank of M over GF(p)."""
    rows: Dict[int, Dict[int, int]] = {}
    for (r, c), v in M.entries.items():
        v %= p
        if v:
            rows.setdefault(r, {})[c] = v
    cols: Dict[int, Set[int]] = {}
    for r, row in rows.items():
        for c in row:
            cols.setdefault(c, set()).add(r)

    rank = 0
    for r in sorted(rows):
        row = rows.pop(r)
        if not row:
            continue
        for c in row:
            cols[c].discard(r)
        c = min(row)
        inv = pow(row[c], -1, p)
        for i in list(cols.get(c, ())):
            target = rows[i]
            factor = target[c] * inv % p
            for j, v in row.items():
                value = (target.get(j, 0) - factor * v) % p
                if value:
                    if j not in target:
                        cols.setdefault(j, set()).add(i)
                    target[j] = value
                elif j in target:
                    del target[j]
                    cols[j].discard(i)
        rank += 1
        if rank % 1024 == 0:
            checkpoint("modular rank")
    return rank


def matrix_rank(M: IntegerMatrix, exact: bool = False, primes: Optional[Sequence[int]] = None) -> int:
    """
    Rank over the rationals.

    The fast path takes ranks modulo two large primes and falls back to exact
    elimination when they disagree.
    """
    if M.is_zero():
        return 0
    if exact:
        return smith_normal_form(M).rank
    primes = list(primes or SharedSettings.get().primes)
    ranks = {rank_mod_p(M, p) for p in primes[:2]}
    if len(ranks) == 1:
        return ranks.pop()
    logger.info("Modular ranks disagree (%s); using exact elimination", sorted(ranks))
    return smith_normal_form(M).rank
