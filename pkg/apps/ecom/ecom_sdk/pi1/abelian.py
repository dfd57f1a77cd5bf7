"""
Abelianization
==============
pi_1^ab from the relator exponent-sum matrix, and a certificate for genuine
torsion in pi_1 itself.
"""

import logging
from dataclasses import dataclass, field
from typing import Optional, Tuple

import sympy

from ecom_sdk.homology.chains import HomologyGroup
from ecom_sdk.homology.matrix import IntegerMatrix
from ecom_sdk.homology.smith import rank_mod_p, smith_normal_form
from ecom_sdk.pi1.presentation import Presentation
from ecom_sdk.pi1.words import Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^rank + Z/d_1 + ... with d_1 | d_2 | ..., the same normal form as HomologyGroup."""
    rank: int = 0
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    def as_homology_group(self) -> HomologyGroup:
        return HomologyGroup(self.rank, self.torsion)

    def order(self) -> Optional[int]:
        """Group order, or None when infinite."""
        if self.rank:
            return None
        result = 1
        for d in self.torsion:
            result *= d
        return result

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        return str(self.as_homology_group())


def relation_matrix(P: Presentation) -> IntegerMatrix:
    """Rows are relators, columns generators, entries exponent sums."""
    entries = {}
    for i, r in enumerate(P.relators):
        for g, e in enumerate(r.exponent_sums(P.generator_count)):
            if e:
                entries[(i, g)] = e
    return IntegerMatrix(len(P.relators), P.generator_count, entries)


def abelian_invariants(P: Presentation) -> AbelianInvariants:
    snf = smith_normal_form(relation_matrix(P))
    return AbelianInvariants(P.generator_count - snf.rank, tuple(snf.torsion))


@dataclass(frozen=True)
class TorsionCertificate:
    """
    A relator w^p, p prime, with w non-trivial in pi_1^ab.

    Then w has order exactly p in pi_1, so pi_1 has torsion.
    """
    word: Word
    prime: int
    relator_index: int

    def to_dict(self) -> dict:
        return {"word": self.word.to_list(), "prime": self.prime, "relator": self.relator_index}


def torsion_certificate(P: Presentation) -> Optional[TorsionCertificate]:
    """
    Look for a relator that is a prime power of a word surviving in pi_1^ab.

    Survival is checked modulo p: if the exponent vector of w is outside the
    row space of the relation matrix over GF(p), it is outside it over Z too.
    """
    M = relation_matrix(P)
    base_ranks = {}
    for index, relator in enumerate(P.relators):
        w, k = Word(relator).cyclically_reduced().root()
        if k < 2 or not w:
            continue
        for p in sorted(sympy.primefactors(k)):
            root = w ** (k // p)
            if p not in base_ranks:
                base_ranks[p] = rank_mod_p(M, p)
            row = M.rows
            extended = dict(M.entries)
            for g, e in enumerate(root.exponent_sums(P.generator_count)):
                if e:
                    extended[(row, g)] = e
            if rank_mod_p(IntegerMatrix(M.rows + 1, M.cols, extended), p) > base_ranks[p]:
                logger.info("Relator %d is a %d-th power of a word non-trivial in pi_1^ab", index, p)
                return TorsionCertificate(root, p, index)
    return None

