"""
Tietze Simplification
=====================
Deterministic rounds of length-non-increasing Tietze moves:

- cyclic reduction, dropping empty relators and duplicates up to
  rotation and inversion
- eliminating a generator that occurs once in a relator, when the
  substitution does not increase the total relator length
- common-piece substitution: if a cyclic piece of r2 of length p also occurs
  in r1 (or r1^-1) and 2p > |r1|, the piece is replaced by the shorter rest of r1

edge_words follow every elimination so they stay expressed in the surviving
generators.
"""

import logging
from typing import Dict, List, Optional, Set, Tuple

from ecom_sdk.errors import SimplificationError
from ecom_sdk.pi1.abelian import abelian_invariants
from ecom_sdk.pi1.presentation import Presentation
from ecom_sdk.pi1.words import Word, generator_of
from ecom_sdk.settings import SharedSettings, checkpoint

logger = logging.getLogger(__name__)


def _deduplicate(relators: List[Word]) -> List[Word]:
    seen: Set[Tuple[int, ...]] = set()
    out: List[Word] = []
    for r in relators:
        r = r.cyclically_reduced()
        if not r:
            continue
        key = r.canonical()
        if key in seen:
            continue
        seen.add(key)
        out.append(r)
    return out


def _find_elimination(relators: List[Word], removed: Set[int]) -> Optional[Tuple[int, int]]:
    """(relator index, generator) for the cheapest admissible elimination."""
    occurrences: Dict[int, int] = {}
    for r in relators:
        for l in r:
            g = generator_of(l)
            occurrences[g] = occurrences.get(g, 0) + 1

    best = None
    for i, r in enumerate(relators):
        counts: Dict[int, int] = {}
        for l in r:
            counts[generator_of(l)] = counts.get(generator_of(l), 0) + 1
        for g in sorted(counts):
            if counts[g] != 1 or g in removed:
                continue
            elsewhere = occurrences[g] - 1
            growth = elsewhere * (len(r) - 2) - len(r)
            if growth <= 0:
                key = (growth, len(r), i, g)
                if best is None or key < best:
                    best = key
    return None if best is None else (best[2], best[3])


def _eliminate(relators: List[Word], edge_words: Dict, index: int, g: int) -> Tuple[List[Word], Dict]:
    r = relators[index]
    position = next(k for k, l in enumerate(r) if generator_of(l) == g)
    rotated = Word(r[position:] + r[:position])
    rest = Word(rotated[1:])
    # x^e rest = 1, so x = rest^-1 when e = +1 and x = rest when e = -1
    image = ~rest if rotated[0] > 0 else rest
    images = {g: image}
    others = [w.substitute(images) for k, w in enumerate(relators) if k != index]
    words = {edge: w.substitute(images) for edge, w in edge_words.items()}
    return others, words


def _shorten_by_piece(relators: List[Word], max_checks: int, max_length: int) -> Tuple[Optional[List[Word]], int]:
    """Apply the first common-piece substitution found; also return the comparisons spent."""
    holders: Dict[int, Set[int]] = {}
    for i, r in enumerate(relators):
        for g in r.generators():
            holders.setdefault(g, set()).add(i)

    checks = 0
    order = sorted(range(len(relators)), key=lambda i: (len(relators[i]), i))
    for i in order:
        r1 = relators[i]
        n = len(r1)
        if n > max_length:
            break
        partners = sorted(set().union(*(holders[g] for g in r1.generators())) - {i})
        shapes = [s for word in (r1, ~r1) for s in word.rotations()]
        for j in partners:
            r2 = relators[j]
            if len(r2) < n:
                continue
            for t in r2.rotations():
                for s in shapes:
                    checks += 1
                    if checks > max_checks:
                        return None, checks
                    p = 0
                    while p < n and s[p] == t[p]:
                        p += 1
                    if 2 * p > n:
                        shorter = (~Word(s[p:])) * Word(t[p:])
                        updated = list(relators)
                        updated[j] = shorter
                        return updated, checks
    return None, checks


def _renumber(P: Presentation, relators: List[Word], edge_words: Dict, removed: Set[int]) -> Presentation:
    survivors = [g for g in range(P.generator_count) if g not in removed]
    mapping = {old: new for new, old in enumerate(survivors)}
    return Presentation(
        generator_count=len(survivors),
        relators=[r.renumber(mapping) for r in relators],
        labels=[P.labels[g] for g in survivors] if P.labels else [],
        edge_words={edge: w.renumber(mapping) for edge, w in edge_words.items()},
        vertex_labels=dict(P.vertex_labels),
    )


def tietze_simplify(
    P: Presentation,
    rounds: Optional[int] = None,
    check_invariants: bool = False,
    max_pair_checks: Optional[int] = None,
    max_relator_length: Optional[int] = None,
) -> Presentation:
    """
    Simplify P by Tietze moves until a fixed point or the round budget.

    Args:
        P: input presentation
        rounds: maximum number of rounds (config tietze.rounds)
        check_invariants: recompute abelian invariants after every round
        max_pair_checks: cap on piece comparisons per round
        max_relator_length: longest relator used as the substituting word

    Returns:
        A presentation of the same group with no more generators and no
        greater total relator length.
    """
    settings = SharedSettings.get()
    rounds = settings.tietze_rounds if rounds is None else rounds
    max_pair_checks = settings.tietze_max_pair_checks if max_pair_checks is None else max_pair_checks
    max_relator_length = settings.tietze_max_relator_length if max_relator_length is None else max_relator_length

    if check_invariants:
        expected = abelian_invariants(P)

    relators = _deduplicate(P.relators)
    edge_words = dict(P.edge_words)
    removed: Set[int] = set()

    for round_no in range(rounds):
        checkpoint("tietze")
        changed = False

        while True:
            found = _find_elimination(relators, removed)
            if found is None:
                break
            index, g = found
            relators, edge_words = _eliminate(relators, edge_words, index, g)
            relators = _deduplicate(relators)
            removed.add(g)
            changed = True

        budget = max_pair_checks
        while budget > 0:
            shorter, spent = _shorten_by_piece(relators, budget, max_relator_length)
            budget -= spent
            if shorter is None:
                break
            relators = _deduplicate(shorter)
            changed = True

        if check_invariants:
            current = abelian_invariants(_renumber(P, relators, edge_words, removed))
            if current != expected:
                raise SimplificationError(f"round {round_no} changed abelian invariants from {expected} to {current}")

        logger.debug(
            "Tietze round %d: %d generators, %d relators, length %d",
            round_no, P.generator_count - len(removed), len(relators), sum(len(r) for r in relators),
        )
        if not changed:
            break

    return _renumber(P, relators, edge_words, removed)
