"""
Simplicial Homology
===================
Integral homology from boundary matrices:

    betti_k   = dim C_k - rank d_k - rank d_{k+1}
    torsion_k = invariant factors > 1 of d_{k+1}

Independent boundary matrices can be reduced in worker processes (jobs > 1);
results are identical for any job count.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import BudgetExceeded, DisconnectedComplexError, InvalidInputError
from ecom_sdk.homology.matrix import IntegerMatrix
from ecom_sdk.homology.smith import matrix_rank, smith_normal_form
from ecom_sdk.settings import Budget, checkpoint, current_budget

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti + Z/d_1 + ... + Z/d_m with d_1 | ... | d_m, all d_i > 1."""
    betti: int = 0
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_dict(self, dim: Optional[int] = None) -> dict:
        out = {"betti": self.betti, "torsion": list(self.torsion)}
        if dim is not None:
            out = {"dim": dim, **out}
        return out

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) or "0"


@dataclass
class HomologyReport:
    groups: List[HomologyGroup]
    chi: int
    simplex_counts: List[int]
    reduced: bool = False
    torsion_computed: bool = True

    def betti_numbers(self) -> List[int]:
        return [h.betti for h in self.groups]

    def to_dict(self) -> dict:
        return {
            "homology": [h.to_dict(dim) for dim, h in enumerate(self.groups)],
            "chi": self.chi,
            "simplex_counts": self.simplex_counts,
            "reduced": self.reduced,
            "torsion_computed": self.torsion_computed,
        }


def boundary_matrix(K: SimplicialComplex, k: int) -> IntegerMatrix:
    """d_k from k-simplices (columns) to (k-1)-simplices (rows), sign (-1)^i for deleting vertex i."""
    if k < 1:
        raise ValueError(f"boundary_matrix needs k >= 1, got {k}")
    faces = K.faces(k)
    row_index = K.index(k - 1)
    entries: Dict[Tuple[int, int], int] = {}
    for col, simplex in enumerate(faces):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            entries[(row_index[face], col)] = -1 if i % 2 else 1
        if col % 8192 == 0:
            checkpoint(f"boundary matrix d_{k}")
    return IntegerMatrix(len(row_index), len(faces), entries)


def _reduce(M: IntegerMatrix, torsion: bool) -> Tuple[int, Tuple[int, ...]]:
    if M.is_zero():
        return 0, ()
    if torsion:
        snf = smith_normal_form(M)
        return snf.rank, tuple(snf.torsion)
    return matrix_rank(M), ()


def _reduce_in_worker(vertex_count: int, facets: List[Tuple[int, ...]], k: int, torsion: bool, budget: Budget):
    with budget.active():
        K = SimplicialComplex(vertex_count, facets, check_maximality=False)
        return _reduce(boundary_matrix(K, k), torsion)


def homology(
    K: SimplicialComplex,
    max_dim: Optional[int] = None,
    reduced: bool = False,
    torsion: bool = True,
    jobs: int = 1,
    shortcuts: bool = True,
) -> HomologyReport:
    """
    H_0 .. H_max_dim of K with integer coefficients.

    Args:
        K: the complex
        max_dim: top degree (default: dim K)
        reduced: report reduced homology (betti_0 lowered by one)
        torsion: False computes Betti numbers only, via modular ranks
        jobs: worker processes for independent boundary matrices
        shortcuts: answer cones (contractible) without any elimination

    Raises:
        BudgetExceeded: with the degrees already finished as `partial`
    """
    top = K.dimension if max_dim is None else max_dim
    if top < 0:
        raise InvalidInputError(f"max_dim must be non-negative, got {top}")
    counts = [len(K.faces(k)) for k in range(top + 2)]
    chi = K.euler_characteristic()

    if shortcuts and K.is_cone():
        logger.debug("Complex is a cone; homology is that of a point")
        groups = [HomologyGroup(0 if reduced else 1)] + [HomologyGroup() for _ in range(top)]
        return HomologyReport(groups, chi, K.f_vector(), reduced, torsion)

    ranks: Dict[int, int] = {0: 0}
    torsions: Dict[int, Tuple[int, ...]] = {}
    groups: List[HomologyGroup] = []

    def finish_degrees() -> None:
        while len(groups) <= top and len(groups) + 1 in ranks:
            k = len(groups)
            betti = counts[k] - ranks[k] - ranks[k + 1]
            if k == 0 and reduced and counts[0]:
                betti -= 1
            groups.append(HomologyGroup(betti, torsions.get(k + 1, ())))

    degrees = list(range(1, top + 2))
    try:
        if jobs > 1 and len(degrees) > 1:
            budget = current_budget()
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                futures = {
                    k: executor.submit(_reduce_in_worker, K.vertex_count, K.facets, k, torsion, budget)
                    for k in degrees
                }
                for k in degrees:
                    ranks[k], torsions[k] = futures[k].result()
                    finish_degrees()
        else:
            for k in degrees:
                ranks[k], torsions[k] = _reduce(boundary_matrix(K, k), torsion)
                finish_degrees()
    except BudgetExceeded as e:
        finish_degrees()
        e.partial = [h.to_dict(dim) for dim, h in enumerate(groups)]
        raise

    logger.debug("Homology: %s", ", ".join(str(h) for h in groups))
    return HomologyReport(groups, chi, K.f_vector(), reduced, torsion)


def is_homology_wedge_of_circles(K: SimplicialComplex, report: Optional[HomologyReport] = None) -> Optional[int]:
    """
    r when H_0 = Z, H_1 = Z^r and H_k = 0 for 2 <= k <= dim K, else None.

    A full unreduced report of K with torsion is reused when given.

    Raises:
        DisconnectedComplexError: K is not connected
    """
    components = K.connected_components()
    if components != 1:
        raise DisconnectedComplexError(components)
    usable = (
        report is not None
        and not report.reduced
        and report.torsion_computed
        and len(report.groups) > K.dimension
    )
    groups = (report if usable else homology(K)).groups
    if groups[0] != HomologyGroup(1):
        return None
    if len(groups) < 2:
        return 0
    if groups[1].torsion or any(not h.is_trivial() for h in groups[2:]):
        return None
    return groups[1].betti


def homology_groups(K: SimplicialComplex, max_dim: Optional[int] = None, reduced: bool = False) -> List[HomologyGroup]:
    return homology(K, max_dim=max_dim, reduced=reduced).groups


def euler_from_betti(groups: Sequence[HomologyGroup]) -> int:
    return sum((-1) ** k * h.betti for k, h in enumerate(groups))
