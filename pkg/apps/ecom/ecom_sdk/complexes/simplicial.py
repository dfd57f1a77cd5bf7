"""
Simplicial Complexes by Facets
==============================
A complex is stored as its list of maximal faces. k-simplices are streamed
from the facets on demand and cached per dimension, so nothing larger than
the requested skeleton is ever materialised.

Export format (JSON):
    {"vertices": n, "facets": [[...], ...], "labels": {"0": "e", ...}}
"""

import itertools
import json
import logging
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx

from ecom_sdk.errors import InvalidInputError
from ecom_sdk.settings import checkpoint, reserve

logger = logging.getLogger(__name__)

Face = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class Simplex:
    """Strictly increasing vertex tuple."""
    vertices: Face

    def __post_init__(self):
        if any(a >= b for a, b in zip(self.vertices, self.vertices[1:])):
            raise InvalidInputError(f"simplex vertices must be strictly increasing: {self.vertices}")

    @property
    def dimension(self) -> int:
        return len(self.vertices) - 1

    def faces(self) -> List["Simplex"]:
        """Codimension-one faces, i-th vertex deleted for i = 0..dim."""
        v = self.vertices
        return [Simplex(v[:i] + v[i + 1:]) for i in range(len(v))]


class SimplicialComplex:
    """
    Facet-list simplicial complex on vertices 0..vertex_count-1.

    Args:
        vertex_count: number of vertices
        facets: iterable of vertex collections; non-maximal ones are dropped
        labels: optional vertex index -> description text
        check_maximality: drop facets contained in other facets
    """

    def __init__(
        self,
        vertex_count: int,
        facets: Iterable[Iterable[int]],
        labels: Optional[Dict[int, str]] = None,
        check_maximality: bool = True,
    ):
        if vertex_count < 0:
            raise InvalidInputError("vertex_count must be non-negative")
        normalized = set()
        for facet in facets:
            face = tuple(sorted(set(int(v) for v in facet)))
            if not face:
                continue
            if face[0] < 0 or face[-1] >= vertex_count:
                raise InvalidInputError(f"facet {face} has vertices outside 0..{vertex_count - 1}")
            normalized.add(face)

        kept = self._maximal(normalized) if check_maximality else list(normalized)
        covered = set(itertools.chain.from_iterable(kept))
        kept.extend((v,) for v in range(vertex_count) if v not in covered)

        self.vertex_count = vertex_count
        self.facets: List[Face] = sorted(kept)
        self.labels: Dict[int, str] = dict(labels or {})
        self._faces: Dict[int, List[Face]] = {}
        self._index: Dict[int, Dict[Face, int]] = {}

    @staticmethod
    def _maximal(faces: Iterable[Face]) -> List[Face]:
        """Keep faces not contained in another; containment is tested with per-vertex bitmasks."""
        ordered = sorted(faces, key=lambda f: (-len(f), f))
        holders: Dict[int, int] = {}
        kept: List[Face] = []
        for face in ordered:
            common = -1
            for v in face:
                common &= holders.get(v, 0)
                if not common:
                    break
            if common:
                continue
            bit = 1 << len(kept)
            for v in face:
                holders[v] = holders.get(v, 0) | bit
            kept.append(face)
        return kept

    @cached_property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def faces(self, k: int) -> List[Face]:
        """All k-faces, deduplicated and lexicographically sorted."""
        if k < 0:
            raise InvalidInputError(f"dimension must be non-negative, got {k}")
        if k not in self._faces:
            if k > self.dimension:
                self._faces[k] = []
            elif k == 0:
                self._faces[k] = [(v,) for v in range(self.vertex_count)]
            else:
                estimate = sum(math.comb(len(f), k + 1) for f in self.facets)
                reserve("max_simplices", min(estimate, self._count_bound(k)), bytes_each=48 + 8 * (k + 1))
                found = set()
                for i, facet in enumerate(self.facets):
                    if i % 1024 == 0:
                        checkpoint(f"{k}-simplices")
                    found.update(itertools.combinations(facet, k + 1))
                self._faces[k] = sorted(found)
                logger.debug("%d %d-simplices from %d facets", len(found), k, len(self.facets))
        return self._faces[k]

    def _count_bound(self, k: int) -> int:
        return math.comb(self.vertex_count, k + 1)

    def index(self, k: int) -> Dict[Face, int]:
        """Position of each k-face in faces(k)."""
        if k not in self._index:
            self._index[k] = {face: i for i, face in enumerate(self.faces(k))}
        return self._index[k]

    def f_vector(self) -> List[int]:
        return [len(self.faces(k)) for k in range(self.dimension + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self.f_vector()))

    def is_cone(self) -> bool:
        """True when one vertex lies in every facet; such a complex is contractible."""
        if not self.facets:
            return False
        common = set(self.facets[0])
        for facet in self.facets[1:]:
            common.intersection_update(facet)
            if not common:
                return False
        return True

    def graph(self) -> nx.Graph:
        """The 1-skeleton."""
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.faces(1))
        return g

    def connected_components(self) -> int:
        if self.vertex_count == 0:
            return 0
        return nx.number_connected_components(self.graph())

    def is_connected(self) -> bool:
        return self.vertex_count > 0 and nx.is_connected(self.graph())

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "facets": [list(f) for f in self.facets],
            "labels": {str(v): text for v, text in sorted(self.labels.items())},
        }

    def stats(self) -> dict:
        sizes: Dict[int, int] = {}
        for f in self.facets:
            sizes[len(f)] = sizes.get(len(f), 0) + 1
        return {
            "vertices": self.vertex_count,
            "facet_count": len(self.facets),
            "facet_sizes": {str(size): count for size, count in sorted(sizes.items())},
            "dimension": self.dimension,
            "f_vector": self.f_vector(),
            "euler_characteristic": self.euler_characteristic(),
        }

    def __repr__(self) -> str:
        return f"SimplicialComplex(vertices={self.vertex_count}, facets={len(self.facets)}, dim={self.dimension})"


def k_simplices(K: SimplicialComplex, k: int) -> List[Simplex]:
    return [Simplex(face) for face in K.faces(k)]


def euler_characteristic(K: SimplicialComplex) -> int:
    return K.euler_characteristic()


def f_vector(K: SimplicialComplex) -> List[int]:
    return K.f_vector()


def dimension(K: SimplicialComplex) -> int:
    return K.dimension


def is_cone(K: SimplicialComplex) -> bool:
    return K.is_cone()


def export_complex(K: SimplicialComplex) -> str:
    """Deterministic JSON text of the complex export format."""
    return json.dumps(K.to_dict(), sort_keys=True, separators=(",", ":"))


def complex_from_dict(document: dict) -> SimplicialComplex:
    try:
        n = int(document["vertices"])
        facets: Sequence = document["facets"]
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidInputError(f"complex document needs 'vertices' and 'facets': {e}") from e
    if n < 1:
        raise InvalidInputError(f"complex document has no vertices ({n})")
    try:
        labels = {int(k): str(v) for k, v in (document.get("labels") or {}).items()}
        return SimplicialComplex(n, facets, labels=labels)
    except InvalidInputError:
        raise
    except (AttributeError, TypeError, ValueError) as e:
        raise InvalidInputError(f"malformed complex document: {e}") from e


def load_complex(source: Union[str, Path]) -> SimplicialComplex:
    try:
        with open(source, "r", encoding="utf-8") as f:
            document = json.load(f)
    except (OSError, json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InvalidInputError(f"cannot read complex from {source}: {e}") from e
    return complex_from_dict(document)
