"""
Edge-Path Presentations
=======================
pi_1(|K|, base) from the 2-skeleton: one generator per edge outside a
spanning tree, one relator per triangle. Edge u-v with u < v is the letter
x_uv; triangle u < v < w gives x_uv x_vw x_uw^-1 with tree letters dropped.

Export format:
    {"generators": n, "labels": [["g", "h"], ...], "relators": [[1, -2, ...], ...]}
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from ecom_sdk.complexes.simplicial import SimplicialComplex
from ecom_sdk.errors import DisconnectedComplexError, InvalidInputError
from ecom_sdk.pi1.words import Word
from ecom_sdk.settings import checkpoint

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]
TREES = ("auto", "star", "bfs")


@dataclass
class Presentation:
    """
    Finitely presented group.

    Attributes:
        generator_count: number of generators
        relators: relator words
        labels: the edge (u, v) each generator came from
        edge_words: every edge of the source complex as a word in the generators
        vertex_labels: optional text for the vertices named in labels
    """
    generator_count: int
    relators: List[Word] = field(default_factory=list)
    labels: List[Edge] = field(default_factory=list)
    edge_words: Dict[Edge, Word] = field(default_factory=dict)
    vertex_labels: Dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        for r in self.relators:
            for l in r:
                if abs(l) > self.generator_count:
                    raise InvalidInputError(f"relator {list(r)} uses letter {l} beyond {self.generator_count} generators")

    @classmethod
    def from_relators(cls, generator_count: int, relators) -> "Presentation":
        return cls(generator_count, [Word(r) for r in relators])

    def total_length(self) -> int:
        return sum(len(r) for r in self.relators)

    def edge_word(self, u: int, v: int) -> Word:
        """Word for the oriented edge u -> v."""
        if u < v:
            return self.edge_words[(u, v)]
        return ~self.edge_words[(v, u)]

    def to_dict(self) -> dict:
        def name(v: int) -> str:
            return self.vertex_labels.get(v, str(v))

        return {
            "generators": self.generator_count,
            "labels": [[name(u), name(v)] for u, v in self.labels],
            "relators": [r.to_list() for r in self.relators],
        }


def spanning_tree(K: SimplicialComplex, base: int, tree: str = "auto") -> Tuple[List[Edge], str]:
    """
    Edges of a spanning tree of the 1-skeleton and the strategy used.

    "star" needs base adjacent to every vertex (true for AfCom at the
    identity); "bfs" grows a breadth-first tree from base; "auto" takes the
    star when possible.
    """
    if tree not in TREES:
        raise InvalidInputError(f"unknown tree strategy {tree!r}; expected one of {', '.join(TREES)}")
    graph = K.graph()
    if not nx.is_connected(graph):
        raise DisconnectedComplexError(nx.number_connected_components(graph))
    if not 0 <= base < K.vertex_count:
        raise InvalidInputError(f"base vertex {base} is not a vertex")

    is_star = graph.degree(base) == K.vertex_count - 1
    if tree == "star" and not is_star:
        raise InvalidInputError(f"vertex {base} is not adjacent to every vertex; no star tree")
    if tree == "star" or (tree == "auto" and is_star):
        edges = [tuple(sorted((base, v))) for v in range(K.vertex_count) if v != base]
        return sorted(edges), "star"
    edges = [tuple(sorted(e)) for e in nx.bfs_tree(graph, base).edges()]
    return sorted(edges), "bfs"


def pi1_presentation(K: SimplicialComplex, base: Optional[int] = None, tree: str = "auto") -> Presentation:
    """
    Presentation of pi_1(|K|, base).

    Args:
        K: connected complex
        base: base vertex (default: smallest vertex)
        tree: "auto", "star" or "bfs"

    Raises:
        DisconnectedComplexError: K has more than one component
    """
    base = 0 if base is None else base
    tree_edges, strategy = spanning_tree(K, base, tree)
    in_tree = set(tree_edges)
    edges = K.faces(1)

    labels: List[Edge] = []
    edge_words: Dict[Edge, Word] = {}
    for edge in edges:
        if edge in in_tree:
            edge_words[edge] = Word()
        else:
            labels.append(edge)
            edge_words[edge] = Word([len(labels)])

    relators: List[Word] = []
    for i, (u, v, w) in enumerate(K.faces(2)):
        if i % 4096 == 0:
            checkpoint("triangle relators")
        relator = (edge_words[(u, v)] * edge_words[(v, w)]) * ~edge_words[(u, w)]
        if relator:
            relators.append(relator)

    logger.debug("pi_1 presentation (%s tree): %d generators, %d relators", strategy, len(labels), len(relators))
    return Presentation(len(labels), relators, labels, edge_words, dict(K.labels))
