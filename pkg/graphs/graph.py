"""
Undirected simple graphs on vertices 1..n.

A Graph is immutable: it stores its edge set as a sorted tuple of pairs
(u, v) with u < v and derives the 0/1 adjacency matrix on demand. Equality
and hashing ignore the display name, so two constructions of the same
labelled graph compare equal.
"""
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Tuple, Union

import networkx as nx
import numpy as np

from utils.errors import GraphError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: Tuple[Edge, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer, got {self.n!r}")
        previous = None
        for edge in self.edges:
            u, v = edge
            if not (1 <= u < v <= self.n):
                raise GraphError(f"edge {edge} is not a normalized pair within 1..{self.n}")
            if previous is not None and edge <= previous:
                raise GraphError("edges must be sorted and free of duplicates")
            previous = edge

    @cached_property
    def adj(self):
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u - 1, v - 1] = 1
            a[v - 1, u - 1] = 1
        a.setflags(write=False)
        return a

    @cached_property
    def nx_graph(self):
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return nx.freeze(g)

    @property
    def edge_count(self):
        return len(self.edges)

    def label(self):
        return self.name or f"graph(n={self.n}, m={self.edge_count})"

    def check_vertex(self, i):
        if not isinstance(i, (int, np.integer)) or not (1 <= i <= self.n):
            raise GraphError(f"vertex {i!r} is outside 1..{self.n}")
        return int(i)

    def neighbors(self, i):
        i = self.check_vertex(i)
        return [j + 1 for j in np.flatnonzero(self.adj[i - 1])]

    def with_name(self, name):
        return Graph(self.n, self.edges, name)

    def check_invariants(self):
        a = self.adj
        assert np.array_equal(a, a.T), "adjacency is not symmetric"
        assert not np.any(np.diag(a)), "adjacency has a nonzero diagonal"
        assert np.all((a == 0) | (a == 1)), "adjacency has entries outside {0,1}"
        return True


def from_edge_list(n, edges, name=""):
    """Build a Graph from 1-indexed vertex pairs; duplicate pairs collapse."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise GraphError(f"vertex count must be a positive integer, got {n!r}")
    normalized = set()
    for pair in edges:
        u, v = (int(x) for x in pair)
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 1..{n}")
        if u == v:
            raise GraphError(f"edge {(u, v)} is a self-loop")
        normalized.add((min(u, v), max(u, v)))
    graph = Graph(int(n), tuple(sorted(normalized)), name)
    graph.check_invariants()
    return graph


def degree_sequence(graph):
    return [int(d) for d in graph.adj.sum(axis=1)]


def max_degree(graph):
    return max(degree_sequence(graph))


def is_regular(graph) -> Optional[int]:
    degrees = set(degree_sequence(graph))
    return degrees.pop() if len(degrees) == 1 else None


def is_connected(graph):
    return nx.is_connected(graph.nx_graph)


def distance(graph, i, j) -> Optional[int]:
    """Breadth-first shortest-path length; None when j is unreachable from i."""
    i, j = graph.check_vertex(i), graph.check_vertex(j)
    lengths = nx.single_source_shortest_path_length(graph.nx_graph, i)
    return lengths.get(j)


def diameter(graph) -> Union[int, float]:
    # math.inf marks a disconnected graph
    if not is_connected(graph):
        return math.inf
    return nx.diameter(graph.nx_graph)


@dataclass(frozen=True)
class DistanceReport:
    pair: Tuple[int, int]
    distance: Optional[int]
    diameter: Union[int, float]

    @property
    def reachable(self):
        return self.distance is not None

    @property
    def antipodal(self):
        return self.reachable and self.distance == self.diameter


def distance_report(graph, i, j):
    return DistanceReport((i, j), distance(graph, i, j), diameter(graph))


def antipodal_pairs(graph):
    dia = diameter(graph)
    if dia == math.inf:
        raise GraphError(f"{graph.label()} is disconnected; antipodal pairs are undefined")
    pairs = []
    for i, lengths in sorted(nx.all_pairs_shortest_path_length(graph.nx_graph)):
        pairs.extend((i, j) for j, d in lengths.items() if i < j and d == dia)
    return sorted(pairs)


def bipartition(graph):
    """Two-colouring as sorted vertex lists, the part holding the smallest vertex first; None if an odd cycle exists."""
    if not nx.is_bipartite(graph.nx_graph):
        return None
    colors = nx.bipartite.color(graph.nx_graph)
    parts = sorted([sorted(v for v, c in colors.items() if c == side) for side in (0, 1)])
    return parts[0], parts[1]


def is_bipartite(graph):
    return bipartition(graph) is not None


def to_networkx(graph):
    """A mutable networkx copy labelled 1..n."""
    return nx.Graph(graph.nx_graph)
