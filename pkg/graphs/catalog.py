"""
Named graphs: the thirteen connected cubic integral graphs plus the
non-integral eight-vertex graph W.

Every entry is checked against its expected spectrum when it is built,
so a typo in a hand-written edge list fails loudly instead of feeding a
wrong graph into the dynamics.
"""
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Tuple

import networkx as nx

from graphs.constructors import cartesian_product, complete, complete_bipartite, cycle, hypercube, path
from graphs.graph import Graph, from_edge_list, is_connected, is_regular
from spectral.certificate import IntegralCertificate, integral_certificate
from utils.errors import CertificateError, GraphError, SpectrumMismatchError

logger = logging.getLogger(__name__)

Spectrum = Tuple[Tuple[int, int], ...]

# points 1..10; line r is vertex 10 + r
MATE_LINES = (
    (1, 2, 3),
    (1, 4, 6),
    (1, 7, 8),
    (2, 4, 8),
    (2, 5, 9),
    (3, 5, 6),
    (3, 7, 9),
    (4, 5, 10),
    (6, 7, 10),
    (8, 9, 10),
)


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    graph: Graph
    expected_spectrum: Spectrum
    source_note: str
    expected_residual: Optional[Tuple[int, ...]] = None

    @property
    def integral(self):
        return self.expected_residual is None

    @property
    def cubic(self):
        return is_regular(self.graph) == 3


@dataclass(frozen=True)
class GoldenMaximum:
    """Published all-pairs maximum fidelity of a catalog member."""
    value: float
    tol: float
    t_star: Optional[float] = None
    exact: Optional[str] = None

    def accepts(self, f_star):
        return abs(f_star - self.value) <= self.tol


EXACT_TOL = 1e-6
APPROX_TOL = 0.02

GOLDEN_MAXIMA = {
    'k4': GoldenMaximum(0.5, EXACT_TOL, math.pi / 4, "1/2"),
    'k33': GoldenMaximum(2 / 3, EXACT_TOL, math.pi / 3, "2/3"),
    'prism3': GoldenMaximum(0.9, APPROX_TOL),
    'prism6': GoldenMaximum(64 / 81, EXACT_TOL, None, "64/81"),
    'cube': GoldenMaximum(1.0, EXACT_TOL, math.pi / 2, "1"),
    'petersen': GoldenMaximum(8 / 15, EXACT_TOL, math.pi, "8/15"),
    'z10': GoldenMaximum(0.85, APPROX_TOL),
    'trunctet': GoldenMaximum(2 / 3, EXACT_TOL, math.pi, "2/3"),
    'dk23': GoldenMaximum((5 + math.sqrt(5)) / 8, EXACT_TOL, 2 * math.pi / 5, "(5+sqrt5)/8"),
    'desargues': GoldenMaximum(0.83, APPROX_TOL),
    'desargues-mate': GoldenMaximum(0.83, APPROX_TOL),
    'nauru': GoldenMaximum(2 / 3, EXACT_TOL, math.pi, "2/3"),
    'tutte-coxeter': GoldenMaximum(0.452, APPROX_TOL),
}


def generalized_petersen(n, k):
    """Outer cycle u_i = i, inner vertices v_i = n + i with v_i ~ v_{i+k}, spokes u_i ~ v_i."""
    if not isinstance(n, int) or not isinstance(k, int):
        raise GraphError(f"GP parameters must be integers, got {n!r}, {k!r}")
    if n < 3 or not (1 <= k and 2 * k < n):
        raise GraphError(f"GP({n},{k}) needs n >= 3 and 1 <= k < n/2")
    edges = []
    for i in range(1, n + 1):
        edges.append((i, i % n + 1))
        edges.append((n + i, n + (i - 1 + k) % n + 1))
        edges.append((i, n + i))
    return from_edge_list(2 * n, edges, name=f"GP({n},{k})")


def w_graph():
    edges = [(1, i) for i in range(2, 8)] + [(j, 8) for j in range(2, 8)]
    return from_edge_list(8, edges, name="W")


def z_graph():
    """
    K3,3 with two vertices of one side replaced by triangles x1x2x3 and
    y1y2y3. Vertices: x = 1..3, y = 4..6, the kept vertex a3 = 7, the
    other side b = 8..10; x_k and y_k inherit the edge to b_k.
    """
    edges = [(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]
    for k in range(1, 4):
        b = 7 + k
        edges += [(k, b), (3 + k, b), (7, b)]
    return from_edge_list(10, edges, name="Z")


def truncated_tetrahedron():
    """Vertex (v, w), w != v, numbered in lexicographic order over K4."""
    darts = [(v, w) for v in range(1, 5) for w in range(1, 5) if v != w]
    index = {dart: pos for pos, dart in enumerate(darts, start=1)}
    edges = []
    for v in range(1, 5):
        around = [index[d] for d in darts if d[0] == v]
        edges += itertools.combinations(around, 2)
    edges += [(index[(v, w)], index[(w, v)]) for v, w in darts if v < w]
    return from_edge_list(12, edges, name="truncated tetrahedron")


def dk23():
    # copy one: 1, 2 of degree 3 and 3, 4, 5 of degree 2; copy two mirrors it on 6..10
    edges = [(u, v) for u in (1, 2) for v in (3, 4, 5)]
    edges += [(u, v) for u in (9, 10) for v in (6, 7, 8)]
    edges += [(3, 6), (4, 7), (5, 8)]
    return from_edge_list(10, edges, name="DK2,3")


def tutte_coxeter():
    """
    Incidence graph of 2-subsets of {1..6} (points) and perfect matchings
    of K6 (lines), interleaved: point k is vertex 2k - 1, line k is 2k.
    """
    points = list(itertools.combinations(range(1, 7), 2))
    lines = sorted(_perfect_matchings(tuple(range(1, 7))))
    edges = []
    for p, point in enumerate(points, start=1):
        for q, line in enumerate(lines, start=1):
            if point in line:
                edges.append((2 * p - 1, 2 * q))
    return from_edge_list(30, edges, name="Tutte-Coxeter")


def _perfect_matchings(vertices):
    if not vertices:
        return [()]
    first, rest = vertices[0], vertices[1:]
    matchings = []
    for partner in rest:
        remaining = tuple(v for v in rest if v != partner)
        matchings += [((first, partner),) + m for m in _perfect_matchings(remaining)]
    return matchings


def _mate_graph():
    edges = [(10 + r, point) for r, line in enumerate(MATE_LINES, start=1) for point in line]
    return from_edge_list(20, edges, name="Desargues mate")


def six_cycle_counts(graph):
    """Number of 6-cycles through each vertex, by simple path enumeration."""
    adjacency = {v: graph.neighbors(v) for v in range(1, graph.n + 1)}

    def closed_walks(start, v, visited, remaining):
        if remaining == 1:
            return int(start in adjacency[v])
        total = 0
        for w in adjacency[v]:
            if w not in visited:
                visited.add(w)
                total += closed_walks(start, w, visited, remaining - 1)
                visited.remove(w)
        return total

    # every cycle is traversed once in each direction
    return [closed_walks(v, v, {v}, 6) // 2 for v in range(1, graph.n + 1)]


def distance_profiles(graph):
    """Per-vertex tuple (#vertices at distance 0, 1, 2, ...)."""
    profiles = []
    for v in range(1, graph.n + 1):
        lengths = Counter(nx.single_source_shortest_path_length(graph.nx_graph, v).values())
        profiles.append(tuple(lengths[d] for d in range(max(lengths) + 1)))
    return profiles


def certify_non_isomorphic(g, h):
    """
    Name the first invariant that tells g and h apart: cheap counts
    first, a full VF2 search last. Raises CertificateError when the
    graphs are isomorphic.
    """
    if (g.n, g.edge_count) != (h.n, h.edge_count):
        return "order"
    if sorted(six_cycle_counts(g)) != sorted(six_cycle_counts(h)):
        return "six-cycle counts"
    if sorted(distance_profiles(g)) != sorted(distance_profiles(h)):
        return "distance profiles"
    logger.debug("cheap invariants agree on %s and %s, running VF2", g.label(), h.label())
    if not nx.is_isomorphic(g.nx_graph, h.nx_graph):
        return "vf2"
    raise CertificateError(f"{g.label()} and {h.label()} are isomorphic")


def _gate(key, graph, spectrum, note, residual=None):
    graph = graph.with_name(key)
    if not is_connected(graph):
        raise SpectrumMismatchError(f"{key}: constructed graph is disconnected")
    cert = integral_certificate(graph)
    if residual is None:
        if not isinstance(cert, IntegralCertificate) or cert.spectrum != dict(spectrum):
            raise SpectrumMismatchError(f"{key}: expected spectrum {dict(spectrum)}, got {cert.render()}")
    elif isinstance(cert, IntegralCertificate) or cert.residual != tuple(residual) \
            or dict(cert.roots) != dict(spectrum):
        raise SpectrumMismatchError(f"{key}: expected a non-integral spectrum, got {cert.render()}")
    logger.info("built catalog entry %s (%d vertices)", key, graph.n)
    return CatalogEntry(key, graph, tuple(sorted(spectrum, reverse=True)), note,
                        None if residual is None else tuple(residual))


def mate_desargues():
    desargues = generalized_petersen(10, 3)
    mate = _mate_graph()
    if integral_certificate(mate) != integral_certificate(desargues):
        raise SpectrumMismatchError("Desargues mate is not cospectral with GP(10,3)")
    separated_by = certify_non_isomorphic(mate, desargues)
    logger.info("Desargues mate differs from GP(10,3) by %s", separated_by)
    return mate


def _cubic(entry):
    if not entry.cubic:
        raise SpectrumMismatchError(f"{entry.key}: expected a cubic graph")
    return entry


def thirteen():
    return [_cubic(entry) for entry in (
        _gate('k4', complete(4), ((3, 1), (-1, 3)), "complete graph K4"),
        _gate('k33', complete_bipartite(3, 3), ((3, 1), (0, 4), (-3, 1)),
              "complete bipartite K3,3, parts 1..3 and 4..6"),
        _gate('prism3', cartesian_product(cycle(3), path(2)), ((3, 1), (1, 1), (0, 2), (-2, 2)),
              "triangular prism C3 x P2, row-major"),
        _gate('prism6', cartesian_product(cycle(6), path(2)),
              ((3, 1), (2, 2), (1, 1), (0, 4), (-1, 1), (-2, 2), (-3, 1)),
              "hexagonal prism C6 x P2, row-major"),
        _gate('cube', hypercube(3), ((3, 1), (1, 3), (-1, 3), (-3, 1)), "3-cube P2 x P2 x P2, row-major"),
        _gate('petersen', generalized_petersen(5, 2), ((3, 1), (1, 5), (-2, 4)), "Petersen graph GP(5,2)"),
        _gate('z10', z_graph(), ((3, 1), (2, 1), (1, 3), (-1, 2), (-2, 3)),
              "K3,3 with two same-side vertices replaced by triangles"),
        _gate('trunctet', truncated_tetrahedron(), ((3, 1), (2, 3), (0, 2), (-1, 3), (-2, 3)),
              "truncated tetrahedron, line graph of the subdivided K4"),
        _gate('dk23', dk23(), ((3, 1), (2, 1), (1, 2), (0, 2), (-1, 2), (-2, 1), (-3, 1)),
              "two copies of K2,3 matched on their degree-2 vertices"),
        _gate('desargues', generalized_petersen(10, 3), _symmetric({3: 1, 2: 4, 1: 5}),
              "Desargues graph GP(10,3)"),
        _gate('desargues-mate', mate_desargues(), _symmetric({3: 1, 2: 4, 1: 5}),
              "incidence graph of a 10_3 configuration cospectral with Desargues"),
        _gate('nauru', generalized_petersen(12, 5), _symmetric({3: 1, 2: 6, 1: 3}) + ((0, 4),),
              "Nauru graph GP(12,5)"),
        _gate('tutte-coxeter', tutte_coxeter(), _symmetric({3: 1, 2: 9}) + ((0, 10),),
              "incidence graph of 2-subsets and perfect matchings of {1..6}"),
    )]


def _symmetric(positive):
    return tuple((s * lam, m) for lam, m in positive.items() for s in (1, -1))


@lru_cache(maxsize=1)
def build_catalog():
    entries = thirteen()
    entries.append(_gate('w8', w_graph(), ((0, 6),), "two hubs joined through six degree-2 vertices",
                         residual=(1, 0, -12)))
    keys = [e.key for e in entries]
    assert len(set(keys)) == len(keys), "catalog keys must be unique"
    return tuple(entries)


def catalog_keys():
    return [entry.key for entry in build_catalog()]


def get_entry(key):
    for entry in build_catalog():
        if entry.key == key:
            return entry
    raise GraphError(f"unknown catalog graph {key!r}; known: {', '.join(catalog_keys())}")
