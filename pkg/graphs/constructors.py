import itertools
import logging

from graphs.graph import from_edge_list
from utils.errors import GraphError

logger = logging.getLogger(__name__)


def _require_int(value, minimum, what):
    if not isinstance(value, int) or value < minimum:
        raise GraphError(f"{what} must be an integer >= {minimum}, got {value!r}")


def path(n):
    _require_int(n, 1, "path order")
    return from_edge_list(n, [(i, i + 1) for i in range(1, n)], name=f"P{n}")


def cycle(n):
    _require_int(n, 3, "cycle order")
    edges = [(i, i % n + 1) for i in range(1, n + 1)]
    return from_edge_list(n, edges, name=f"C{n}")


def complete(n):
    _require_int(n, 1, "complete graph order")
    return from_edge_list(n, itertools.combinations(range(1, n + 1), 2), name=f"K{n}")


def complete_bipartite(p, q):
    """Parts {1..p} and {p+1..p+q}."""
    _require_int(p, 1, "first part size")
    _require_int(q, 1, "second part size")
    edges = [(i, p + j) for i in range(1, p + 1) for j in range(1, q + 1)]
    return from_edge_list(p + q, edges, name=f"K{p},{q}")


def empty(n):
    _require_int(n, 1, "empty graph order")
    return from_edge_list(n, [], name=f"E{n}")


def cartesian_product(g1, g2, name=None):
    """
    Cartesian product with row-major numbering: the vertex (i, j) of
    V1 x V2 becomes (i - 1) * |V2| + j.
    """
    n2 = g2.n

    def index(i, j):
        return (i - 1) * n2 + j

    edges = []
    for i in range(1, g1.n + 1):
        for j, l in g2.edges:
            edges.append((index(i, j), index(i, l)))
    for i, k in g1.edges:
        for j in range(1, n2 + 1):
            edges.append((index(i, j), index(k, j)))
    if name is None:
        name = f"{g1.label()}x{g2.label()}"
    return from_edge_list(g1.n * n2, edges, name=name)


def power_product(graph, k, name=None):
    _require_int(k, 1, "product power")
    result = graph
    for _ in range(k - 1):
        result = cartesian_product(result, graph)
    if name is None:
        name = graph.label() if k == 1 else f"{graph.label()}^x{k}"
    return result.with_name(name)


def hypercube(k):
    return power_product(path(2), k, name=f"Q{k}")


def p3_grid(k):
    return power_product(path(3), k, name=f"P3^x{k}")
