"""
Graph specifications accepted on the command line:

    name:KEY | KEY          catalog entry (k4, cube, w8, ...)
    file:PATH               edge-list file
    gp:N,K                  generalized Petersen graph
    hypercube:K | p3grid:K  Cartesian powers of P2 / P3
    path:N | cycle:N        basic families
"""
from dataclasses import dataclass
from typing import Tuple, Union

from graphs.catalog import generalized_petersen, get_entry
from graphs.constructors import cycle, hypercube, p3_grid, path
from parsers.graph_file import read_edge_list
from utils.errors import GraphError, GraphSpecError

PARAMETRIC = {
    'gp': (2, generalized_petersen),
    'hypercube': (1, hypercube),
    'p3grid': (1, p3_grid),
    'path': (1, path),
    'cycle': (1, cycle),
}
SCHEMES = ('name', 'file') + tuple(PARAMETRIC)


@dataclass(frozen=True)
class GraphSpec:
    scheme: str
    payload: Union[str, Tuple[int, ...]]

    def resolve(self):
        try:
            if self.scheme == 'name':
                return get_entry(self.payload).graph
            if self.scheme == 'file':
                return read_edge_list(self.payload)
            _, build = PARAMETRIC[self.scheme]
            return build(*self.payload)
        except GraphError as e:
            raise GraphSpecError(f"cannot build {self}: {e}") from e

    def __str__(self):
        if isinstance(self.payload, tuple):
            return f"{self.scheme}:{','.join(map(str, self.payload))}"
        return f"{self.scheme}:{self.payload}"


def parse_graph_spec(text):
    text = text.strip()
    if not text:
        raise GraphSpecError("empty graph spec")
    scheme, sep, payload = text.partition(':')
    if not sep:
        scheme, payload = 'name', text
    scheme = scheme.lower()
    if scheme not in SCHEMES:
        raise GraphSpecError(f"unknown graph spec scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
    if not payload:
        raise GraphSpecError(f"graph spec {text!r} has an empty payload")
    if scheme in ('name', 'file'):
        return GraphSpec(scheme, payload)

    arity, _ = PARAMETRIC[scheme]
    tokens = payload.split(',')
    if len(tokens) != arity:
        raise GraphSpecError(f"{scheme} takes {arity} integer parameter(s), got {payload!r}")
    try:
        return GraphSpec(scheme, tuple(int(t) for t in tokens))
    except ValueError:
        raise GraphSpecError(f"{scheme} parameters must be integers, got {payload!r}")


def resolve(text):
    return parse_graph_spec(text).resolve()
