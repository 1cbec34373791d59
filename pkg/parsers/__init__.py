from .edge_list_parser import EdgeListParser, parse_edge_list
from .graph_file import GraphFile, read_edge_list
from .graph_spec import GraphSpec, parse_graph_spec, resolve
