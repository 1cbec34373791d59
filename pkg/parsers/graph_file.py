import logging
import os

from parsers.edge_list_parser import EdgeListParser
from utils.errors import EdgeListError
from utils.file_utils import edge_list_extensions, file_exists, read_text

logger = logging.getLogger(__name__)


class GraphFile:
    def __init__(self, file_path):
        self.file_path = file_path
        self.graph_parser = None
        self.graph = None
        self.data = {}

    def parse(self):
        if not file_exists(self.file_path):
            raise EdgeListError(f"no such edge-list file: {self.file_path}")
        extension = os.path.splitext(self.file_path)[1].lower()
        if extension and extension not in edge_list_extensions:
            logger.warning("%s: unexpected extension %s, reading as an edge list", self.file_path, extension)

        name = os.path.splitext(os.path.basename(self.file_path))[0]
        self.graph_parser = EdgeListParser(read_text(self.file_path), name)
        parsed = self.graph_parser.parse()
        self.graph = parsed['graph']

        self.data = {
            'file_path': self.file_path,
            'comments': parsed['comments'],
            'graph': self.graph,
        }
        return self.graph


def read_edge_list(file_path):
    return GraphFile(file_path).parse()
