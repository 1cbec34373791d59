from graphs.graph import from_edge_list
from utils.errors import EdgeListError, GraphError


class EdgeListParser:
    def __init__(self, data, name=""):
        self.data = data
        self.name = name
        self.line_number = 0
        self.parsed_data = {
            'comments': [],     # '#' lines, without the marker
            'n': None,          # vertex count from the first data line
            'edges': [],        # (u, v) pairs in file order
            'graph': None,      # Graph built from n and edges
        }

    def parse(self):
        """
        Parse edge-list text:
        1) Skip blank lines and collect '#' comments.
        2) Read the vertex count from the first data line.
        3) Read one "u v" pair per remaining data line.
        4) Build the Graph; duplicate pairs collapse.
        """
        for self.line_number, raw in enumerate(self.data.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith('#'):
                self.parsed_data['comments'].append(line[1:].strip())
                continue
            if self.parsed_data['n'] is None:
                self._parse_count(line)
            else:
                self._parse_edge(line)

        if self.parsed_data['n'] is None:
            raise EdgeListError("missing vertex count")
        try:
            self.parsed_data['graph'] = from_edge_list(self.parsed_data['n'], self.parsed_data['edges'], self.name)
        except GraphError as e:
            raise EdgeListError(str(e)) from e
        return self.parsed_data

    def _int(self, token):
        try:
            return int(token)
        except ValueError:
            raise EdgeListError(f"expected an integer, got {token!r}", self.line_number)

    def _parse_count(self, line):
        tokens = line.split()
        if len(tokens) != 1:
            raise EdgeListError(f"first data line must hold only the vertex count, got {line!r}", self.line_number)
        n = self._int(tokens[0])
        if n < 1:
            raise EdgeListError(f"vertex count must be positive, got {n}", self.line_number)
        self.parsed_data['n'] = n

    def _parse_edge(self, line):
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(f"edge lines hold two vertices, got {line!r}", self.line_number)
        u, v = (self._int(t) for t in tokens)
        n = self.parsed_data['n']
        if not (1 <= u <= n and 1 <= v <= n):
            raise EdgeListError(f"edge ({u}, {v}) has an endpoint outside 1..{n}", self.line_number)
        if u == v:
            raise EdgeListError(f"edge ({u}, {v}) is a self-loop", self.line_number)
        self.parsed_data['edges'].append((u, v))


def parse_edge_list(text, name=""):
    return EdgeListParser(text, name).parse()['graph']
