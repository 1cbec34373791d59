from utils.file_utils import write_text


def serialize(graph):
    lines = []
    if graph.name:
        lines.append(f"# {graph.name}")
    lines.append(str(graph.n))
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def write_edge_list(graph, file_path):
    write_text(file_path, serialize(graph))
