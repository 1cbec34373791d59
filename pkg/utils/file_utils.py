import os

edge_list_extensions = {".txt", ".edges", ".el"}


def file_exists(file_path):
    return os.path.isfile(file_path)


def read_text(file_path):
    with open(file_path, 'r', encoding='utf-8') as f:
        return f.read()


def write_text(file_path, text):
    directory = os.path.dirname(file_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_path, 'w', encoding='utf-8', newline='') as f:
        f.write(text)
