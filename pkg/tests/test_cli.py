import csv
import json
import logging
import math

import pytest

from cli.cli_parser import UsageError, parse_arguments
from cli.main import EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE, main

FAST_GRID = "2000"

FIDELITY_MAX = {'i': int, 'j': int, 't_star': float, 'f_star': float, 'grid_size': int,
                'refine_tol': float, 't_max': float}
PST_REPORT = {
    'graph': str,
    'regular': int,
    'integral': bool,
    'periodic': bool,
    'period': float,
    'best': FIDELITY_MAX,
    'verdict': str,
    'pairs': [{'i': int, 'j': int, 't_star': float, 'f_star': float}],
}
THEOREM = {
    'verified': bool,
    'pst_graphs': [str],
    'graphs': [dict(PST_REPORT, findings=[{'item': str, 'value': object, 'severity': str, 'comment': str}])],
}


def check_schema(value, schema, path="$"):
    if isinstance(schema, dict):
        assert isinstance(value, dict), path
        assert set(value) == set(schema), f"{path}: keys {sorted(value)}"
        for key, sub in schema.items():
            check_schema(value[key], sub, f"{path}.{key}")
    elif isinstance(schema, list):
        assert isinstance(value, list), path
        for k, item in enumerate(value):
            check_schema(item, schema[0], f"{path}[{k}]")
    elif schema is float:
        assert isinstance(value, (int, float)) and not isinstance(value, bool), path
    elif schema is int:
        assert isinstance(value, int) and not isinstance(value, bool), path
    elif schema is not object:
        assert isinstance(value, schema), path


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
            handler.close()
    for handler in handlers:
        if handler not in root.handlers:
            root.addHandler(handler)
    root.setLevel(level)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_arguments_defaults():
    args = parse_arguments(["entry", "name:k4", "1", "2"])
    assert (args.i, args.j, args.samples, args.tmax) == (1, 2, 1001, None)
    assert not args.json and args.output is None and args.verbose == 0


@pytest.mark.parametrize("argv", [
    [],
    ["maxfid", "cube"],
    ["maxfid", "cube", "--pair", "1", "8", "--all-pairs"],
    ["persistency", "cube", "--eps", "0.1"],
    ["hadamard", "k4"],
    ["frobnicate"],
])
def test_parse_arguments_usage_errors(argv):
    with pytest.raises(UsageError):
        parse_arguments(argv)


def test_catalog_lists_every_graph(capsys):
    code, out, _ = run(capsys, "catalog", "--json")
    assert code == EXIT_OK
    rows = json.loads(out)
    keys = [row['key'] for row in rows]
    assert len(keys) == 14
    assert {'cube', 'tutte-coxeter', 'desargues-mate', 'w8'} <= set(keys)
    cube = rows[keys.index('cube')]
    assert (cube['n'], cube['edges'], cube['diameter']) == (8, 12, 3)
    assert cube['spectrum'] == "3:1 1:3 -1:3 -3:1"


def test_spectrum(capsys):
    code, out, _ = run(capsys, "spectrum", "name:k33")
    assert code == EXIT_OK
    assert out == "[Spectrum] k33: 3:1 0:4 -3:1\n"


def test_spectrum_single_vertex(capsys):
    code, out, _ = run(capsys, "spectrum", "path:1")
    assert code == EXIT_OK
    assert out.strip().endswith(": 0:1")


def test_spectrum_non_integral_is_numeric(capsys):
    code, out, _ = run(capsys, "spectrum", "w8", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['integral'] is False
    lambdas = [row['lambda'] for row in payload['numeric']]
    assert lambdas == pytest.approx([2 * math.sqrt(3), 0.0, -2 * math.sqrt(3)], abs=1e-6)


def test_integral_reports_residual(capsys):
    code, out, _ = run(capsys, "integral", "name:w8")
    assert code == EXIT_OK
    assert "not integral; residual x^2 - 12" in out


def test_integral_certificate_json(capsys):
    code, out, _ = run(capsys, "integral", "petersen", "--json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload['integral'] is True
    assert payload['roots'] == [{'lambda': 3, 'multiplicity': 1}, {'lambda': 1, 'multiplicity': 5},
                                {'lambda': -2, 'multiplicity': 4}]


def test_maxfid_pair(capsys):
    code, out, _ = run(capsys, "maxfid", "cube", "--pair", "1", "8", "--grid", FAST_GRID)
    assert code == EXIT_OK
    assert "f*=1.000000 at t*=1.570796" in out


def test_maxfid_all_pairs_csv(capsys, tmp_path):
    target = tmp_path / "k4.csv"
    code, out, _ = run(capsys, "maxfid", "k4", "--all-pairs", "--grid", FAST_GRID, "-o", str(target))
    assert code == EXIT_OK
    assert "no-PST" in out
    with open(target, newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert [(r["i"], r["j"]) for r in rows][:3] == [("1", "2"), ("1", "3"), ("1", "4")]
    assert [float(r["f_star"]) for r in rows] == pytest.approx([0.5] * 6, abs=1e-9)


def test_maxfid_json_file(capsys, tmp_path):
    target = tmp_path / "cube.json"
    code, _, err = run(capsys, "maxfid", "cube", "--all-pairs", "--grid", FAST_GRID, "-o", str(target))
    assert code == EXIT_OK
    assert "[Export]" in err
    report = json.loads(target.read_text(encoding="utf-8"))
    check_schema(report, PST_REPORT)
    assert report['verdict'] == "PST"
    assert (report['best']['i'], report['best']['j']) == (1, 8)


def test_entry_csv_to_stdout(capsys):
    code, out, _ = run(capsys, "entry", "name:k4", "1", "1", "--samples", "3", "--tmax", "1")
    assert code == EXIT_OK
    rows = list(csv.reader(out.splitlines()))
    assert rows[0] == ['t', 're', 'im', 'abs']
    assert len(rows) == 4
    assert float(rows[1][0]) == 0.0
    assert float(rows[1][3]) == pytest.approx(1.0)
    assert float(rows[3][0]) == 1.0


def test_entry_csv_to_file(capsys, tmp_path):
    target = tmp_path / "series.csv"
    code, out, _ = run(capsys, "entry", "path:2", "1", "2", "--samples", "5", "-o", str(target))
    assert code == EXIT_OK
    assert out == ""
    with open(target, newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 5
    for row in rows:
        assert float(row['abs']) == pytest.approx(abs(math.sin(float(row['t']))), abs=1e-12)


def test_persistency_whole_window(capsys):
    code, out, _ = run(capsys, "persistency", "prism6", "1", "1", "--eps", "1.0", "--grid", "2001")
    assert code == EXIT_OK
    assert "length 6.283185" in out


def test_hadamard_k4(capsys):
    code, out, _ = run(capsys, "hadamard", "k4", "--t", repr(math.pi / 4))
    assert code == EXIT_OK
    assert "scaled complex Hadamard, scale 0.5" in out


def test_probtransfer(capsys):
    code, out, _ = run(capsys, "probtransfer")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "[ProbTransfer] no perfect probability transfer; 2 zero-patterns"


@pytest.mark.parametrize("argv, expected", [
    (["spectrum", "torus:3"], EXIT_USAGE),
    (["spectrum", "name:nope"], EXIT_USAGE),
    (["maxfid", "cube", "--pair", "1", "9"], EXIT_USAGE),
    (["maxfid", "cube"], EXIT_USAGE),
    (["entry", "k4", "1", "2", "--samples", "1"], EXIT_USAGE),
    (["probtransfer", "--steps", "0"], EXIT_USAGE),
    (["persistency", "w8", "1", "8", "--eps", "0.1"], EXIT_NUMERICAL),
])
def test_exit_codes(capsys, argv, expected):
    code, out, err = run(capsys, *argv)
    assert code == expected
    assert out == ""
    assert "[Error]" in err


def test_verify_theorem_is_deterministic(capsys):
    first = run(capsys, "verify-theorem", "--grid", FAST_GRID, "--json")
    second = run(capsys, "verify-theorem", "--grid", FAST_GRID, "--json")
    assert first[0] == second[0] == EXIT_OK
    assert first[1] == second[1]
    payload = json.loads(first[1])
    check_schema(payload, THEOREM)
    assert payload['verified'] is True
    assert payload['pst_graphs'] == ['cube']
    assert len(payload['graphs']) == 13
