import logging
import math
import sys
from collections import Counter

import numpy as np

from analyze.aggregator import require_verified, verify_theorem
from analyze.analyze import run_analyze
from cli.cli_parser import UsageError, parse_arguments
from dynamics.fidelity import max_fidelity
from dynamics.propagator import entry_series
from dynamics.pst import default_window, pst_report
from export.export_to_csv import export_pairs_to_csv, export_to_csv, write_entry_series
from export.export_to_json import export_to_json, to_json
from graphs.catalog import GOLDEN_MAXIMA, build_catalog
from graphs.graph import diameter
from parsers.graph_spec import resolve
from spectral.certificate import IntegralCertificate, integral_certificate
from spectral.charpoly import format_polynomial
from spectral.eigen import eigendecompose
from utils.config import DEFAULT_REFINE_TOL, PERSISTENCY_GRID, default_grid
from utils.errors import CertificateError, ConvergenceError, GraphError, GraphSpecError, VerificationError
from utils.logging_utils import log_message, setup_logging

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VERIFICATION = 3


def _emit(args, lines, payload, csv_export=None):
    if args.json:
        print(to_json(payload))
    else:
        for line in lines:
            print(line)
    if args.output:
        if csv_export is not None and args.output.lower().endswith(".csv"):
            csv_export(args.output)
        else:
            export_to_json(payload, args.output)
        print(f"[Export] wrote {args.output}", file=sys.stderr)


def _numeric_spectrum(graph):
    rounded = Counter(round(float(v), 6) + 0.0 for v in eigendecompose(graph).eigenvalues)
    return [(lam, rounded[lam]) for lam in sorted(rounded, reverse=True)]


def _spectrum_text(graph, cert):
    if isinstance(cert, IntegralCertificate):
        return cert.render()
    return " ".join(f"{lam:.6f}:{m}" for lam, m in _numeric_spectrum(graph))


def cmd_catalog(args):
    rows, lines = [], []
    for entry in build_catalog():
        g = entry.graph
        cert = integral_certificate(g)
        row = {
            'key': entry.key,
            'n': g.n,
            'edges': g.edge_count,
            'diameter': diameter(g),
            'spectrum': cert.render(),
            'note': entry.source_note,
        }
        rows.append(row)
        lines.append(f"[Catalog] {entry.key:<15} n={g.n:<3} diameter={row['diameter']}  {row['spectrum']}")
    _emit(args, lines, rows)


def cmd_spectrum(args):
    graph = resolve(args.spec)
    cert = integral_certificate(graph)
    payload = {'graph': graph.label(), **cert.to_dict()}
    if not isinstance(cert, IntegralCertificate):
        payload['numeric'] = [{'lambda': lam, 'multiplicity': m} for lam, m in _numeric_spectrum(graph)]
    _emit(args, [f"[Spectrum] {graph.label()}: {_spectrum_text(graph, cert)}"], payload)


def cmd_integral(args):
    graph = resolve(args.spec)
    cert = integral_certificate(graph)
    verdict = f"integral; {cert.render()}" if isinstance(cert, IntegralCertificate) else cert.render()
    lines = [
        f"[Integral] {graph.label()}: {verdict}",
        f"[Integral] charpoly {format_polynomial(cert.charpoly)}",
    ]
    _emit(args, lines, {'graph': graph.label(), **cert.to_dict()})


def _search_settings(args, graph):
    t_max = args.tmax if args.tmax is not None else default_window(graph)
    grid = args.grid if args.grid is not None else default_grid()
    refine_tol = args.refine_tol if args.refine_tol is not None else DEFAULT_REFINE_TOL
    return t_max, grid, refine_tol


def cmd_maxfid(args):
    graph = resolve(args.spec)
    t_max, grid, refine_tol = _search_settings(args, graph)
    if args.pair:
        result = max_fidelity(graph, args.pair[0], args.pair[1], t_max, grid, refine_tol)
        i, j = result.pair
        line = f"[MaxFid] {graph.label()} pair ({i},{j}): f*={result.f_star:.6f} at t*={result.t_star:.6f}"
        _emit(args, [line], {'graph': graph.label(), **result.to_dict()})
        return

    report = pst_report(graph, t_max, grid, refine_tol)
    best = report.best
    lines = [
        f"[MaxFid] {graph.label()}: best ({best.pair[0]},{best.pair[1]}) f*={best.f_star:.6f}"
        f" at t*={best.t_star:.6f}; {report.verdict}",
        f"[MaxFid] {'i':>3} {'j':>3} {'t_star':>10} {'f_star':>9}",
    ]
    lines += [f"[MaxFid] {r.pair[0]:>3} {r.pair[1]:>3} {r.t_star:>10.6f} {r.f_star:>9.6f}" for r in report.pairs]
    _emit(args, lines, report.to_dict(), lambda path: export_pairs_to_csv(report.pairs, path))


def cmd_verify_theorem(args):
    grid = args.grid if args.grid is not None else default_grid()
    refine_tol = args.refine_tol if args.refine_tol is not None else DEFAULT_REFINE_TOL
    theorem = verify_theorem(grid, refine_tol)

    lines = [f"[Theorem] {'graph':<15} {'f*':>9} {'t*':>10} {'pair':>8} {'published':>12}  verdict"]
    for result in theorem.results:
        best = result.report.best
        golden = GOLDEN_MAXIMA[result.graph]
        published = golden.exact or f"~{golden.value}"
        pair = f"({best.pair[0]},{best.pair[1]})"
        status = result.report.verdict + ("" if not result.failed else " FAILED")
        lines.append(f"[Theorem] {result.graph:<15} {best.f_star:>9.6f} {best.t_star:>10.6f} {pair:>8}"
                     f" {published:>12}  {status}")
    others = [r for r in theorem.results if r.report.verdict != "PST"]
    for result in theorem.results:
        if result.report.verdict == "PST":
            best = result.report.best
            lines.append(f"[Theorem] {result.graph}: PST ({best.pair[0]},{best.pair[1]}) t={best.t_star:.6f};"
                         f" {len(others)} others: no PST")
    _emit(args, lines, theorem.to_dict())
    require_verified(theorem)


def cmd_entry(args):
    graph = resolve(args.spec)
    i, j = graph.check_vertex(args.i), graph.check_vertex(args.j)
    if args.samples < 2:
        raise UsageError(f"--samples must be at least 2, got {args.samples}")
    t_max = args.tmax if args.tmax is not None else 2 * math.pi
    if not t_max > 0:
        raise UsageError(f"--tmax must be positive, got {t_max}")
    times = np.linspace(0.0, t_max, args.samples)
    values = entry_series(graph, i, j, times)
    if args.output:
        export_to_csv(times, values, args.output)
        print(f"[Export] wrote {args.output}", file=sys.stderr)
    elif args.json:
        samples = [{'t': float(t), 're': float(z.real), 'im': float(z.imag), 'abs': float(abs(z))}
                   for t, z in zip(times, values)]
        print(to_json({'graph': graph.label(), 'i': i, 'j': j, 'samples': samples}))
    else:
        write_entry_series(sys.stdout, times, values)


def cmd_persistency(args):
    graph = resolve(args.spec)
    if args.grid is None:
        args.grid = PERSISTENCY_GRID
    result = run_analyze(graph, args)
    if args.all_pairs:
        b = result.best
        line = (f"[Persistency] {graph.label()} eps={result.epsilon:g}: max {result.max_length:.6f}"
                f" mean {result.mean_length:.6f}, longest at ({b.pair[0]},{b.pair[1]})")
    else:
        t0, t1 = result.interval
        line = (f"[Persistency] {graph.label()} ({result.pair[0]},{result.pair[1]}) eps={result.epsilon:g}:"
                f" level {result.level:.6f} on [{t0:.6f}, {t1:.6f}], length {result.length:.6f}")
    _emit(args, [line], {'graph': graph.label(), **result.to_dict()})


def cmd_hadamard(args):
    graph = resolve(args.spec)
    result = run_analyze(graph, args)
    if result['hadamard']:
        line = f"[Hadamard] {graph.label()} t={args.t:.6f}: scaled complex Hadamard, scale {result['scale']:.6g}"
    else:
        line = f"[Hadamard] {graph.label()} t={args.t:.6f}: not a scaled complex Hadamard matrix"
    _emit(args, [line], result)


def cmd_probtransfer(args):
    if args.steps < 1:
        raise UsageError(f"--steps must be positive, got {args.steps}")
    result = run_analyze(None, args)
    count = len(result.patterns)
    if result.hit is None:
        lines = [f"[ProbTransfer] no perfect probability transfer; {count} zero-patterns"]
    else:
        step, i, j = result.hit
        lines = [f"[ProbTransfer] perfect probability transfer at step {step} from {i} to {j};"
                 f" {count} zero-patterns"]
    for k, pattern in enumerate(result.patterns, start=1):
        lines.append(f"[ProbTransfer] pattern {k}: {' '.join(pattern.rows())}")
    _emit(args, lines, result.to_dict())


COMMANDS = {
    'catalog': cmd_catalog,
    'spectrum': cmd_spectrum,
    'integral': cmd_integral,
    'maxfid': cmd_maxfid,
    'verify-theorem': cmd_verify_theorem,
    'entry': cmd_entry,
    'persistency': cmd_persistency,
    'hadamard': cmd_hadamard,
    'probtransfer': cmd_probtransfer,
}


def _log_level(verbose):
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


def main(argv=None):
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(100000)
    try:
        args = parse_arguments(argv)
    except UsageError as e:
        print(f"[Error] {e}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(args.log_file, _log_level(args.verbose))
    log_message(f"pstlab {args.command} started", logging.INFO)
    try:
        COMMANDS[args.command](args)
    except VerificationError as e:
        print(f"[Error] verification failed: {e}", file=sys.stderr)
        return EXIT_VERIFICATION
    except (ConvergenceError, CertificateError) as e:
        print(f"[Error] {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (GraphError, GraphSpecError, UsageError, ValueError) as e:
        print(f"[Error] {e}", file=sys.stderr)
        return EXIT_USAGE
    log_message(f"pstlab {args.command} finished", logging.INFO)
    return EXIT_OK
