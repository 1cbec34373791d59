import math

from analyze.engines.hadamard import hadamard_fidelity_flat, is_scaled_complex_hadamard
from analyze.engines.persistency import persistency, persistency_summary
from analyze.engines.probability_transfer import probability_transfer_search, w_k4
from dynamics.propagator import propagator


def run_persistency(graph, args):
    if args.all_pairs:
        return persistency_summary(graph, args.eps, args.grid)
    return persistency(graph, args.i, args.j, args.eps, args.grid)


def run_hadamard(graph, args):
    u = propagator(graph, args.t)
    scale = is_scaled_complex_hadamard(u)
    return {
        'graph': graph.label(),
        't': args.t,
        'hadamard': scale is not None,
        'scale': scale,
        'flat': hadamard_fidelity_flat(u),
        'scale_sqrt_n': None if scale is None else scale * math.sqrt(graph.n),
    }


def run_probtransfer(args):
    return probability_transfer_search(w_k4(), args.steps)


def run_analyze(graph, args):
    if args.command == 'persistency':
        return run_persistency(graph, args)
    if args.command == 'hadamard':
        return run_hadamard(graph, args)
    if args.command == 'probtransfer':
        return run_probtransfer(args)
    raise ValueError(f"no analysis engine for {args.command!r}")
