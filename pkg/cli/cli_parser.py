import argparse

from utils.errors import PstlabError


class UsageError(PstlabError, ValueError):
    pass


class CliArgumentParser(argparse.ArgumentParser):
    # usage errors leave through main() with exit code 1
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action='store_true', help="Print a JSON report instead of text")
    common.add_argument("-o", "--output", type=str, help="Write the report to a file (JSON; CSV for entry and for maxfid --all-pairs with a .csv name)")
    common.add_argument("--log-file", type=str, help="Write log records to this file instead of stderr")
    common.add_argument("-v", "--verbose", action='count', default=0, help="More logging (-v info, -vv debug)")
    return common


def _grid_flags(parser):
    parser.add_argument("--grid", type=int, default=None, help="Samples per window (default: PSTLAB_GRID or 20000)")
    parser.add_argument("--refine-tol", type=float, default=None, help="Golden-section time tolerance")


def build_parser():
    common = _common()
    parser = CliArgumentParser(prog="pstlab", description="Quantum walk and perfect state transfer lab")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CliArgumentParser)

    sub.add_parser("catalog", parents=[common], help="List catalog graphs")

    p = sub.add_parser("spectrum", parents=[common], help="Adjacency spectrum of a graph")
    p.add_argument("spec", help="Graph spec (name:KEY, file:PATH, gp:N,K, hypercube:K, p3grid:K, path:N, cycle:N)")

    p = sub.add_parser("integral", parents=[common], help="Exact integrality certificate")
    p.add_argument("spec")

    p = sub.add_parser("maxfid", parents=[common], help="Maximum pair fidelity over a time window")
    p.add_argument("spec")
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--pair", nargs=2, type=int, metavar=("I", "J"))
    target.add_argument("--all-pairs", action='store_true')
    p.add_argument("--tmax", type=float, default=None, help="Window end (default: period, or 6*pi if not integral)")
    _grid_flags(p)

    p = sub.add_parser("verify-theorem", parents=[common], help="Check PST on the thirteen cubic integral graphs")
    _grid_flags(p)

    p = sub.add_parser("entry", parents=[common], help="CSV samples of a propagator entry")
    p.add_argument("spec")
    p.add_argument("i", type=int)
    p.add_argument("j", type=int)
    p.add_argument("--samples", type=int, default=1001)
    p.add_argument("--tmax", type=float, default=None, help="Window end (default: 2*pi)")

    p = sub.add_parser("persistency", parents=[common], help="Epsilon-persistency of a vertex pair")
    p.add_argument("spec")
    p.add_argument("i", type=int, nargs='?')
    p.add_argument("j", type=int, nargs='?')
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--all-pairs", action='store_true', help="Maximum and mean over all pairs")
    p.add_argument("--grid", type=int, default=None, help="Samples of [0, 2*pi] (default 20001)")

    p = sub.add_parser("hadamard", parents=[common], help="Is U(t) a scaled complex Hadamard matrix")
    p.add_argument("spec")
    p.add_argument("--t", type=float, required=True)

    p = sub.add_parser("probtransfer", parents=[common], help="Powers of the K4 unitary W")
    p.add_argument("--steps", type=int, default=1000)

    return parser


def parse_arguments(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == 'persistency' and not args.all_pairs and (args.i is None or args.j is None):
        raise UsageError("persistency needs a vertex pair I J or --all-pairs")
    return args
