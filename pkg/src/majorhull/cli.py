"""Command-line front end.

Reads one JSON document (``--input`` or standard input) when the subcommand
needs one, writes one JSON document to standard output.  Exit codes: 0 on
success, 2 when the answer is a negative verdict (not majorized, outside
the hull, infeasible slice sums or degrees), 1 on malformed input.  Every
non-zero exit also writes a one-line JSON diagnostic to standard error.
"""

import argparse
import json
import sys

import numpy as np

from . import documents as doc
from . import hypergraph, hypermatrix, majorization, spectral
from .errors import InfeasibleError, InfeasibleInput, MajorhullError
from .scalar import FLOAT, ScalarMode

EXIT_OK, EXIT_MALFORMED, EXIT_VERDICT = 0, 1, 2

# hypermatrix-side commands default to exact arithmetic
_EXACT_DEFAULT = {"realize", "realize-degrees", "check", "extreme", "reduce"}


class _Verdict(Exception):
    def __init__(self, payload, diagnostic):
        super().__init__(diagnostic.get("message", ""))
        self.payload = payload
        self.diagnostic = diagnostic


def _global_flags():
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--mode", choices=("exact", "float"), default=argparse.SUPPRESS)
    p.add_argument("--eps", type=float, default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--input", default=argparse.SUPPRESS,
                   help="JSON document path; standard input when omitted")
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    return p


def build_parser():
    flags = _global_flags()
    parser = argparse.ArgumentParser(prog="majorhull", parents=[flags],
                                     description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        return sub.add_parser(name, parents=[flags], help=help_)

    add("majorize", 'is x majorized by y; input {"x": vector, "y": vector}')
    add("decompose-vector", "hypersimplex vertex decomposition").add_argument(
        "--k", type=int, required=True)
    add("decompose-rado", 'x as a mix of permutations of y; input {"x", "y"}')
    add("decompose-matrix", "projector decomposition of a hull point").add_argument(
        "--k", type=int, required=True)
    add("fan", "sum of the k largest eigenvalues").add_argument(
        "--k", type=int, required=True)
    p = add("random-hull", "random point of the projector hull")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    for name, help_ in (("realize", "hypermatrix with given slice sums"),
                        ("check", "slice-sum realizability verdict")):
        p = add(name, help_)
        p.add_argument("--d", type=int, required=True)
        p.add_argument("--slice-sums", help="JSON list; else a vector document")
    p = add("realize-degrees", "hypergraph with given weighted degrees")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--degrees", help="JSON list; else a vector document")
    add("extreme", "is the hypermatrix a vertex of its slice-sum polytope")
    add("reduce", "move a hypermatrix to a vertex, keeping slice sums")
    p = add("dimension", "dimension of the slice-sum polytope")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _read_input(args, stdin):
    path = getattr(args, "input", None)
    text = open(path, encoding="utf-8").read() if path else stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise doc.DocumentError(f"invalid JSON: {err}") from None


def _list_flag(raw, args, stdin, mode):
    if raw is None:
        return doc.parse_vector(_read_input(args, stdin), mode)
    try:
        values = json.loads(raw)
    except json.JSONDecodeError as err:
        raise doc.DocumentError(f"invalid JSON list: {err}") from None
    if not isinstance(values, list) or not values:
        raise doc.DocumentError("expected a nonempty JSON list")
    return [doc.parse_scalar(v, mode) for v in values]


def _pair(args, stdin, mode):
    data = _read_input(args, stdin)
    x = doc.parse_vector(doc._require(data, "x"), mode)
    y = doc.parse_vector(doc._require(data, "y"), mode)
    if len(x) != len(y):
        raise doc.DocumentError(f"x has {len(x)} entries, y has {len(y)}")
    return x, y


def _infeasible(err: InfeasibleError, mode):
    return {"error": "infeasible", "message": str(err),
            "lhs": doc.dump_scalar(err.lhs, mode), "rhs": doc.dump_scalar(err.rhs, mode)}


def _mode(args):
    kind = getattr(args, "mode", "exact" if args.command in _EXACT_DEFAULT else "float")
    return ScalarMode(kind, getattr(args, "eps", 1e-9))


def execute(args, stdin=sys.stdin):
    """Run a parsed command; returns the output document."""
    cmd = args.command
    mode = _mode(args)
    eps = mode.eps

    if cmd == "majorize":
        x, y = _pair(args, stdin, mode)
        ok = majorization.is_majorized(x, y, mode)
        if not ok:
            raise _Verdict({"majorized": False},
                           {"error": "not-majorized", "message": "x is not majorized by y"})
        return {"majorized": True}
    if cmd == "decompose-vector":
        x = doc.parse_vector(_read_input(args, stdin), mode)
        comb = majorization.hypersimplex_decompose(x, args.k, mode)
        return doc.dump_combination(comb, doc.dump_subset, mode)
    if cmd == "decompose-rado":
        x, y = _pair(args, stdin, mode)
        comb = majorization.rado_decompose(x, y, mode)
        return doc.dump_combination(comb, doc.dump_permutation, mode)
    if cmd == "decompose-matrix":
        X = doc.parse_matrix(_read_input(args, stdin))
        comb = spectral.grassmann_decompose(X, args.k, eps)
        residual = np.linalg.norm(sum(w * P for w, P in comb) - X)
        return {"combination": doc.dump_combination(comb, doc.dump_matrix, FLOAT),
                "residual": float(residual)}
    if cmd == "fan":
        B = doc.parse_matrix(_read_input(args, stdin))
        value, P = spectral.fan_value(B, args.k)
        return {"value": value, "maximizer": doc.dump_matrix(P)}
    if cmd == "random-hull":
        return doc.dump_matrix(spectral.random_hull_point(args.n, args.k,
                                                          getattr(args, "seed", 0)))
    if cmd == "check":
        R = _list_flag(args.slice_sums, args, stdin, mode)
        ok, lhs, rhs = hypermatrix.realizability(args.d, R, mode)
        out = {"realizable": bool(ok), "lhs": doc.dump_scalar(lhs, mode),
               "rhs": doc.dump_scalar(rhs, mode)}
        if not ok:
            raise _Verdict(out, {"error": "infeasible", "message": "d*max(R) > sum(R)",
                                 "lhs": out["lhs"], "rhs": out["rhs"]})
        return out
    if cmd == "realize":
        R = _list_flag(args.slice_sums, args, stdin, mode)
        return doc.dump_hypermatrix(hypermatrix.realize(args.d, R, mode), mode)
    if cmd == "realize-degrees":
        D = _list_flag(args.degrees, args, stdin, mode)
        return doc.dump_hypergraph(hypergraph.realize_degrees(args.d, D, mode), mode)
    if cmd == "extreme":
        A = doc.parse_hypermatrix(_read_input(args, stdin), mode)
        return {"extreme": hypermatrix.is_extreme(A)}
    if cmd == "reduce":
        A = doc.parse_hypermatrix(_read_input(args, stdin), mode)
        return doc.dump_hypermatrix(hypermatrix.extreme_reduce(A), mode)
    if cmd == "dimension":
        return {"dimension": hypermatrix.polytope_dimension(args.d, args.n)}
    raise doc.DocumentError(f"unknown command {cmd!r}")


def _emit(stream, payload, pretty=False):
    stream.write(json.dumps(payload, indent=2 if pretty else None) + "\n")


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code == 0:
            return EXIT_OK
        _emit(stderr, {"error": "usage", "message": "invalid command line"})
        return EXIT_MALFORMED
    pretty = getattr(args, "pretty", False)
    try:
        _emit(stdout, execute(args, stdin), pretty)
        return EXIT_OK
    except _Verdict as v:
        _emit(stdout, v.payload, pretty)
        _emit(stderr, v.diagnostic)
        return EXIT_VERDICT
    except InfeasibleError as err:
        _emit(stderr, _infeasible(err, _mode(args)))
        return EXIT_VERDICT
    except InfeasibleInput as err:
        _emit(stderr, {"error": type(err).__name__, "message": str(err)})
        return EXIT_VERDICT
    except (doc.DocumentError, MajorhullError, ValueError, TypeError, OSError) as err:
        _emit(stderr, {"error": "malformed-input", "message": str(err)})
        return EXIT_MALFORMED


def main():
    sys.exit(run())
