"""JSON document schemas used by the command line.

Scalars are JSON numbers in float mode.  In exact mode a non-integral
rational is written ``{"num": p, "den": q}`` and an integral one as a plain
JSON integer; both spellings are accepted on input in either mode.
Indices are 1-based throughout.
"""

from fractions import Fraction
from numbers import Integral

import numpy as np

from .hypergraph import WeightedHypergraph
from .hypermatrix import SymHypermatrix
from .majorization import ConvexCombination, Permutation, SubsetIndicator
from .scalar import FLOAT, ScalarMode
from .spectral import as_symmetric


class DocumentError(ValueError):
    """Input that does not match the expected schema."""


def _require(doc, key, kind=None):
    if not isinstance(doc, dict) or key not in doc:
        raise DocumentError(f"missing field {key!r}")
    value = doc[key]
    if kind is not None and not isinstance(value, kind):
        raise DocumentError(f"field {key!r} must be {kind.__name__}")
    return value


def _int(value, what):
    if isinstance(value, bool) or not isinstance(value, Integral):
        raise DocumentError(f"{what} must be an integer, got {value!r}")
    return int(value)


# scalars

def parse_scalar(value, mode: ScalarMode):
    if isinstance(value, dict):
        num = _int(_require(value, "num"), "num")
        den = _int(_require(value, "den"), "den")
        if den <= 0:
            raise DocumentError("den must be positive")
        return mode.coerce(Fraction(num, den))
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise DocumentError(f"not a scalar: {value!r}")
    try:
        return mode.coerce(value)
    except (ValueError, TypeError) as err:
        raise DocumentError(str(err)) from None


def dump_scalar(value, mode: ScalarMode):
    if mode.exact:
        value = Fraction(value)
        if value.denominator == 1:
            return value.numerator
        return {"num": value.numerator, "den": value.denominator}
    return float(value)


# vectors

def parse_vector(doc, mode: ScalarMode):
    entries = _require(doc, "entries", list)
    if not entries:
        raise DocumentError("vector must have at least one entry")
    return [parse_scalar(v, mode) for v in entries]


def dump_vector(values, mode: ScalarMode):
    return {"entries": [dump_scalar(v, mode) for v in values]}


# matrices (always float: the eigensolver is floating point)

def parse_matrix(doc):
    n = _int(_require(doc, "n"), "n")
    rows = _require(doc, "rows", list)
    if n < 1 or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        raise DocumentError(f"rows must form an {n}x{n} array")
    X = np.array([[parse_scalar(v, FLOAT) for v in row] for row in rows])
    try:
        return as_symmetric(X)
    except ValueError as err:
        raise DocumentError(str(err)) from None


def dump_matrix(X):
    X = np.asarray(X, dtype=float)
    return {"n": X.shape[0], "rows": X.tolist()}


# hypermatrices and hypergraphs

def parse_hypermatrix(doc, mode: ScalarMode):
    n = _int(_require(doc, "n"), "n")
    d = _int(_require(doc, "d"), "d")
    support = {}
    for item in _require(doc, "entries", list):
        index = tuple(_int(i, "index entry") for i in _require(item, "index", list))
        if any(b <= a for a, b in zip(index, index[1:])):
            raise DocumentError(f"index {list(index)} is not strictly increasing")
        if index in support:
            raise DocumentError(f"duplicate index {list(index)}")
        support[index] = parse_scalar(_require(item, "value"), mode)
    try:
        return SymHypermatrix(n, d, support)
    except ValueError as err:
        raise DocumentError(str(err)) from None


def dump_hypermatrix(A: SymHypermatrix, mode: ScalarMode):
    return {
        "n": A.n,
        "d": A.d,
        "entries": [{"index": list(k), "value": dump_scalar(v, mode)}
                    for k, v in A.support.items()],
    }


def parse_hypergraph(doc, mode: ScalarMode):
    n = _int(_require(doc, "n"), "n")
    d = _int(_require(doc, "d"), "d")
    edges = []
    for item in _require(doc, "edges", list):
        vertices = tuple(_int(v, "vertex") for v in _require(item, "vertices", list))
        edges.append((vertices, parse_scalar(_require(item, "weight"), mode)))
    try:
        return WeightedHypergraph(n, d, tuple(edges))
    except ValueError as err:
        raise DocumentError(str(err)) from None


def dump_hypergraph(H: WeightedHypergraph, mode: ScalarMode):
    return {
        "n": H.n,
        "d": H.d,
        "edges": [{"vertices": list(e), "weight": dump_scalar(w, mode)}
                  for e, w in H.edges],
    }


# combinations

def dump_subset(s: SubsetIndicator):
    return {"n": s.n, "members": list(s.members)}


def parse_subset(doc):
    n = _int(_require(doc, "n"), "n")
    members = tuple(_int(i, "member") for i in _require(doc, "members", list))
    try:
        return SubsetIndicator(n, members)
    except ValueError as err:
        raise DocumentError(str(err)) from None


def dump_permutation(p: Permutation):
    return {"images": list(p.images)}


def parse_permutation(doc):
    images = tuple(_int(i, "image") for i in _require(doc, "images", list))
    try:
        return Permutation(images)
    except ValueError as err:
        raise DocumentError(str(err)) from None


def dump_combination(comb: ConvexCombination, dump_atom, mode: ScalarMode):
    return {"terms": [{"weight": dump_scalar(w, mode), "atom": dump_atom(a)}
                      for w, a in comb]}


def parse_combination(doc, parse_atom, mode: ScalarMode):
    terms = []
    for item in _require(doc, "terms", list):
        terms.append((parse_scalar(_require(item, "weight"), mode),
                      parse_atom(_require(item, "atom"))))
    try:
        return ConvexCombination(tuple(terms)).check(mode)
    except ValueError as err:
        raise DocumentError(str(err)) from None
