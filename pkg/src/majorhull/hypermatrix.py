"""Strongly off-diagonal symmetric nonnegative hypermatrices with given slice sums.

A symmetric ``d``-hypermatrix that vanishes on every index tuple with a
repeated entry is determined by its values on strictly increasing tuples,
so :class:`SymHypermatrix` stores only those.  The slice sum at ``k`` is
``(d-1)!`` times the total over stored tuples containing ``k``.

Slice sums ``R`` are realizable iff ``d * max(R) <= sum(R)``.
:func:`realize` builds a witness with at most ``n`` stored tuples by
rescaling ``R`` into the hypersimplex ``Delta(d, n)`` and decomposing it.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from . import _linalg
from .errors import InfeasibleError
from .majorization import hypersimplex_decompose
from .scalar import EXACT, ScalarMode

SINGLETON = "singleton"


@dataclass(frozen=True)
class SymHypermatrix:
    """Canonical sparse storage: increasing ``d``-tuples (1-based) -> value > 0."""

    n: int
    d: int
    support: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"order d must be >= 2, got {self.d}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        clean = {}
        for key, value in dict(self.support).items():
            key = tuple(int(i) for i in key)
            if len(key) != self.d:
                raise ValueError(f"index {key} does not have {self.d} entries")
            if any(b <= a for a, b in zip(key, key[1:])):
                raise ValueError(f"index {key} is not strictly increasing")
            if key[0] < 1 or key[-1] > self.n:
                raise ValueError(f"index {key} out of range 1..{self.n}")
            if value < 0:
                raise ValueError(f"negative value {value} at {key}")
            if value != 0:
                clean[key] = value
        object.__setattr__(self, "support", dict(sorted(clean.items())))

    def __len__(self):
        return len(self.support)

    def nnz_full(self):
        """Positive entries of the full symmetric array."""
        return len(self.support) * factorial(self.d)


def entry(A: SymHypermatrix, *index):
    if len(index) != A.d:
        raise ValueError(f"expected {A.d} indices, got {len(index)}")
    if any(not 1 <= i <= A.n for i in index):
        raise IndexError(f"index {index} out of range 1..{A.n}")
    if len(set(index)) < A.d:
        return 0
    return A.support.get(tuple(sorted(index)), 0)


def slice_sums(A: SymHypermatrix) -> list:
    r = [0] * A.n
    for key, value in A.support.items():
        for i in key:
            r[i - 1] += value
    f = factorial(A.d - 1)
    return [f * v for v in r]


def _check_order(d):
    if isinstance(d, bool) or int(d) != d or d < 2:
        raise ValueError(f"order d must be an integer >= 2, got {d!r}")
    return int(d)


def realizability(d: int, R: Sequence, mode: ScalarMode = EXACT):
    """``(ok, lhs, rhs)`` with ``lhs = d*max(R)`` and ``rhs = sum(R)``.

    For ``n < d`` every admissible entry is forced to zero, so only ``R = 0``
    is realizable; the inequality already encodes that.
    """
    d = _check_order(d)
    r = mode.vector(R)
    if not r:
        raise ValueError("slice sums must have at least one entry")
    if any(not mode.le(0, v) for v in r):
        raise ValueError("slice sums must be nonnegative")
    lhs, rhs = d * max(r), sum(r)
    if len(r) < d:
        ok = all(mode.eq(v, 0) for v in r)
    else:
        ok = mode.le(lhs, rhs, slack=len(r))
    return ok, lhs, rhs


def is_realizable(d: int, R: Sequence, mode: ScalarMode = EXACT) -> bool:
    return realizability(d, R, mode)[0]


def realize(d: int, R: Sequence, mode: ScalarMode = EXACT) -> SymHypermatrix:
    """A hypermatrix with slice sums ``R`` and at most ``n`` stored tuples."""
    d = _check_order(d)
    ok, lhs, rhs = realizability(d, R, mode)
    if not ok:
        raise InfeasibleError(f"d*max(R) = {lhs} exceeds sum(R) = {rhs}", lhs, rhs)
    r = mode.vector(R)
    n = len(r)
    if mode.exact and rhs == 0 or not mode.exact and rhs <= mode.eps:
        return SymHypermatrix(n, d, {})
    scale = rhs / d
    point = [v / scale for v in r]
    if not mode.exact:
        point = [min(max(v, 0.0), 1.0) for v in point]
    value_of = scale / factorial(d - 1)
    support = {}
    for w, subset in hypersimplex_decompose(point, d, mode):
        key = subset.members
        support[key] = support.get(key, 0) + value_of * w
    return SymHypermatrix(n, d, support)


def singleton_solution(d: int, n: int, R: Sequence, mode: ScalarMode = EXACT) -> SymHypermatrix:
    """Closed-form unique solution when ``n == d`` or ``n == d + 1``."""
    d = _check_order(d)
    r = mode.vector(R)
    if len(r) != n:
        raise ValueError(f"R has {len(r)} entries, expected n={n}")
    if n not in (d, d + 1):
        raise ValueError(f"closed form needs n in (d, d+1), got n={n}, d={d}")
    ok, lhs, rhs = realizability(d, r, mode)
    if not ok:
        raise InfeasibleError(f"d*max(R) = {lhs} exceeds sum(R) = {rhs}", lhs, rhs)
    f = factorial(d - 1)
    if n == d:
        return SymHypermatrix(n, d, {tuple(range(1, d + 1)): r[0] / f})
    total = rhs / factorial(d)
    support = {}
    for k in range(1, n + 1):
        value = total - r[k - 1] / f
        if not mode.exact:
            value = max(value, 0.0)
        support[tuple(i for i in range(1, n + 1) if i != k)] = value
    return SymHypermatrix(n, d, support)


def polytope_dimension(d: int, n: int):
    """``C(n, d) - n`` for ``n >= d + 2``; :data:`SINGLETON` for ``n`` in ``{d, d+1}``."""
    d = _check_order(d)
    if n < d:
        raise ValueError(f"need n >= d, got n={n}, d={d}")
    if n <= d + 1:
        return SINGLETON
    return comb(n, d) - n


def constraint_matrix(d: int, n: int):
    """``(tuples, rows)``: column ``j`` of ``rows`` is the incidence vector of ``tuples[j]``."""
    tuples = list(combinations(range(1, n + 1), d))
    rows = [[1 if i in t else 0 for t in tuples] for i in range(1, n + 1)]
    return tuples, rows


def constraint_rank(d: int, n: int) -> int:
    """Exact rank of the slice-sum constraint matrix."""
    tuples, rows = constraint_matrix(_check_order(d), n)
    if not tuples:
        return 0
    return _linalg.rank([[Fraction(v) for v in row] for row in rows])


def _incidence_rows(n, keys):
    return [[Fraction(1 if i in key else 0) for key in keys] for i in range(1, n + 1)]


def is_extreme(A: SymHypermatrix) -> bool:
    """True iff the support's incidence vectors are linearly independent."""
    keys = list(A.support)
    if not keys:
        return True
    return _linalg.rank(_incidence_rows(A.n, keys)) == len(keys)


def extreme_reduce(A: SymHypermatrix) -> SymHypermatrix:
    """Move to a vertex of the slice-sum polytope without changing slice sums.

    Each round finds an exact dependence among the support incidence vectors
    and slides along it until a value hits zero (ties go to the
    lexicographically smallest tuple).
    """
    support = dict(A.support)
    while support:
        keys = sorted(support)
        lam = _linalg.null_vector(_incidence_rows(A.n, keys))
        if lam is None:
            break
        if not any(l > 0 for l in lam):
            lam = [-l for l in lam]
        values = [support[key] for key in keys]
        exact = all(isinstance(v, (int, Fraction)) for v in values)
        if not exact:
            lam = [float(l) for l in lam]
        best, t = None, None
        for pos, l in enumerate(lam):
            if l > 0:
                ratio = values[pos] / l
                if t is None or ratio < t:
                    best, t = pos, ratio
        new = {}
        for pos, key in enumerate(keys):
            v = 0 if pos == best else values[pos] - t * lam[pos]
            if exact and v != 0 or not exact and v > 1e-12 * (1 + abs(values[pos])):
                new[key] = v
        support = new
    return SymHypermatrix(A.n, A.d, support)
