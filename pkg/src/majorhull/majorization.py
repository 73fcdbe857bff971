"""Majorization and constructive convex decompositions.

Three decompositions live here:

* :func:`hypersimplex_decompose` writes a point of the hypersimplex
  ``{x in [0,1]^n : sum(x) = k}`` as a convex combination of at most ``n``
  0/1 vectors with exactly ``k`` ones (greedy, deterministic).
* :func:`rado_decompose` writes ``x`` as a convex combination of at most
  ``n`` permutations of ``y`` whenever ``x`` is majorized by ``y``.
* :func:`caratheodory_reduce` prunes an arbitrary convex combination of
  equal-sum vectors down to an affinely independent subset.

Indices exposed to callers are 1-based.
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import _linalg
from .errors import NotMajorizedError, OutsideHullError, ReconstructionError
from .scalar import FLOAT, ScalarMode

_GREEDY_TOL = 1e-12


@dataclass(frozen=True)
class SubsetIndicator:
    """0/1 vector of length ``n`` with ones at ``members`` (1-based)."""

    n: int
    members: tuple

    def __post_init__(self):
        members = tuple(int(i) for i in self.members)
        object.__setattr__(self, "members", members)
        if any(b <= a for a, b in zip(members, members[1:])):
            raise ValueError(f"members must be strictly increasing: {members}")
        if members and (members[0] < 1 or members[-1] > self.n):
            raise ValueError(f"members out of range 1..{self.n}: {members}")

    def vector(self, one=1):
        out = [0 * one] * self.n
        for i in self.members:
            out[i - 1] = one
        return out


@dataclass(frozen=True)
class Permutation:
    """Bijection on ``1..n``; ``apply(y)[i] = y[images[i]]`` (1-based)."""

    images: tuple

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    def apply(self, y):
        return [y[i - 1] for i in self.images]


@dataclass(frozen=True)
class ConvexCombination:
    """Weighted atoms; weights are nonnegative and sum to one."""

    terms: tuple  # of (weight, atom)

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple((w, a) for w, a in self.terms))
        if not self.terms:
            raise ValueError("a convex combination needs at least one term")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def weights(self):
        return [w for w, _ in self.terms]

    @property
    def atoms(self):
        return [a for _, a in self.terms]

    def check(self, mode: ScalarMode = FLOAT):
        """Raise ``ValueError`` unless the weights form a convex combination."""
        n = len(self.terms)
        for w in self.weights:
            if not mode.le(0, w):
                raise ValueError(f"negative weight {w}")
        if not mode.eq(sum(self.weights), 1, slack=n):
            raise ValueError(f"weights sum to {sum(self.weights)}, not 1")
        return self


def _sorted_desc(v):
    """Stable descending order: returns ``(values, order)`` with 0-based order."""
    order = sorted(range(len(v)), key=lambda i: -v[i])
    return [v[i] for i in order], order


def _check_same_length(x, y):
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    if len(x) == 0:
        raise ValueError("vectors must have at least one entry")


def is_majorized(x: Sequence, y: Sequence, mode: ScalarMode = FLOAT) -> bool:
    """True iff ``x`` is majorized by ``y``.

    Every top-``k`` partial sum of the descending rearrangement of ``x`` must
    be bounded by that of ``y`` and the totals must agree.  Float mode allows
    ``(k+1)*eps`` slack at prefix length ``k``.
    """
    _check_same_length(x, y)
    xs, _ = _sorted_desc(mode.vector(x))
    ys, _ = _sorted_desc(mode.vector(y))
    n = len(xs)
    px = py = 0 * xs[0]
    for k in range(n - 1):
        px += xs[k]
        py += ys[k]
        if not mode.le(px, py, slack=k + 1):
            return False
    return mode.eq(px + xs[-1], py + ys[-1], slack=n)


def hypersimplex_decompose(x: Sequence, k: int, mode: ScalarMode = FLOAT) -> ConvexCombination:
    """Greedy vertex decomposition of a hypersimplex point.

    Each round takes the ``k`` largest residual coordinates (ties to the
    smallest index) and peels off as much as keeps the residual inside the
    shrinking hypersimplex ``{0 <= x_i <= t, sum = k t}``.  Every round pins a
    coordinate at 0 or at ``t``, so at most ``n`` rounds are needed.

    Returns a combination of :class:`SubsetIndicator` atoms in the order found.
    """
    if isinstance(k, bool) or int(k) != k:
        raise ValueError(f"k must be an integer, got {k!r}")
    k = int(k)
    xs = mode.vector(x)
    n = len(xs)
    if n == 0:
        raise ValueError("vector must have at least one entry")
    if not 0 <= k <= n:
        raise OutsideHullError(f"k={k} outside 0..{n}")
    for v in xs:
        if not (mode.le(0, v) and mode.le(v, 1)):
            raise OutsideHullError(f"coordinate {v} outside [0, 1]")
    if not mode.eq(sum(xs), k, slack=n):
        raise OutsideHullError(f"coordinates sum to {sum(xs)}, expected {k}")

    one = mode.coerce(1)
    if not mode.exact:
        xs = [min(max(v, 0.0), 1.0) for v in xs]
    t = one
    weights, subsets = [], []
    stop = 0 if mode.exact else _GREEDY_TOL
    for _ in range(n + 1):
        if t <= stop:
            break
        order = sorted(range(n), key=lambda i: (-xs[i], i))
        inside, outside = order[:k], order[k:]
        c = min(xs[i] for i in inside) if inside else None
        if outside:
            gap = t - max(xs[i] for i in outside)
            c = gap if c is None else min(c, gap)
        if c <= 0:
            break
        for i in inside:
            xs[i] -= c
        t -= c
        if not mode.exact:
            for i in range(n):
                if xs[i] <= _GREEDY_TOL:
                    xs[i] = 0.0
                elif xs[i] >= t - _GREEDY_TOL:
                    xs[i] = t
        weights.append(c)
        subsets.append(SubsetIndicator(n, tuple(sorted(i + 1 for i in inside))))

    total = sum(weights)
    if mode.exact:
        if t != 0:
            raise ReconstructionError("greedy decomposition did not terminate")
    else:
        weights = [w / total for w in weights]
    return ConvexCombination(tuple(zip(weights, subsets)))


def _reduce_weights(weights, vectors, mode):
    """Carathéodory pruning on parallel lists; returns kept ``(weights, idx)``.

    Repeatedly solves ``sum(l_j z_j) = 0, sum(l_j) = 0`` and shifts weights
    along ``l`` until one vanishes.
    """
    weights = list(weights)
    idx = list(range(len(weights)))
    n = len(vectors[0]) if vectors else 0
    while len(idx) > 1:
        cols = [vectors[j] for j in idx]
        rows = [[col[i] for col in cols] for i in range(n)]
        rows.append([mode.coerce(1)] * len(cols))
        if mode.exact:
            lam = _linalg.null_vector(rows)
        else:
            scale = max(1.0, max(abs(v) for col in cols for v in col))
            lam = _linalg.null_vector(rows, tol=1e-10 * scale)
            if lam is None and len(idx) > n:
                lam = list(np.linalg.svd(np.array(rows, dtype=float))[2][-1])
        if lam is None:
            break
        if not any(l > 0 for l in lam):
            lam = [-l for l in lam]
        best, t = None, None
        for pos, l in enumerate(lam):
            if l > 0:
                ratio = weights[idx[pos]] / l
                if t is None or ratio < t:
                    best, t = pos, ratio
        for pos, l in enumerate(lam):
            weights[idx[pos]] -= t * l
        weights[idx[best]] = 0 * weights[idx[best]]
        if mode.exact:
            idx = [j for j in idx if weights[j] != 0]
        else:
            idx = [j for j in idx if weights[j] > _GREEDY_TOL]
    kept = [weights[j] for j in idx]
    if not mode.exact:
        kept = [max(w, 0.0) for w in kept]
        total = sum(kept)
        kept = [w / total for w in kept]
    return kept, idx


def _combine(weights, vectors):
    out = [0 * weights[0]] * len(vectors[0])
    for w, z in zip(weights, vectors):
        for i, v in enumerate(z):
            out[i] += w * v
    return out


def caratheodory_reduce(comb: ConvexCombination, target: Sequence,
                        mode: ScalarMode = FLOAT) -> ConvexCombination:
    """Prune a convex combination of equal-sum vectors to affinely independent atoms.

    The result keeps a sub-multiset of the input atoms (at most ``n`` of
    them in dimension ``n``) and reproduces ``target``.
    """
    weights = mode.vector(comb.weights)
    vectors = [mode.vector(a) for a in comb.atoms]
    target = mode.vector(target)
    n = len(target)
    if any(len(z) != n for z in vectors):
        raise ValueError("atoms and target differ in dimension")
    sums = [sum(z) for z in vectors]
    if any(not mode.eq(s, sums[0], slack=n) for s in sums):
        raise ReconstructionError("atoms do not share a common coordinate sum")
    recon = _combine(weights, vectors)
    scale = 1 + max(abs(v) for z in vectors for v in z)
    if any(not mode.eq(a, b, slack=n * scale) for a, b in zip(recon, target)):
        raise ReconstructionError("combination does not reproduce the target")
    kept, idx = _reduce_weights(weights, vectors, mode)
    atoms = comb.atoms
    return ConvexCombination(tuple((w, atoms[j]) for w, j in zip(kept, idx)))


def _transfer_chain(xs, ys, mode):
    """T-transforms carrying sorted ``ys`` to sorted ``xs``.

    Yields ``(lam, j, k)`` meaning ``y <- lam*y + (1-lam)*swap_jk(y)``.  Each
    step takes ``j`` as the last index with ``y_j > x_j`` and ``k`` as the first
    later index with ``y_k < x_k``; one of the two then agrees exactly.
    """
    ys = list(ys)
    n = len(ys)
    if mode.exact:
        tol = 0
    else:
        tol = 64 * np.finfo(float).eps * (1 + max(abs(v) for v in xs + ys))
    steps = []
    for _ in range(n):
        j = next((i for i in range(n - 1, -1, -1) if ys[i] - xs[i] > tol), None)
        if j is None:
            break
        k = next((i for i in range(j + 1, n) if xs[i] - ys[i] > tol), None)
        if k is None:
            break
        down, up = ys[j] - xs[j], xs[k] - ys[k]
        delta = min(down, up)
        lam = 1 - delta / (ys[j] - ys[k])
        ys[j] = xs[j] if down <= up else ys[j] - delta
        ys[k] = xs[k] if up <= down else ys[k] + delta
        steps.append((lam, j, k))
    return steps


def rado_decompose(x: Sequence, y: Sequence, mode: ScalarMode = FLOAT) -> ConvexCombination:
    """Write ``x`` as a convex combination of at most ``n`` permutations of ``y``.

    Raises :class:`NotMajorizedError` unless ``x`` is majorized by ``y``.
    Atoms are :class:`Permutation` objects ``p`` with ``p.apply(y)`` the
    permuted vector.
    """
    _check_same_length(x, y)
    xv, yv = mode.vector(x), mode.vector(y)
    if not is_majorized(xv, yv, mode):
        raise NotMajorizedError("x is not majorized by y")
    n = len(xv)
    xs, xorder = _sorted_desc(xv)
    ys, yorder = _sorted_desc(yv)

    # perm p (0-based, sorted frame): atom vector z_i = ys[p[i]]
    one = mode.coerce(1)
    terms = {tuple(range(n)): one}
    for lam, j, k in _transfer_chain(xs, ys, mode):
        merged = {}
        for p, w in terms.items():
            q = list(p)
            q[j], q[k] = q[k], q[j]
            for perm, wt in ((p, lam * w), (tuple(q), (1 - lam) * w)):
                if wt == 0:
                    continue
                key = tuple(ys[i] for i in perm)
                if key in merged:
                    merged[key] = (merged[key][0], merged[key][1] + wt)
                else:
                    merged[key] = (perm, wt)
        terms = {perm: wt for perm, wt in merged.values()}
        if len(terms) > n:
            perms = list(terms)
            kept, idx = _reduce_weights([terms[p] for p in perms],
                                        [[ys[i] for i in p] for p in perms], mode)
            terms = {perms[j]: w for w, j in zip(kept, idx)}

    out = []
    for p, w in terms.items():
        images = [0] * n
        for i in range(n):
            images[xorder[i]] = yorder[p[i]] + 1
        out.append((w, Permutation(tuple(images))))
    if not mode.exact:
        total = sum(w for w, _ in out)
        out = [(w / total, p) for w, p in out]
    return ConvexCombination(tuple(out))


def reconstruct(comb: ConvexCombination, y: Sequence = None):
    """Evaluate ``sum(c_j * atom_j)`` for subset, permutation or vector atoms."""
    vecs = []
    for a in comb.atoms:
        if isinstance(a, SubsetIndicator):
            vecs.append(a.vector())
        elif isinstance(a, Permutation):
            if y is None:
                raise ValueError("permutation atoms need the base vector y")
            vecs.append(a.apply(list(y)))
        else:
            vecs.append(list(a))
    return _combine(comb.weights, vecs)

