"""Real symmetric matrices: Jacobi eigensolver, projector hull, Fan's sum.

The hull of rank-``k`` orthogonal projectors is the set of symmetric
matrices with spectrum in ``[0, 1]`` and trace ``k``.  A hull point is
decomposed by diagonalizing it, decomposing its eigenvalue vector over
hypersimplex vertices, and conjugating the coordinate projectors back.

Only the real field is supported.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, OutsideHullError
from .majorization import ConvexCombination, hypersimplex_decompose
from .scalar import FLOAT

DEFAULT_EPS = 1e-9
SYM_RTOL = 1e-12
JACOBI_TOL = 1e-12
MAX_SWEEPS = 30


@dataclass(frozen=True)
class EigenDecomposition:
    """``U @ X @ U.T == diag(eigenvalues)``; rows of ``U`` are eigenvectors."""

    U: np.ndarray
    eigenvalues: np.ndarray


def as_symmetric(X):
    """Validate and symmetrize a square matrix; returns a new float array."""
    X = np.array(X, dtype=float)
    if X.ndim != 2 or X.shape[0] != X.shape[1] or X.shape[0] == 0:
        raise ValueError(f"expected a nonempty square matrix, got shape {X.shape}")
    if not np.all(np.isfinite(X)):
        raise ValueError("matrix has non-finite entries")
    scale = max(1.0, np.abs(X).max())
    if np.abs(X - X.T).max() > SYM_RTOL * scale:
        raise ValueError("matrix is not symmetric")
    return (X + X.T) / 2


def _off_norm(A):
    return np.linalg.norm(A - np.diag(np.diag(A)))


def jacobi_eigen(X, tol=JACOBI_TOL, max_sweeps=MAX_SWEEPS) -> EigenDecomposition:
    """Cyclic-by-row Jacobi eigendecomposition with descending eigenvalues."""
    A = as_symmetric(X)
    n = A.shape[0]
    V = np.eye(n)
    target = tol * (1.0 + np.linalg.norm(A))
    for _ in range(max_sweeps):
        if _off_norm(A) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if apq == 0.0:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                t = np.copysign(1.0, theta) / (abs(theta) + np.hypot(1.0, theta))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
                vp, vq = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * vp - s * vq
                V[:, q] = s * vp + c * vq
    else:
        if _off_norm(A) > target:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
    lam = np.diag(A).copy()
    order = np.argsort(-lam, kind="stable")
    return EigenDecomposition(U=V.T[order].copy(), eigenvalues=lam[order])


def is_in_hull(X, k, eps=DEFAULT_EPS) -> bool:
    """Spectrum in ``[-eps, 1+eps]`` and trace within ``n*eps`` of ``k``."""
    X = as_symmetric(X)
    n = X.shape[0]
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    lam = jacobi_eigen(X).eigenvalues
    return bool(lam.min() >= -eps and lam.max() <= 1 + eps
                and abs(np.trace(X) - k) <= n * eps)


def is_projector_point(X, k, eps=DEFAULT_EPS) -> bool:
    X = as_symmetric(X)
    return bool(np.linalg.norm(X @ X - X) <= eps and abs(np.trace(X) - k) <= eps)


def _clamp_spectrum(lam, k, eps):
    # snap to the box, then push the trace back to k through interior coordinates
    lam = np.clip(lam, 0.0, 1.0)
    lam[lam <= eps] = 0.0
    lam[lam >= 1.0 - eps] = 1.0
    deficit = k - lam.sum()
    if deficit == 0.0:
        return lam
    slack = 1.0 - lam if deficit > 0 else lam.copy()
    interior = (lam > 0.0) & (lam < 1.0)
    order = sorted(range(len(lam)), key=lambda i: (not interior[i], -slack[i], i))
    remaining = abs(deficit)
    for i in order:
        if remaining <= 0.0:
            break
        step = min(slack[i], remaining)
        lam[i] += step if deficit > 0 else -step
        remaining -= step
    return lam


def grassmann_decompose(X, k, eps=DEFAULT_EPS) -> ConvexCombination:
    """Convex combination of at most ``n`` rank-``k`` projectors equal to ``X``.

    Raises :class:`OutsideHullError` when ``X`` is not in the hull.  A single
    term is returned exactly when ``X`` is itself a projector.
    """
    X = as_symmetric(X)
    n = X.shape[0]
    if isinstance(k, bool) or int(k) != k or not 0 <= k <= n:
        raise ValueError(f"k must be an integer in 0..{n}, got {k!r}")
    k = int(k)
    ed = jacobi_eigen(X)
    lam = ed.eigenvalues
    if lam.min() < -eps or lam.max() > 1 + eps:
        raise OutsideHullError(f"spectrum [{lam.min()}, {lam.max()}] leaves [0, 1]")
    if abs(lam.sum() - k) > n * eps:
        raise OutsideHullError(f"trace {lam.sum()} differs from k={k}")
    if k == 0:
        return ConvexCombination(((1.0, np.zeros((n, n))),))
    if k == n:
        return ConvexCombination(((1.0, np.eye(n)),))
    lam = _clamp_spectrum(lam.copy(), k, eps)
    comb = hypersimplex_decompose(lam, k, FLOAT)
    terms = []
    for w, subset in comb:
        rows = ed.U[[i - 1 for i in subset.members]]
        P = rows.T @ rows
        terms.append((w, (P + P.T) / 2))
    return ConvexCombination(tuple(terms))


def fan_value(B, k):
    """Sum of the ``k`` largest eigenvalues of ``B`` and a projector attaining it.

    The projector onto the top-``k`` eigenspace maximizes ``tr(B @ X)`` over
    the projector hull.
    """
    B = as_symmetric(B)
    n = B.shape[0]
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    ed = jacobi_eigen(B)
    top = ed.U[:k]
    P = top.T @ top
    return float(ed.eigenvalues[:k].sum()), (P + P.T) / 2


def random_orthogonal(n, rng):
    Q, R = np.linalg.qr(rng.standard_normal((n, n)))
    return Q * np.sign(np.diag(R))


def random_hull_point(n, k, seed=None):
    """Random convex mix of rank-``k`` coordinate projectors, rotated randomly."""
    if not 0 <= k <= n:
        raise ValueError(f"k={k} outside 0..{n}")
    if k == 0:
        return np.zeros((n, n))
    if k == n:
        return np.eye(n)
    rng = np.random.default_rng(seed)
    m = int(rng.integers(1, n + 1))
    weights = rng.dirichlet(np.ones(m))
    diag = np.zeros(n)
    for w in weights:
        diag[rng.choice(n, size=k, replace=False)] += w
    Q = random_orthogonal(n, rng)
    X = Q.T @ np.diag(diag) @ Q
    return (X + X.T) / 2
