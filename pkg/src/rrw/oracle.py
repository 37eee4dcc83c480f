"""Slow brute-force reference implementations used to cross-check the engine.

Nothing here uses interval inversion, bisection on membership or qhull: the
parameter is scanned on a plain grid and vertices are found by trying every
triple of planes with ``numpy.linalg.solve``.
"""
from __future__ import annotations

import itertools

import numpy as np

from .regions import INTERVAL, ParamRegion, simplex_grid


def _theta_grid(region: ParamRegion, step: float) -> np.ndarray:
    if region.domain == INTERVAL:
        return np.linspace(0.0, 1.0, int(round(1.0 / step)) + 1)
    return simplex_grid(int(round(1.0 / step)))


def _rhs_table(region: ParamRegion, step: float) -> np.ndarray:
    th = _theta_grid(region, step)
    th2 = th[:, None] if th.ndim == 1 else th
    if not region.constraints:
        return np.zeros((len(th2), 0))
    return np.stack([c.rhs.evaluate(th2) for c in region.constraints], axis=1)


def brute_member(region: ParamRegion, p, theta_step: float = 1e-4, slack: float = 0.0, table=None):
    """True if some grid value of the parameter satisfies every constraint."""
    pts = np.atleast_2d(np.asarray(p, dtype=float))
    R = _rhs_table(region, theta_step) if table is None else table
    masks = np.array([c.row() for c in region.constraints]).reshape(-1, 3)
    out = np.zeros(len(pts), dtype=bool)
    for i, q in enumerate(pts):
        if np.any(q < 0):
            continue
        s = masks @ q
        out[i] = bool(np.any(np.all(R >= s - slack, axis=1)))
    return out if np.ndim(p) == 2 else bool(out[0])


def brute_radial(region: ParamRegion, d, theta_step: float = 1e-4, t_step: float = 1e-3, t_max: float = 10.0) -> float:
    """Largest point of the t-grid whose ray point passes :func:`brute_member`.

    Membership is monotone along the ray, so the t-grid is searched by halving
    the index range rather than scanned linearly.
    """
    R = _rhs_table(region, theta_step)
    d = np.asarray(d, dtype=float)
    if not brute_member(region, 0.0 * d, table=R):
        return 0.0
    lo, hi = 0, int(np.ceil(t_max / t_step))
    if brute_member(region, hi * t_step * d, table=R):
        return hi * t_step
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if brute_member(region, mid * t_step * d, table=R):
            lo = mid
        else:
            hi = mid
    return lo * t_step


def brute_vertices(masks: np.ndarray, b: np.ndarray, eps: float = 1e-9) -> np.ndarray:
    planes = np.vstack([masks, -np.eye(3)])
    rhs = np.concatenate([b, np.zeros(3)])
    out = []
    for combo in itertools.combinations(range(len(planes)), 3):
        M = planes[list(combo)]
        try:
            x = np.linalg.solve(M, rhs[list(combo)])
        except np.linalg.LinAlgError:
            continue
        if np.all(planes @ x <= rhs + eps):
            out.append(x)
    return np.array(out).reshape(-1, 3)


def brute_support(region: ParamRegion, w, theta_step: float = 1e-3) -> float:
    R = _rhs_table(region, theta_step)
    masks = np.array([c.row() for c in region.constraints])
    w = np.asarray(w, dtype=float)
    return max(float(np.max(brute_vertices(masks, row) @ w)) for row in R)


def weight_grid(n: int = 24) -> np.ndarray:
    """Nonnegative weight vectors on the unit simplex."""
    g = simplex_grid(n)
    return np.column_stack([g, 1.0 - g.sum(axis=1)])


def brute_hull_member(a: ParamRegion, b: ParamRegion, p, theta_step: float = 1e-2, weights: int = 24) -> bool:
    """Membership in the closed convex hull of ``a`` union ``b`` via its support function.

    ``p`` is excluded exactly when some scanned weight vector ``w`` has
    ``w . p > max(h_a(w), h_b(w))``; both support functions come from brute
    vertex enumeration on a parameter grid.
    """
    p = np.asarray(p, dtype=float)
    if np.any(p < 0):
        return False
    W = weight_grid(weights)
    pts = []
    for reg in (a, b):
        R = _rhs_table(reg, theta_step)
        masks = np.array([c.row() for c in reg.constraints])
        pts.extend(brute_vertices(masks, row) for row in R)
    V = np.vstack(pts)
    h = np.max(V @ W.T, axis=0)
    return bool(np.all(W @ p <= h + 1e-12))


def rhs_lipschitz(region: ParamRegion, theta_step: float = 1e-4) -> float:
    """Largest finite-difference slope of any right-hand side along the parameter grid."""
    if region.domain != INTERVAL:
        raise ValueError("only defined for interval domains")
    R = _rhs_table(region, theta_step)
    if R.shape[1] == 0:
        return 0.0
    return float(np.max(np.abs(np.diff(R, axis=0))) / theta_step)
