"""Pure numpy implementation of the hot kernels.

Mirrors ``_kernels.pyx`` function for function; selected by :mod:`rrw.kernels`
when the compiled extension is unavailable or ``RRW_PURE=1``.

An interval-domain program is five arrays over ``m`` constraints:

``masks`` (m, 3)
    0/1 rows; constraint ``c`` bounds ``masks[c] @ R``.
``nterms`` (m,)
    0 for a constant right-hand side, else the number (1 or 2) of capacity terms.
``const`` (m,)
    value of constant right-hand sides.
``num``, ``den`` (m, 2, 2)
    per term, coefficients ``(c0, c1)`` of the affine numerator ``c0 + c1*theta`` and
    denominator (noise included) of the SNR ``num/den``.

A rate sum ``s`` is reachable by a capacity-term constraint iff
``prod_k (num_k + den_k) - 4**s * prod_k den_k >= 0``, a polynomial of degree
``nterms`` in theta, so every feasible theta-set is a finite union of intervals
with closed-form endpoints. A point is feasible iff some endpoint candidate
(0, 1, polynomial roots or vertex) satisfies every constraint.
"""
from __future__ import annotations

import numpy as np

EVAL_SLACK = 1e-10


def _rhs_at(nterms, const, num, den, theta):
    """Right-hand sides at ``theta`` (any shape) -> theta.shape + (m,)."""
    th = np.asarray(theta, dtype=float)[..., None]
    val = np.zeros(th.shape[:-1] + (len(nterms),))
    for k in range(2):
        active = nterms > k
        n = num[:, k, 0] + num[:, k, 1] * th
        d = den[:, k, 0] + den[:, k, 1] * th
        with np.errstate(divide="ignore", invalid="ignore"):
            term = 0.5 * np.log2(np.maximum(n + d, d) / d)
        val = val + np.where(active, term, 0.0)
    return np.where(nterms == 0, const, val)


def _candidates(nterms, num, den, s):
    """Candidate thetas for each row of rate sums ``s`` (n, m) -> (n, 2 + 3m)."""
    n_pts = s.shape[0]
    K = np.exp2(2.0 * np.clip(s, 0.0, 60.0))
    p0 = num[:, 0, 0] + den[:, 0, 0]
    p1 = num[:, 0, 1] + den[:, 0, 1]
    q0 = num[:, 1, 0] + den[:, 1, 0]
    q1 = num[:, 1, 1] + den[:, 1, 1]
    r0, r1 = den[:, 0, 0], den[:, 0, 1]
    u0, u1 = den[:, 1, 0], den[:, 1, 1]
    one = nterms == 1
    two = nterms == 2
    # single term: a0 + a1*theta
    a0 = np.where(one, p0 - K * r0, 0.0)
    a1 = np.where(one, p1 - K * r1, 0.0)
    # two terms: c0 + c1*theta + c2*theta^2
    c0 = np.where(two, p0 * q0 - K * r0 * u0, a0)
    c1 = np.where(two, p0 * q1 + p1 * q0 - K * (r0 * u1 + r1 * u0), a1)
    c2 = np.where(two, p1 * q1 - K * r1 * u1, 0.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        scale = np.abs(c0) + np.abs(c1) + np.abs(c2)
        quad = np.abs(c2) > 1e-13 * scale
        lin_root = -c0 / c1
        disc = c1 * c1 - 4.0 * c2 * c0
        sq = np.sqrt(np.maximum(disc, 0.0))
        qq = -0.5 * (c1 + np.where(c1 >= 0, sq, -sq))
        qr1 = qq / c2
        qr2 = c0 / qq
        vertex = -c1 / (2.0 * c2)
        root1 = np.where(quad, qr1, lin_root)
        root2 = np.where(quad, qr2, np.nan)
        root3 = np.where(quad, vertex, np.nan)
    active = (nterms > 0) & (s > 0)
    roots = np.stack([root1, root2, root3], axis=-1)
    roots = np.where(active[..., None], roots, np.nan)
    roots = roots.reshape(n_pts, -1)
    roots = np.where(np.isfinite(roots) & (roots > 0) & (roots < 1), roots, 0.0)
    ends = np.tile(np.array([0.0, 1.0]), (n_pts, 1))
    return np.concatenate([ends, roots], axis=1)


def _feasible_sums(nterms, const, num, den, s):
    """Whether some theta in [0, 1] admits all rate sums ``s`` (n, m)."""
    if s.shape[1] == 0:
        return np.ones(s.shape[0], dtype=bool)
    cand = _candidates(nterms, num, den, s)
    vals = _rhs_at(nterms, const, num, den, cand)
    ok = np.all(vals >= s[:, None, :] - EVAL_SLACK, axis=2)
    return np.any(ok, axis=1)


def member(masks, nterms, const, num, den, points, tol):
    points = np.atleast_2d(np.asarray(points, dtype=float))
    s = points @ masks.T - tol
    return _feasible_sums(nterms, const, num, den, s)


def upper_bounds(nterms, const, num, den):
    """Per-constraint upper bound of the right-hand side over theta in [0, 1]."""
    ub = np.zeros(len(nterms))
    for k in range(2):
        vals = []
        for th in (0.0, 1.0):
            n = num[:, k, 0] + num[:, k, 1] * th
            d = den[:, k, 0] + den[:, k, 1] * th
            with np.errstate(divide="ignore", invalid="ignore"):
                vals.append(0.5 * np.log2(np.maximum(n + d, d) / d))
        ub = ub + np.where(nterms > k, np.maximum(vals[0], vals[1]), 0.0)
    return np.where(nterms == 0, const, ub)


def sup_along(masks, nterms, const, num, den, bases, dirs, xtol):
    """sup{t >= 0 : base + t*dir feasible}; nan where the base is infeasible, inf if unbounded."""
    bases = np.atleast_2d(np.asarray(bases, dtype=float))
    dirs = np.atleast_2d(np.asarray(dirs, dtype=float))
    n = len(dirs)
    out = np.full(n, np.nan)
    base_ok = member(masks, nterms, const, num, den, bases, 0.0)
    ub = upper_bounds(nterms, const, num, den)
    w = dirs @ masks.T
    used = bases @ masks.T
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        lim = np.where(w > 0, (ub - used) / w, np.inf)
    hi = np.min(lim, axis=1) if masks.shape[0] else np.full(n, np.inf)
    hi = np.maximum(hi, 0.0)
    unbounded = base_ok & ~np.isfinite(hi)
    out[unbounded] = np.inf
    work = base_ok & np.isfinite(hi)
    idx = np.nonzero(work)[0]
    lo = np.zeros(len(idx))
    hi_w = hi[idx].copy()
    b, d = bases[idx], dirs[idx]
    while len(idx) and np.max(hi_w - lo) > xtol:
        mid = 0.5 * (lo + hi_w)
        ok = member(masks, nterms, const, num, den, b + mid[:, None] * d, 0.0)
        lo = np.where(ok, mid, lo)
        hi_w = np.where(ok, hi_w, mid)
    out[idx] = lo
    return out


def polytope_vertices(A, B, eps=1e-9):
    """Vertices of {x >= 0, A x <= b} for every row b of ``B``.

    Returns ``(V, owner)``: stacked vertices (k, 3) and the row each came from.
    """
    A = np.asarray(A, dtype=float)
    B = np.atleast_2d(np.asarray(B, dtype=float))
    m = A.shape[0]
    planes = np.vstack([A, -np.eye(3)])
    g = B.shape[0]
    rhs = np.hstack([B, np.zeros((g, 3))])
    verts, owners = [], []
    for combo in _triples(m + 3):
        M = planes[list(combo)]
        if abs(np.linalg.det(M)) < 1e-12:
            continue
        Minv = np.linalg.inv(M)
        x = rhs[:, list(combo)] @ Minv.T
        viol = x @ planes.T - rhs
        ok = np.all(viol <= eps * (1.0 + np.abs(rhs)), axis=1)
        verts.append(x[ok])
        owners.append(np.nonzero(ok)[0])
    if not verts:
        return np.zeros((0, 3)), np.zeros(0, dtype=np.int64)
    V = np.vstack(verts)
    own = np.concatenate(owners).astype(np.int64)
    order = np.argsort(own, kind="stable")
    return V[order], own[order]


def _triples(n):
    import itertools

    return itertools.combinations(range(n), 3)
