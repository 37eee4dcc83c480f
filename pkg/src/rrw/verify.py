"""Engine-versus-oracle checks run by ``rrw verify``.

Each check returns ``{"name", "passed", "detail"}``. Probes come from a
seeded ``numpy.random.Generator`` so results are reproducible.
"""
from __future__ import annotations

import itertools

import numpy as np

from . import bounds_g4 as g4
from . import bounds_g7 as g7
from .channel import ChannelParams, capacity_fn
from .graphs import all_graphs, induced_acyclic_vertex_sets
from .oracle import _rhs_table, brute_hull_member, brute_member, brute_radial, rhs_lipschitz
from .regions import hull

THETA_STEP = 1e-4
T_STEP = 1e-3


def _check(name, passed, **detail):
    return {"name": name, "passed": bool(passed), "detail": detail}


def check_chain_identity(rng, n):
    a = rng.uniform(0, 1, n)
    P = 10 ** rng.uniform(-2, 3, n)
    N = 10 ** rng.uniform(-2, 2, n)
    err = np.abs(capacity_fn(a * P / N) + capacity_fn((1 - a) * P / (a * P + N)) - capacity_fn(P / N))
    return _check("chain_identity", err.max() <= 1e-12, max_error=float(err.max()), samples=n)


def _perm_acyclic(arcs, vs):
    # a set is acyclic iff some ordering has every induced arc pointing forward
    inside = [(i, j) for i, j in arcs if i in vs and j in vs]
    for order in itertools.permutations(vs):
        pos = {v: n for n, v in enumerate(order)}
        if all(pos[i] < pos[j] for i, j in inside):
            return True
    return False


def check_acyclic_sets():
    bad = 0
    for g in all_graphs():
        brute = [vs for r in (1, 2, 3) for vs in itertools.combinations((1, 2, 3), r) if _perm_acyclic(g.arcs, vs)]
        bad += brute != induced_acyclic_vertex_sets(g)
    return _check("acyclic_vertex_sets", bad == 0, graphs=64, mismatches=bad)


def _probe_regions(ch):
    return {
        "inner1_g4(k=1)": g4.inner1_g4(1, ch),
        "inner2_g4(k=1)": g4.inner2_g4(1, ch),
        "outer2_g4": g4.outer2_g4_g21(ch),
        "inner_g7(k=1)": g7.inner_g7(1, ch),
        "inner_g7(k=7)": g7.inner_g7(7, ch),
    }


def check_membership(name, region, rng, n):
    ext = np.array([region.axis_extent(i) for i in (1, 2, 3)])
    pts = rng.uniform(0, 1, (n, 3)) * ext * 1.05
    table = _rhs_table(region, THETA_STEP)
    eng = region.member(pts)
    ref = brute_member(region, pts, table=table)
    dis = eng != ref
    band = 2 * THETA_STEP * rhs_lipschitz(region, THETA_STEP)
    loose = brute_member(region, pts[dis], slack=band, table=table) if dis.any() else np.zeros(0, bool)
    in_band = bool(np.all(eng[dis] & loose))
    agree = 1.0 - dis.mean()
    return _check(f"membership[{name}]", agree >= 0.999 and in_band,
                  agreement=float(agree), disagreements=int(dis.sum()), band=band)


def check_radial(name, region, rng, n):
    dirs = rng.uniform(0, 1, (n, 3)) + 1e-3
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    eng = region.radial(dirs)
    ref = np.array([brute_radial(region, d, THETA_STEP, T_STEP) for d in dirs])
    diff = eng - ref
    ok = np.all((diff >= -1e-9) & (diff <= 2 * T_STEP))
    return _check(f"radial[{name}]", ok, min_diff=float(diff.min()), max_diff=float(diff.max()))


def check_hull(ch, rng, n):
    a, b = g4.inner1_g4(1, ch), g4.inner2_g4(1, ch)
    h = hull(a, b)
    dirs = rng.uniform(0, 1, (n, 3)) + 1e-3
    dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
    r = h.radial(dirs)
    bad = 0
    for d, rad in zip(dirs, r):
        # clear of a 3% band around the boundary the two must agree
        bad += not brute_hull_member(a, b, 0.97 * rad * d)
        bad += brute_hull_member(a, b, 1.03 * rad * d)
    return _check("hull_membership", bad == 0, directions=n, mismatches=bad)


def check_b_identity(ch, rng, n):
    al = rng.dirichlet(np.ones(3), n)
    err = 0.0
    P, N2 = ch.P, ch.N2
    for a1, a2, a3 in al:
        _, b2, b3 = g7.b_terms(a1, a2, a3, ch)
        err = max(err, abs(b2 + b3 - capacity_fn((1 - a1) * P / (a1 * P + N2))))
    return _check("b2_plus_b3", err <= 1e-12, max_error=float(err), samples=n)


def run_checks(ch: ChannelParams, seed: int = 0, probes: int = 2000) -> list[dict]:
    rng = np.random.default_rng(seed)
    out = [check_chain_identity(rng, 10 * probes), check_acyclic_sets()]
    for name, reg in _probe_regions(ch).items():
        out.append(check_membership(name, reg, rng, probes))
    for name in ("inner1_g4(k=1)", "inner_g7(k=1)"):
        out.append(check_radial(name, _probe_regions(ch)[name], rng, 8))
    out.append(check_hull(ch, rng, 16))
    out.append(check_b_identity(ch, rng, probes))
    return out
