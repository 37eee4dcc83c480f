"""Geometry of comprehensive rate regions in the nonnegative orthant of R^3.

A :class:`ParamRegion` is a union, over a parameter theta, of small polyhedra
``{R >= 0 : sum_{i in mask} R_i <= rhs(theta)}``. Every region here is
comprehensive (downward closed), so membership along a nonnegative ray is an
interval ``[0, r]`` and the radial function is well defined.

Three handle types share one query surface (``member``, ``sup_along``,
``radial``): :class:`ParamRegion`, :class:`Intersection` and :class:`Hull`.
"""
from __future__ import annotations

import functools
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from . import kernels
from ._kernels_py import _rhs_at

INTERVAL = "interval"
SIMPLEX = "simplex"

RADIAL_XTOL = 1e-10
SUPPORT_STEP = 1e-4
HULL_GRID = 2001
SIMPLEX_STEP = 200
SIMPLEX_REFINE = 10
DEFAULT_TOL = 1e-3

COINCIDES = "COINCIDES"
CONTAINED = "CONTAINED"
SEPARATED = "SEPARATED"


# --------------------------------------------------------------------------- rates


@dataclass(frozen=True)
class RateTriple:
    r1: float
    r2: float
    r3: float

    def __post_init__(self):
        for v in (self.r1, self.r2, self.r3):
            if not (math.isfinite(v) and v >= 0):
                raise ValueError(f"rates must be finite and >= 0, got {self}")

    def as_array(self) -> np.ndarray:
        return np.array([self.r1, self.r2, self.r3], dtype=float)


def _as_points(p) -> tuple[np.ndarray, bool]:
    if isinstance(p, RateTriple):
        return p.as_array()[None, :], True
    arr = np.asarray(p, dtype=float)
    if arr.ndim == 1:
        return arr[None, :], True
    return arr, False


# ------------------------------------------------------------------ right-hand sides


@dataclass(frozen=True)
class Const:
    value: float

    @property
    def dim(self):
        return 0

    def evaluate(self, theta) -> np.ndarray:
        th = np.atleast_2d(np.asarray(theta, dtype=float))
        return np.full(th.shape[0], float(self.value))

    def __str__(self):
        return f"{self.value:.6g}"


@dataclass(frozen=True)
class CapRatio:
    """``C(num(theta) * P / (den(theta) * P + noise))`` with affine ``num`` and ``den``.

    ``num`` and ``den`` are coefficient tuples over ``(1, theta_1, ...)``. For
    example ``(1 - a) P / (a P + N1)`` is ``CapRatio((1, -1), (0, 1), N1, P)``.
    """

    num: tuple
    den: tuple
    noise: float
    P: float

    @property
    def dim(self):
        return len(self.num) - 1

    def snr(self, theta) -> np.ndarray:
        th = np.atleast_2d(np.asarray(theta, dtype=float))
        basis = np.hstack([np.ones((th.shape[0], 1)), th[:, : self.dim]])
        n = basis @ np.asarray(self.num, dtype=float) * self.P
        d = basis @ np.asarray(self.den, dtype=float) * self.P + self.noise
        return np.maximum(n, 0.0) / d

    def evaluate(self, theta) -> np.ndarray:
        return 0.5 * np.log2(1.0 + self.snr(theta))

    def __str__(self):
        return f"C(({_affine(self.num)})P/(({_affine(self.den)})P+{self.noise:g}))"


def _affine(coef) -> str:
    names = ["", "t", "u"]
    parts = [f"{c:g}{names[i]}" for i, c in enumerate(coef) if c]
    return "+".join(parts) or "0"


@dataclass(frozen=True)
class Sum:
    terms: tuple

    @property
    def dim(self):
        return max(t.dim for t in self.terms)

    def evaluate(self, theta) -> np.ndarray:
        return sum(t.evaluate(theta) for t in self.terms)

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


def cap(P: float, noise: float, num=(1.0,), den=(0.0,)) -> CapRatio:
    """Shorthand; pads the shorter coefficient tuple with zeros."""
    n = max(len(num), len(den))
    num = tuple(float(x) for x in num) + (0.0,) * (n - len(num))
    den = tuple(float(x) for x in den) + (0.0,) * (n - len(den))
    return CapRatio(num, den, float(noise), float(P))


@dataclass(frozen=True)
class MaskedConstraint:
    mask: tuple
    rhs: object
    label: str = ""

    def __post_init__(self):
        mask = tuple(sorted(set(self.mask)))
        if not mask or any(i not in (1, 2, 3) for i in mask):
            raise ValueError(f"mask must be a nonempty subset of {{1,2,3}}, got {self.mask}")
        object.__setattr__(self, "mask", mask)

    def row(self) -> np.ndarray:
        return np.array([1.0 if i in self.mask else 0.0 for i in (1, 2, 3)])

    def __str__(self):
        lhs = "+".join(f"R{i}" for i in self.mask)
        return f"{lhs} <= {self.rhs}"


def _terms(rhs):
    if isinstance(rhs, Const):
        return ()
    if isinstance(rhs, CapRatio):
        return (rhs,)
    if isinstance(rhs, Sum):
        return tuple(rhs.terms)
    raise TypeError(f"unsupported right-hand side {rhs!r}")


def is_monotone(rhs, samples: int = 1000) -> bool:
    """Sign consistency of successive differences on a uniform theta grid (interval domain)."""
    th = np.linspace(0.0, 1.0, samples)[:, None]
    diff = np.diff(rhs.evaluate(th))
    return bool(np.all(diff >= -1e-14) or np.all(diff <= 1e-14))


# ------------------------------------------------------------------------- handles


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("RRW_THREADS", "1")))
    except ValueError:
        return 1


class Region:
    """Common query surface; subclasses implement ``_member`` and ``_sup_along``."""

    name = "region"

    def member(self, p, tol: float = 0.0):
        pts, single = _as_points(p)
        ok = np.all(pts >= -tol, axis=1) & np.all(np.isfinite(pts), axis=1)
        if np.any(ok):
            ok[ok] = self._member(np.maximum(pts[ok], 0.0), tol)
        return bool(ok[0]) if single else ok

    def sup_along(self, bases, dirs) -> np.ndarray:
        bases = np.atleast_2d(np.asarray(bases, dtype=float))
        dirs = np.atleast_2d(np.asarray(dirs, dtype=float))
        if len(bases) == 1 and len(dirs) > 1:
            bases = np.repeat(bases, len(dirs), axis=0)
        if np.any(dirs < 0) or np.any(np.all(dirs == 0, axis=1)):
            raise ValueError("directions must be nonnegative and nonzero")
        return self._sup_along(bases, dirs)

    def radial(self, d):
        dirs = np.asarray(d, dtype=float)
        single = dirs.ndim == 1
        out = self.sup_along(np.zeros((1, 3)), np.atleast_2d(dirs))
        return float(out[0]) if single else out

    def axis_extent(self, axis: int) -> float:
        return self.radial(np.eye(3)[axis - 1])

    def _member(self, pts, tol):
        raise NotImplementedError

    def _sup_along(self, bases, dirs):
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class ParamRegion(Region):
    """Union over a parameter domain of polyhedra given by masked-sum constraints.

    ``domain`` is ``"interval"`` (theta in [0, 1]) or ``"simplex"``
    (theta = (a1, a2) with a1, a2 >= 0 and a1 + a2 <= 1).
    """

    constraints: tuple
    domain: str = INTERVAL
    name: str = "region"
    notes: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.domain not in (INTERVAL, SIMPLEX):
            raise ValueError(f"unknown domain {self.domain!r}")
        dim = 1 if self.domain == INTERVAL else 2
        corners = np.array([[0.0], [1.0]]) if dim == 1 else np.array([[0, 0], [1, 0], [0, 1.0]])
        for c in self.constraints:
            if not isinstance(c, MaskedConstraint):
                raise TypeError("constraints must be MaskedConstraint instances")
            terms = _terms(c.rhs)
            if self.domain == INTERVAL and len(terms) > 2:
                raise ValueError("interval-domain constraints support at most two capacity terms")
            for t in terms:
                if t.dim > dim:
                    raise ValueError(f"{c}: right-hand side uses more parameters than the domain")
                basis = np.hstack([np.ones((len(corners), 1)), corners[:, : t.dim]])
                n = basis @ np.asarray(t.num) * t.P
                d = basis @ np.asarray(t.den) * t.P + t.noise
                if np.any(d <= 0):
                    raise ValueError(f"{c}: denominator not strictly positive on the domain")
                if np.any(n < -1e-12):
                    raise ValueError(f"{c}: negative SNR on the domain")
            if isinstance(c.rhs, Const) and not c.rhs.value >= 0:
                raise ValueError(f"{c}: constant right-hand side must be >= 0")
        if self.domain == INTERVAL:
            object.__setattr__(self, "_prog", self._compile())

    def __hash__(self):
        return id(self)

    # interval-domain program --------------------------------------------------
    def _compile(self):
        m = len(self.constraints)
        masks = np.zeros((m, 3))
        nterms = np.zeros(m, dtype=np.int64)
        const = np.zeros(m)
        num = np.zeros((m, 2, 2))
        den = np.zeros((m, 2, 2))
        den[:, :, 0] = 1.0
        for c, con in enumerate(self.constraints):
            masks[c] = con.row()
            if isinstance(con.rhs, Const):
                const[c] = con.rhs.value
                continue
            terms = _terms(con.rhs)
            nterms[c] = len(terms)
            for k, t in enumerate(terms):
                num[c, k] = [t.num[0] * t.P, (t.num[1] if t.dim else 0.0) * t.P]
                den[c, k] = [t.den[0] * t.P + t.noise, (t.den[1] if t.dim else 0.0) * t.P]
        return masks, nterms, const, num, den

    @property
    def masks(self) -> np.ndarray:
        return np.array([c.row() for c in self.constraints]).reshape(-1, 3)

    def rhs_at(self, theta) -> np.ndarray:
        """Right-hand sides at parameter values ``theta`` -> (g, m)."""
        th = np.asarray(theta, dtype=float)
        if self.domain == INTERVAL:
            th = th.reshape(-1)
            masks, nterms, const, num, den = self._prog
            return _rhs_at(nterms, const, num, den, th).reshape(len(th), -1)
        th = np.atleast_2d(th)
        if not self.constraints:
            return np.zeros((len(th), 0))
        return np.stack([c.rhs.evaluate(th) for c in self.constraints], axis=1)

    def theta_grid(self, step: float | None = None) -> np.ndarray:
        if self.domain == INTERVAL:
            n = int(round(1.0 / (step or SUPPORT_STEP)))
            return np.linspace(0.0, 1.0, n + 1)
        n = int(round(1.0 / (step or 1.0 / SIMPLEX_STEP)))
        return simplex_grid(n)

    # queries -------------------------------------------------------------------
    def _member(self, pts, tol):
        if self.domain == INTERVAL:
            return _chunked(kernels.member, self._prog, pts, tol)
        return self._simplex_member(pts, tol)

    def _sup_along(self, bases, dirs):
        if self.domain == INTERVAL:
            return _parallel_sup(self._prog, bases, dirs)
        return self._simplex_sup(bases, dirs)

    # simplex domain --------------------------------------------------------------
    @functools.cached_property
    def _coarse(self):
        grid = simplex_grid(SIMPLEX_STEP)
        return grid, self.rhs_at(grid)

    def _simplex_member(self, pts, tol):
        grid, R = self._coarse
        masks = self.masks
        s = pts @ masks.T - tol
        out = np.zeros(len(pts), dtype=bool)
        if R.shape[1] == 0:
            return np.ones(len(pts), dtype=bool)
        for start in range(0, len(pts), 64):
            ss = s[start : start + 64]
            slack = np.min(R[None, :, :] - ss[:, None, :], axis=2)
            best = np.max(slack, axis=1)
            ok = best >= -1e-12
            for i in np.nonzero(~ok)[0]:
                # one refinement pass around the least-violated coarse cells
                top = grid[np.argsort(slack[i])[-8:]]
                fine = _local_simplex(top, 1.0 / SIMPLEX_STEP, SIMPLEX_REFINE)
                Rf = self.rhs_at(fine)
                ok[i] = np.max(np.min(Rf - ss[i], axis=1)) >= -1e-12
            out[start : start + 64] = ok
        return out

    def _simplex_sup(self, bases, dirs):
        grid, R = self._coarse
        masks = self.masks
        out = np.empty(len(dirs))
        for start in range(0, len(dirs), 32):
            b = bases[start : start + 32]
            d = dirs[start : start + 32]
            out[start : start + 32] = _grid_sup(R, masks, b, d)
        for i in range(len(dirs)):
            if not np.isfinite(out[i]):
                continue
            step = 1.0 / SIMPLEX_STEP
            pts = grid
            vals = _grid_sup(R, masks, bases[i : i + 1], dirs[i : i + 1], per_theta=True)[:, 0]
            for _ in range(2):
                top = pts[np.argsort(vals)[-4:]]
                pts = _local_simplex(top, step, SIMPLEX_REFINE)
                step /= SIMPLEX_REFINE
                vals = _grid_sup(self.rhs_at(pts), masks, bases[i : i + 1], dirs[i : i + 1], per_theta=True)[:, 0]
                out[i] = max(out[i], np.max(vals))
        return out

    def __str__(self):
        return f"{self.name}: " + "; ".join(str(c) for c in self.constraints) + f" ({self.domain})"


def _chunked(fn, prog, pts, tol):
    n = _threads()
    if n == 1 or len(pts) < 256 or not kernels.COMPILED:
        return fn(*prog, pts, tol)
    parts = np.array_split(np.arange(len(pts)), n)
    with ThreadPoolExecutor(n) as ex:
        res = list(ex.map(lambda idx: fn(*prog, pts[idx], tol), parts))
    return np.concatenate(res)


def _parallel_sup(prog, bases, dirs):
    n = _threads()
    if n == 1 or len(dirs) < 64 or not kernels.COMPILED:
        return kernels.sup_along(*prog, bases, dirs, RADIAL_XTOL)
    parts = np.array_split(np.arange(len(dirs)), n)
    with ThreadPoolExecutor(n) as ex:
        res = list(ex.map(lambda idx: kernels.sup_along(*prog, bases[idx], dirs[idx], RADIAL_XTOL), parts))
    return np.concatenate(res)


def _grid_sup(R, masks, bases, dirs, per_theta=False):
    """sup over grid rows of R of the ray length; exact per grid point."""
    used = bases @ masks.T  # (n, m)
    w = dirs @ masks.T
    room = R[:, None, :] - used[None, :, :]  # (g, n, m)
    feasible = np.all(room >= -1e-12, axis=2)
    with np.errstate(divide="ignore", invalid="ignore"):
        lim = np.where(w[None] > 0, np.maximum(room, 0.0) / w[None], np.inf)
    t = np.min(lim, axis=2) if masks.shape[0] else np.full(feasible.shape, np.inf)
    t = np.where(feasible, t, -np.inf)
    if per_theta:
        return t
    best = np.max(t, axis=0)
    return np.where(np.isneginf(best), np.nan, best)


def simplex_grid(n: int) -> np.ndarray:
    i, j = np.meshgrid(np.arange(n + 1), np.arange(n + 1), indexing="ij")
    keep = i + j <= n
    return np.stack([i[keep], j[keep]], axis=1) / n


def _local_simplex(centres, step, refine):
    offs = np.linspace(-step, step, 2 * refine + 1)
    du, dv = np.meshgrid(offs, offs, indexing="ij")
    pts = (centres[:, None, :] + np.stack([du.ravel(), dv.ravel()], axis=1)[None]).reshape(-1, 2)
    pts = np.clip(pts, 0.0, 1.0)
    over = pts.sum(axis=1) > 1.0
    pts[over] /= pts[over].sum(axis=1, keepdims=True)
    return pts


@dataclass(frozen=True, eq=False)
class Intersection(Region):
    """Conjunction of two regions; their parameters are quantified independently."""

    a: Region
    b: Region
    name: str = "intersection"

    def _member(self, pts, tol):
        return self.a.member(pts, tol) & self.b.member(pts, tol)

    def _sup_along(self, bases, dirs):
        # membership along a ray is an interval [0, r] for comprehensive sets
        return np.minimum(self.a.sup_along(bases, dirs), self.b.sup_along(bases, dirs))


@dataclass(frozen=True, eq=False)
class Orthant(Region):
    """The whole nonnegative orthant (identity element for :class:`Intersection`)."""

    name: str = "orthant"

    def _member(self, pts, tol):
        return np.ones(len(pts), dtype=bool)

    def _sup_along(self, bases, dirs):
        return np.full(len(dirs), np.inf)


def region_vertices(region: ParamRegion, thetas=None) -> np.ndarray:
    """Vertices of the polyhedra of ``region`` at the given (or default) parameter grid."""
    if thetas is None:
        thetas = region.theta_grid(1.0 / (HULL_GRID - 1)) if region.domain == INTERVAL else region.theta_grid()
    if not region.constraints:
        raise ValueError("region is unbounded")
    V, _ = kernels.polytope_vertices(region.masks, region.rhs_at(thetas))
    return V


class Hull(Region):
    """Closed convex hull of the union of two parameterised regions.

    Built from the polyhedron vertices of both regions on a fine parameter grid,
    so the facet part is an inner approximation of the exact hull whose error
    shrinks quadratically with the grid step. Exact membership in either input
    is accepted as well, which keeps ``a`` and ``b`` inside the hull.
    """

    def __init__(self, a: ParamRegion, b: ParamRegion, grid: int = HULL_GRID, name: str = "hull"):
        if a.domain != INTERVAL or b.domain != INTERVAL:
            raise ValueError("hulls are only supported for interval-domain regions")
        self.a, self.b, self.name = a, b, name
        thetas = np.linspace(0.0, 1.0, grid)
        pts = np.vstack([region_vertices(a, thetas), region_vertices(b, thetas)])
        pts = np.unique(np.round(np.maximum(pts, 0.0), 13), axis=0)
        self.points = pts
        try:
            hull = ConvexHull(pts)
        except QhullError:
            hull = ConvexHull(pts, qhull_options="QJ")
        self.points = pts[hull.vertices]
        eq = hull.equations
        self._normals = eq[:, :3]
        self._offsets = eq[:, 3]

    def _facet_member(self, pts, tol):
        return np.all(pts @ self._normals.T + self._offsets <= tol + 1e-12, axis=1)

    def _member(self, pts, tol):
        return self._facet_member(pts, tol) | self.a.member(pts, tol) | self.b.member(pts, tol)

    def _sup_along(self, bases, dirs):
        ok = self._facet_member(bases, 0.0)
        nd = dirs @ self._normals.T
        slack = -(bases @ self._normals.T + self._offsets)
        with np.errstate(divide="ignore", invalid="ignore"):
            lim = np.where(nd > 1e-15, np.maximum(slack, 0.0) / nd, np.inf)
        t = np.where(ok, np.min(lim, axis=1), np.nan)
        # the union of comprehensive sets meets each ray in one segment
        return np.fmax(t, np.fmax(self.a.sup_along(bases, dirs), self.b.sup_along(bases, dirs)))

    def support(self, w) -> float:
        w = np.asarray(w, dtype=float)
        return float(max(np.max(self.points @ w), support(self.a, w), support(self.b, w)))


@functools.lru_cache(maxsize=32)
def hull(a: ParamRegion, b: ParamRegion, grid: int = HULL_GRID) -> Hull:
    return Hull(a, b, grid)


def intersect(a: Region, b: Region) -> Intersection:
    return Intersection(a, b, name=f"{a.name} & {b.name}")


def hull_member(a: ParamRegion, b: ParamRegion, p, tol: float = 0.0):
    """Whether ``p`` lies in the closed convex hull of ``a`` union ``b``."""
    return hull(a, b).member(p, tol)


# ------------------------------------------------------------------------ support


def support(region: Region, weights) -> float:
    """max of weights . R over the region."""
    w = np.asarray(weights, dtype=float)
    if w.shape != (3,) or np.any(w < 0):
        raise ValueError("weights must be a nonnegative 3-vector")
    if isinstance(region, Hull):
        return region.support(w)
    if not isinstance(region, ParamRegion):
        raise TypeError(f"support is not available for {type(region).__name__}")
    if not region.constraints:
        return math.inf if np.any(w > 0) else 0.0
    masks = region.masks
    if region.domain == INTERVAL:
        thetas = region.theta_grid(SUPPORT_STEP)
        best = _support_on(region, masks, thetas, w)
        th = thetas[np.argmax(best)]
        fine = np.clip(np.linspace(th - SUPPORT_STEP, th + SUPPORT_STEP, 201), 0.0, 1.0)
        return float(max(best.max(), _support_on(region, masks, fine, w).max()))
    grid = region.theta_grid()
    best = _support_on(region, masks, grid, w)
    top = grid[np.argsort(best)[-4:]]
    fine = _local_simplex(top, 1.0 / SIMPLEX_STEP, SIMPLEX_REFINE)
    return float(max(best.max(), _support_on(region, masks, fine, w).max()))


def _support_on(region, masks, thetas, w):
    B = region.rhs_at(thetas)
    V, owner = kernels.polytope_vertices(masks, B)
    if not np.isfinite(B).all() or len(V) == 0:
        raise ValueError("region polyhedra are unbounded or empty")
    vals = np.full(len(B), -np.inf)
    np.maximum.at(vals, owner, V @ w)
    return vals


# -------------------------------------------------------------------------- slices


@dataclass(frozen=True)
class Slice:
    fixed_axis: int
    fixed_value: float
    x_axis: int
    y_axis: int
    x: np.ndarray
    y: np.ndarray

    def to_csv(self) -> str:
        lines = [
            "fixed_axis,fixed_value,x_axis,y_axis",
            f"{self.fixed_axis},{_fmt(self.fixed_value)},{self.x_axis},{self.y_axis}",
        ]
        lines += [f"{_fmt(a)},{_fmt(b)}" for a, b in zip(self.x, self.y)]
        return "\n".join(lines) + "\n"


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def slice_region(region: Region, fixed_axis: int, fixed_value: float, grid: int = 101) -> Slice:
    """Upper boundary of the region's section at ``R[fixed_axis] = fixed_value``.

    The first remaining axis is swept on a uniform grid, the second is maximised.
    Returns an empty slice when the section is empty.
    """
    if fixed_value < 0 or not math.isfinite(fixed_value):
        raise ValueError("fixed_value must be finite and >= 0")
    if fixed_axis not in (1, 2, 3):
        raise ValueError("fixed_axis must be 1, 2 or 3")
    xa, ya = [i for i in (1, 2, 3) if i != fixed_axis]
    base = np.zeros(3)
    base[fixed_axis - 1] = fixed_value
    ex, ey = np.eye(3)[xa - 1], np.eye(3)[ya - 1]
    xmax = region.sup_along(base, ex)[0]
    if not np.isfinite(xmax):
        return Slice(fixed_axis, fixed_value, xa, ya, np.zeros(0), np.zeros(0))
    xs = np.linspace(0.0, xmax, grid)
    bases = np.repeat(base[None], grid, axis=0)
    bases[:, xa - 1] = xs
    ys = region.sup_along(bases, np.repeat(ey[None], grid, axis=0))
    ys = np.nan_to_num(ys, nan=0.0)
    ys = np.minimum.accumulate(ys)  # guard rounding; the true boundary is nonincreasing
    return Slice(fixed_axis, fixed_value, xa, ya, xs, ys)


# ------------------------------------------------------------------------- reports


def octant_directions(grid: int = 32) -> np.ndarray:
    """``grid x grid`` spherical-octant directions (polar angle x azimuth), unit length."""
    ang = np.linspace(0.0, math.pi / 2, grid)
    phi, psi = np.meshgrid(ang, ang, indexing="ij")
    d = np.stack([np.sin(phi) * np.cos(psi), np.sin(phi) * np.sin(psi), np.cos(phi)], axis=-1)
    d = np.where(np.abs(d) < 1e-15, 0.0, d)
    return d.reshape(-1, 3)


@dataclass
class BoundReport:
    verdict: str
    max_gap: float
    min_gap: float
    witness_direction: list
    grid: int
    tol: float
    inner: str = ""
    outer: str = ""
    extra: dict = field(default_factory=dict)
    directions: np.ndarray | None = field(default=None, repr=False)
    gaps: np.ndarray | None = field(default=None, repr=False)

    def to_json(self) -> dict:
        out = {
            "verdict": self.verdict,
            "max_gap": _finite(self.max_gap),
            "min_gap": _finite(self.min_gap),
            "witness_direction": [float(x) for x in self.witness_direction],
            "grid": self.grid,
            "tol": self.tol,
            "inner": self.inner,
            "outer": self.outer,
        }
        out.update(self.extra)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def _finite(v):
    return float(v) if math.isfinite(v) else None


def containment_report(inner: Region, outer: Region, grid: int = 32, tol: float = DEFAULT_TOL) -> BoundReport:
    """Compare radial functions on the octant grid; ``gap = radial(outer) - radial(inner)``."""
    dirs = octant_directions(grid)
    gaps = outer.radial(dirs) - inner.radial(dirs)
    gaps = np.where(np.isnan(gaps), 0.0, gaps)
    hi, lo = float(np.max(gaps)), float(np.min(gaps))
    if np.all(np.abs(gaps) <= tol):
        verdict = COINCIDES
    elif lo >= -tol:
        verdict = CONTAINED
    else:
        verdict = SEPARATED
    witness = dirs[np.argmin(gaps)] if verdict == SEPARATED else dirs[np.argmax(gaps)]
    return BoundReport(
        verdict, hi, lo, list(witness), grid, tol,
        inner=getattr(inner, "name", ""), outer=getattr(outer, "name", ""),
        directions=dirs, gaps=gaps,
    )


def dominant_constraints(region: ParamRegion, eps: float = 1e-12) -> list:
    """Drop constant constraints implied by the others (checked by vertex enumeration)."""
    if region.domain != INTERVAL or any(not isinstance(c.rhs, Const) for c in region.constraints):
        raise ValueError("redundancy removal needs a constant polyhedral region")
    keep = list(region.constraints)
    changed = True
    while changed:
        changed = False
        for c in list(keep):
            others = [o for o in keep if o is not c]
            if not others:
                break
            masks = np.array([o.row() for o in others])
            b = np.array([o.rhs.value for o in others])
            if np.any(masks.sum(axis=0) == 0) and np.any(c.row() * (masks.sum(axis=0) == 0)):
                continue  # c is the only bound on some coordinate
            V, _ = kernels.polytope_vertices(masks, b[None, :])
            if len(V) and np.max(V @ c.row()) <= c.rhs.value + eps:
                keep.remove(c)
                changed = True
                break
    return keep
