# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contract as ``rrw._kernels_py``."""
import numpy as np
cimport numpy as cnp
from libc.math cimport log2, sqrt, fabs, exp2, INFINITY, NAN, isfinite

cnp.import_array()

cdef double EVAL_SLACK = 1e-10
DEF MAXC = 16


cdef inline double _term(double n, double d) nogil:
    if n < 0.0:
        n = 0.0
    return 0.5 * log2((n + d) / d)


cdef inline double _rhs(int c, double th, const long[:] nterms, const double[:] const_,
                        const double[:, :, :] num, const double[:, :, :] den) nogil:
    cdef int k
    cdef double v = 0.0
    if nterms[c] == 0:
        return const_[c]
    for k in range(nterms[c]):
        v += _term(num[c, k, 0] + num[c, k, 1] * th, den[c, k, 0] + den[c, k, 1] * th)
    return v


cdef inline bint _check(double th, int m, double* s, const long[:] nterms, const double[:] const_,
                        const double[:, :, :] num, const double[:, :, :] den) nogil:
    cdef int c
    for c in range(m):
        if s[c] > 0.0 and _rhs(c, th, nterms, const_, num, den) < s[c] - EVAL_SLACK:
            return False
    return True


cdef bint _feasible(int m, double* s, const long[:] nterms, const double[:] const_,
                    const double[:, :, :] num, const double[:, :, :] den) nogil:
    cdef int c
    cdef double K, p0, p1, q0, q1, r0, r1, u0, u1, c0, c1, c2, disc, sq, qq, scale
    cdef double cand[3]
    cdef int nc, j
    if _check(0.0, m, s, nterms, const_, num, den) or _check(1.0, m, s, nterms, const_, num, den):
        return True
    for c in range(m):
        if nterms[c] == 0 or s[c] <= 0.0:
            continue
        K = exp2(2.0 * (s[c] if s[c] < 60.0 else 60.0))
        p0 = num[c, 0, 0] + den[c, 0, 0]
        p1 = num[c, 0, 1] + den[c, 0, 1]
        r0 = den[c, 0, 0]
        r1 = den[c, 0, 1]
        if nterms[c] == 1:
            c0 = p0 - K * r0
            c1 = p1 - K * r1
            c2 = 0.0
        else:
            q0 = num[c, 1, 0] + den[c, 1, 0]
            q1 = num[c, 1, 1] + den[c, 1, 1]
            u0 = den[c, 1, 0]
            u1 = den[c, 1, 1]
            c0 = p0 * q0 - K * r0 * u0
            c1 = p0 * q1 + p1 * q0 - K * (r0 * u1 + r1 * u0)
            c2 = p1 * q1 - K * r1 * u1
        nc = 0
        scale = fabs(c0) + fabs(c1) + fabs(c2)
        if fabs(c2) > 1e-13 * scale:
            disc = c1 * c1 - 4.0 * c2 * c0
            sq = sqrt(disc) if disc > 0.0 else 0.0
            qq = -0.5 * (c1 + (sq if c1 >= 0.0 else -sq))
            cand[nc] = qq / c2
            nc += 1
            if qq != 0.0:
                cand[nc] = c0 / qq
                nc += 1
            cand[nc] = -c1 / (2.0 * c2)
            nc += 1
        elif c1 != 0.0:
            cand[nc] = -c0 / c1
            nc += 1
        for j in range(nc):
            if isfinite(cand[j]) and cand[j] > 0.0 and cand[j] < 1.0:
                if _check(cand[j], m, s, nterms, const_, num, den):
                    return True
    return False


def member(double[:, :] masks, long[:] nterms, double[:] const_, double[:, :, :] num,
           double[:, :, :] den, points, double tol):
    cdef double[:, :] pts = np.atleast_2d(np.asarray(points, dtype=np.float64))
    cdef Py_ssize_t n = pts.shape[0], i
    cdef int m = masks.shape[0], c
    cdef double s[MAXC]
    if m > MAXC:
        raise ValueError("too many constraints for the compiled kernel")
    out = np.zeros(n, dtype=bool)
    cdef cnp.npy_bool[:] o = out
    with nogil:
        for i in range(n):
            for c in range(m):
                s[c] = masks[c, 0] * pts[i, 0] + masks[c, 1] * pts[i, 1] + masks[c, 2] * pts[i, 2] - tol
            o[i] = _feasible(m, s, nterms, const_, num, den)
    return out


def upper_bounds(long[:] nterms, double[:] const_, double[:, :, :] num, double[:, :, :] den):
    cdef int m = nterms.shape[0], c, k
    cdef double a, b
    out = np.zeros(m)
    cdef double[:] o = out
    for c in range(m):
        if nterms[c] == 0:
            o[c] = const_[c]
            continue
        for k in range(nterms[c]):
            a = _term(num[c, k, 0], den[c, k, 0])
            b = _term(num[c, k, 0] + num[c, k, 1], den[c, k, 0] + den[c, k, 1])
            o[c] += a if a > b else b
    return out


def sup_along(double[:, :] masks, long[:] nterms, double[:] const_, double[:, :, :] num,
              double[:, :, :] den, bases, dirs, double xtol):
    cdef double[:, :] B = np.atleast_2d(np.asarray(bases, dtype=np.float64))
    cdef double[:, :] D = np.atleast_2d(np.asarray(dirs, dtype=np.float64))
    cdef Py_ssize_t n = D.shape[0], i
    cdef int m = masks.shape[0], c
    cdef double s[MAXC]
    cdef double used[MAXC]
    cdef double w[MAXC]
    cdef double lo, hi, mid, lim
    cdef double[:] ub = upper_bounds(nterms, const_, num, den)
    if m > MAXC:
        raise ValueError("too many constraints for the compiled kernel")
    out = np.empty(n)
    cdef double[:] o = out
    with nogil:
        for i in range(n):
            hi = INFINITY
            for c in range(m):
                used[c] = masks[c, 0] * B[i, 0] + masks[c, 1] * B[i, 1] + masks[c, 2] * B[i, 2]
                w[c] = masks[c, 0] * D[i, 0] + masks[c, 1] * D[i, 1] + masks[c, 2] * D[i, 2]
                s[c] = used[c]
                if w[c] > 0.0:
                    lim = (ub[c] - used[c]) / w[c]
                    if lim < hi:
                        hi = lim
            if not _feasible(m, s, nterms, const_, num, den):
                o[i] = NAN
                continue
            if hi == INFINITY:
                o[i] = INFINITY
                continue
            if hi < 0.0:
                hi = 0.0
            lo = 0.0
            while hi - lo > xtol:
                mid = 0.5 * (lo + hi)
                for c in range(m):
                    s[c] = used[c] + mid * w[c]
                if _feasible(m, s, nterms, const_, num, den):
                    lo = mid
                else:
                    hi = mid
            o[i] = lo
    return out


def polytope_vertices(A, B, double eps=1e-9):
    cdef double[:, :] Am = np.ascontiguousarray(A, dtype=np.float64)
    cdef double[:, :] Bm = np.ascontiguousarray(np.atleast_2d(B), dtype=np.float64)
    cdef int m = Am.shape[0], g = Bm.shape[0], npl = m + 3
    cdef int a, b, c, l, r, gi, cnt = 0
    cdef double det, x0, x1, x2, lhs, rv, bb0, bb1, bb2
    cdef double M[3][3]
    cdef double inv[3][3]
    planes_np = np.vstack([np.asarray(Am), -np.eye(3)])
    cdef double[:, :] pl = planes_np
    maxv = g * ((npl * (npl - 1) * (npl - 2)) // 6)
    V_np = np.empty((maxv, 3))
    own_np = np.empty(maxv, dtype=np.int64)
    cdef double[:, :] V = V_np
    cdef long[:] own = own_np
    with nogil:
        for a in range(npl):
            for b in range(a + 1, npl):
                for c in range(b + 1, npl):
                    for l in range(3):
                        M[0][l] = pl[a, l]
                        M[1][l] = pl[b, l]
                        M[2][l] = pl[c, l]
                    det = (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                           - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                           + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
                    if fabs(det) < 1e-12:
                        continue
                    inv[0][0] = (M[1][1] * M[2][2] - M[1][2] * M[2][1]) / det
                    inv[0][1] = (M[0][2] * M[2][1] - M[0][1] * M[2][2]) / det
                    inv[0][2] = (M[0][1] * M[1][2] - M[0][2] * M[1][1]) / det
                    inv[1][0] = (M[1][2] * M[2][0] - M[1][0] * M[2][2]) / det
                    inv[1][1] = (M[0][0] * M[2][2] - M[0][2] * M[2][0]) / det
                    inv[1][2] = (M[0][2] * M[1][0] - M[0][0] * M[1][2]) / det
                    inv[2][0] = (M[1][0] * M[2][1] - M[1][1] * M[2][0]) / det
                    inv[2][1] = (M[0][1] * M[2][0] - M[0][0] * M[2][1]) / det
                    inv[2][2] = (M[0][0] * M[1][1] - M[0][1] * M[1][0]) / det
                    for gi in range(g):
                        bb0 = Bm[gi, a] if a < m else 0.0
                        bb1 = Bm[gi, b] if b < m else 0.0
                        bb2 = Bm[gi, c] if c < m else 0.0
                        x0 = inv[0][0] * bb0 + inv[0][1] * bb1 + inv[0][2] * bb2
                        x1 = inv[1][0] * bb0 + inv[1][1] * bb1 + inv[1][2] * bb2
                        x2 = inv[2][0] * bb0 + inv[2][1] * bb1 + inv[2][2] * bb2
                        for r in range(npl):
                            lhs = pl[r, 0] * x0 + pl[r, 1] * x1 + pl[r, 2] * x2
                            rv = Bm[gi, r] if r < m else 0.0
                            if lhs - rv > eps * (1.0 + fabs(rv)):
                                break
                        else:
                            V[cnt, 0] = x0
                            V[cnt, 1] = x1
                            V[cnt, 2] = x2
                            own[cnt] = gi
                            cnt += 1
    order = np.argsort(own_np[:cnt], kind="stable")
    return V_np[:cnt][order], own_np[:cnt][order]
