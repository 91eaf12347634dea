# cython: boundscheck=False, wraparound=False, language_level=3
"""Compiled mod-p sweep kernels.

Same contract and candidate order as the numpy fallback: base-p digits of
the candidate index, most significant digit first, first witness wins.
"""

import numpy as np

cimport numpy as cnp

BACKEND = "cython"

ctypedef long long i64


cdef inline i64 _pmod(i64 x, i64 p):
    x = x % p
    if x < 0:
        x += p
    return x


cdef bint _invertible(i64[:, ::1] w, int n, i64 p, i64[::1] inv):
    """Destructive Gaussian elimination on w; True iff full rank mod p."""
    cdef int c, r, j, pr
    cdef i64 pv, f, t
    for c in range(n):
        pr = -1
        for r in range(c, n):
            if _pmod(w[r, c], p) != 0:
                pr = r
                break
        if pr < 0:
            return False
        if pr != c:
            for j in range(n):
                t = w[c, j]
                w[c, j] = w[pr, j]
                w[pr, j] = t
        pv = inv[_pmod(w[c, c], p)]
        for j in range(n):
            w[c, j] = _pmod(w[c, j] * pv, p)
        for r in range(c + 1, n):
            f = _pmod(w[r, c], p)
            if f != 0:
                for j in range(n):
                    w[r, j] = _pmod(w[r, j] - f * w[c, j], p)
    return True


cdef void _next_digits(i64[::1] d, int h, i64 p):
    cdef int t = h - 1
    while t >= 0:
        d[t] += 1
        if d[t] < p:
            return
        d[t] = 0
        t -= 1


cdef void _combine(i64[::1] d, i64[:, :, ::1] basis, i64[:, ::1] out,
                   int h, int r, int c, i64 p):
    cdef int t, i, j
    cdef i64 acc
    for i in range(r):
        for j in range(c):
            acc = 0
            for t in range(h):
                acc += d[t] * basis[t, i, j]
            out[i, j] = _pmod(acc, p)


cdef i64[::1] _inv_table(i64 p):
    cdef cnp.ndarray arr = np.zeros(p, dtype=np.int64)
    cdef i64 x
    for x in range(1, p):
        arr[x] = pow(int(x), int(p - 2), int(p))
    return arr


def sweep_pair_iso(object basis_phi, object basis_psi, long long p, long long total):
    cdef i64[:, :, ::1] bphi = np.ascontiguousarray(basis_phi, dtype=np.int64)
    cdef i64[:, :, ::1] bpsi = np.ascontiguousarray(basis_psi, dtype=np.int64)
    cdef int h = bphi.shape[0]
    cdef int a = bphi.shape[1]
    cdef int b = bpsi.shape[1]
    cdef i64[::1] inv = _inv_table(p)
    cdef i64[::1] d = np.zeros(h, dtype=np.int64)
    cdef i64[:, ::1] phi = np.zeros((a, a), dtype=np.int64)
    cdef i64[:, ::1] psi = np.zeros((b, b), dtype=np.int64)
    cdef i64[:, ::1] work_a = np.zeros((a, a), dtype=np.int64)
    cdef i64[:, ::1] work_b = np.zeros((b, b), dtype=np.int64)
    cdef i64 idx
    cdef int i, j
    for idx in range(total):
        if idx > 0:
            _next_digits(d, h, p)
        _combine(d, bphi, phi, h, a, a, p)
        for i in range(a):
            for j in range(a):
                work_a[i, j] = phi[i, j]
        if _invertible(work_a, a, p, inv):
            _combine(d, bpsi, psi, h, b, b, p)
            for i in range(b):
                for j in range(b):
                    work_b[i, j] = psi[i, j]
            if _invertible(work_b, b, p, inv):
                return [int(d[t]) for t in range(h)], int(idx + 1)
    return None, int(total)


def sweep_isometry(object basis, object gram_src, object gram_tgt,
                   long long p, long long total):
    cdef i64[:, :, ::1] bas = np.ascontiguousarray(basis, dtype=np.int64)
    cdef i64[:, :, ::1] gs = np.ascontiguousarray(np.asarray(gram_src) % p, dtype=np.int64)
    cdef i64[:, :, ::1] gt = np.ascontiguousarray(np.asarray(gram_tgt) % p, dtype=np.int64)
    cdef int h = bas.shape[0]
    cdef int n = bas.shape[1]
    cdef int D = gs.shape[2]
    cdef i64[::1] inv = _inv_table(p)
    cdef i64[::1] d = np.zeros(h, dtype=np.int64)
    cdef i64[:, ::1] phi = np.zeros((n, n), dtype=np.int64)
    cdef i64[:, ::1] work = np.zeros((n, n), dtype=np.int64)
    cdef i64 idx, acc, cuv
    cdef int i, j, u, v, m
    cdef bint ok
    for idx in range(total):
        if idx > 0:
            _next_digits(d, h, p)
        _combine(d, bas, phi, h, n, n, p)
        ok = True
        # (0, 0) entry first: cheapest rejection
        for m in range(D):
            acc = 0
            for u in range(n):
                if phi[u, 0] == 0:
                    continue
                for v in range(n):
                    if phi[v, 0] != 0:
                        acc += phi[u, 0] * phi[v, 0] % p * gt[u, v, m]
            if _pmod(acc, p) != gs[0, 0, m]:
                ok = False
                break
        if not ok:
            continue
        for i in range(n):
            if not ok:
                break
            for j in range(n):
                if not ok:
                    break
                if i == 0 and j == 0:
                    continue
                for m in range(D):
                    acc = 0
                    for u in range(n):
                        if phi[u, i] == 0:
                            continue
                        for v in range(n):
                            if phi[v, j] != 0:
                                acc += phi[u, i] * phi[v, j] % p * gt[u, v, m]
                    if _pmod(acc, p) != gs[i, j, m]:
                        ok = False
                        break
        if not ok:
            continue
        for i in range(n):
            for j in range(n):
                work[i, j] = phi[i, j]
        if _invertible(work, n, p, inv):
            return [int(d[t]) for t in range(h)], int(idx + 1)
    return None, int(total)


def sweep_congruence(object struct, object invol, object f, object fp,
                     long long p, long long total):
    cdef i64[:, :, ::1] C = np.ascontiguousarray(np.asarray(struct) % p, dtype=np.int64)
    cdef i64[:, ::1] S = np.ascontiguousarray(np.asarray(invol) % p, dtype=np.int64)
    cdef i64[::1] fv = np.ascontiguousarray(np.asarray(f) % p, dtype=np.int64)
    cdef i64[::1] fpv = np.ascontiguousarray(np.asarray(fp) % p, dtype=np.int64)
    cdef int m = C.shape[0]
    # cf[i, t] = coordinates of e_i * f
    cdef i64[:, ::1] cf = np.ascontiguousarray(
        np.einsum("j,ijt->it", np.asarray(f) % p, np.asarray(struct) % p) % p,
        dtype=np.int64)
    cdef i64[::1] inv = _inv_table(p)
    cdef i64[::1] g = np.zeros(m, dtype=np.int64)
    cdef i64[::1] tg = np.zeros(m, dtype=np.int64)
    cdef i64[::1] t1 = np.zeros(m, dtype=np.int64)
    cdef i64[:, ::1] lm = np.zeros((m, m), dtype=np.int64)
    cdef i64 idx, acc
    cdef int i, j, t
    cdef bint ok
    for idx in range(total):
        if idx > 0:
            _next_digits(g, m, p)
        for t in range(m):
            acc = 0
            for j in range(m):
                acc += S[t, j] * g[j]
            tg[t] = _pmod(acc, p)
        for t in range(m):
            acc = 0
            for i in range(m):
                acc += tg[i] * cf[i, t]
            t1[t] = _pmod(acc, p)
        ok = True
        for t in range(m):
            acc = 0
            for i in range(m):
                if t1[i] == 0:
                    continue
                for j in range(m):
                    if g[j] != 0:
                        acc += t1[i] * g[j] % p * C[i, j, t]
            if _pmod(acc, p) != fpv[t]:
                ok = False
                break
        if not ok:
            continue
        for t in range(m):
            for j in range(m):
                acc = 0
                for i in range(m):
                    acc += g[i] * C[i, j, t]
                lm[t, j] = _pmod(acc, p)
        if _invertible(lm, m, p, inv):
            return [int(g[t]) for t in range(m)], int(idx + 1)
    return None, int(total)
