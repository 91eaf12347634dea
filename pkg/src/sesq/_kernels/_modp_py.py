"""Numpy fallback for the mod-p sweep kernels.

Candidates are processed in blocks; every arithmetic step stays in int64
and reduces mod p, so results are exact.  Invertibility uses a batched
Gaussian elimination with a modular inverse table, not floating point.
"""

import numpy as np

BACKEND = "numpy"

_CHUNK = 65536


def _inv_table(p):
    t = np.zeros(p, dtype=np.int64)
    for x in range(1, p):
        t[x] = pow(x, p - 2, p)
    return t


def _decode(idx, h, p):
    """Base-p digits of each index, most significant digit first."""
    out = np.empty((idx.size, h), dtype=np.int64)
    rem = idx.copy()
    for t in range(h - 1, -1, -1):
        out[:, t] = rem % p
        rem //= p
    return out


def _batch_invertible(mats, p, inv):
    """Exact invertibility mod p for a (N, n, n) stack."""
    m = mats % p
    m = m.copy()
    N, n, _ = m.shape
    if n == 0:
        return np.ones(N, dtype=bool)
    ok = np.ones(N, dtype=bool)
    rows = np.arange(N)
    for c in range(n):
        col = m[:, c:, c]
        nz = col != 0
        ok &= nz.any(axis=1)
        piv = np.argmax(nz, axis=1) + c
        tmp = m[rows, piv].copy()
        m[rows, piv] = m[:, c]
        m[:, c] = tmp
        pv = m[:, c, c]
        m[:, c, :] = (m[:, c, :] * inv[pv][:, None]) % p
        if c + 1 < n:
            below = m[:, c + 1:, c]
            m[:, c + 1:, :] = (m[:, c + 1:, :] - below[:, :, None] * m[:, c, :][:, None, :]) % p
    return ok


def sweep_pair_iso(basis_phi, basis_psi, p, total):
    """First coefficient vector whose combined (phi, psi) are both invertible.

    basis_phi: (h, a, a) int64, basis_psi: (h, b, b) int64.
    Returns (coeffs (h,) or None, candidates inspected).
    """
    h = basis_phi.shape[0]
    inv = _inv_table(p)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        coeffs = _decode(np.arange(start, stop, dtype=np.int64), h, p)
        phis = np.tensordot(coeffs, basis_phi, axes=(1, 0)) % p
        psis = np.tensordot(coeffs, basis_psi, axes=(1, 0)) % p
        good = _batch_invertible(phis, p, inv) & _batch_invertible(psis, p, inv)
        hits = np.nonzero(good)[0]
        if hits.size:
            k = int(hits[0])
            return coeffs[k].tolist(), start + k + 1
    return None, total


def sweep_isometry(basis, gram_src, gram_tgt, p, total):
    """First invertible phi in the span with
    sum_{u,v} phi[u,i] phi[v,j] gram_tgt[u,v,:] == gram_src[i,j,:] (mod p).

    basis: (h, n, n); gram_*: (n, n, D).
    """
    h = basis.shape[0]
    n = basis.shape[1]
    g00 = gram_src[0, 0] % p
    gs = gram_src % p
    gt = gram_tgt % p
    inv = _inv_table(p)
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        coeffs = _decode(np.arange(start, stop, dtype=np.int64), h, p)
        phis = np.tensordot(coeffs, basis, axes=(1, 0)) % p
        # cheap screen on the (0, 0) entry before the full transport check
        x0 = phis[:, :, 0]
        t00 = np.einsum("xu,uvd,xv->xd", x0, gt, x0) % p
        alive = np.nonzero((t00 == g00).all(axis=1))[0]
        if alive.size == 0:
            continue
        sub = phis[alive]
        full = np.einsum("xui,uvd,xvj->xijd", sub, gt, sub,
                         optimize=True) % p
        keep = (full == gs).all(axis=(1, 2, 3))
        alive = alive[keep]
        if alive.size == 0:
            continue
        keep = _batch_invertible(phis[alive], p, inv)
        alive = alive[keep]
        if alive.size:
            k = int(alive[0])
            return coeffs[k].tolist(), start + k + 1
    return None, total


def sweep_congruence(struct, invol, f, fp, p, total):
    """First unit g with mult(mult(sigma(g), f), g) == fp.

    struct: (m, m, m) with struct[i, j, t] the t-coordinate of e_i e_j;
    invol: (m, m) with sigma(e_j) in column j.
    """
    m = struct.shape[0]
    struct = struct % p
    invol = invol % p
    f = f % p
    fp = fp % p
    inv = _inv_table(p)
    # mult(x, f)_t = sum_i x_i Cf[i, t]
    cf = np.einsum("j,ijt->it", f, struct) % p
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        g = _decode(np.arange(start, stop, dtype=np.int64), m, p)
        tg = (g @ invol.T) % p
        t1 = (tg @ cf) % p
        t2 = np.einsum("xi,ijt,xj->xt", t1, struct, g) % p
        alive = np.nonzero((t2 == fp).all(axis=1))[0]
        if alive.size == 0:
            continue
        # left multiplication matrix L[t, j] = sum_i g_i struct[i, j, t]
        lm = np.einsum("xi,ijt->xtj", g[alive], struct) % p
        keep = _batch_invertible(lm, p, inv)
        alive = alive[keep]
        if alive.size:
            k = int(alive[0])
            return g[k].tolist(), start + k + 1
    return None, total
