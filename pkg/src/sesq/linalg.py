"""Generic exact linear algebra over a field context.

Matrices are lists of rows; vectors are flat lists.  Everything works for any
of the three field contexts.  Row-echelon computations always pick the first
nonzero pivot, so all derived bases are deterministic.
"""

from __future__ import annotations


def zeros(F, rows, cols):
    return [[F.zero for _ in range(cols)] for _ in range(rows)]


def identity(F, n):
    return [[F.one if i == j else F.zero for j in range(n)] for i in range(n)]


def transpose(mat, rows=None, cols=None):
    if not mat:
        return [[] for _ in range(cols)] if cols else []
    return [[mat[i][j] for i in range(len(mat))] for j in range(len(mat[0]))]


def mat_add(F, a, b):
    return [[F.add(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(F, a, b):
    return [[F.sub(x, y) for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(F, c, a):
    return [[F.mul(c, x) for x in row] for row in a]


def matmul(F, a, b, bcols=None):
    """a (r x k) times b (k x c).  Pass bcols when k == 0."""
    r = len(a)
    k = len(b)
    if k == 0:
        if bcols is None:
            bcols = 0 if not a else None
        if bcols is None:
            raise ValueError("matmul needs bcols for empty inner dimension")
        return zeros(F, r, bcols)
    c = len(b[0])
    out = zeros(F, r, c)
    for i in range(r):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x == F.zero:
                continue
            bt = b[t]
            for j in range(c):
                oi[j] = F.add(oi[j], F.mul(x, bt[j]))
    return out


def matvec(F, a, v):
    return [
        _dot(F, row, v)
        for row in a
    ]


def _dot(F, u, v):
    acc = F.zero
    for x, y in zip(u, v):
        if x != F.zero and y != F.zero:
            acc = F.add(acc, F.mul(x, y))
    return acc


def vec_add(F, u, v):
    return [F.add(x, y) for x, y in zip(u, v)]


def vec_sub(F, u, v):
    return [F.sub(x, y) for x, y in zip(u, v)]


def vec_scale(F, c, u):
    return [F.mul(c, x) for x in u]


def mat_eq(a, b):
    return a == b


def rref(F, mat):
    """Reduced row echelon form.  Returns (rref matrix, pivot column list)."""
    m = [row[:] for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pr = None
        for i in range(r, rows):
            if m[i][c] != F.zero:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(inv, x) for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != F.zero:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(F, mat):
    return len(rref(F, mat)[1])


def nullspace(F, mat, cols=None):
    """Echelon-canonical nullspace basis of mat (as column vectors).

    Each basis vector carries a 1 in its free coordinate and zeros in the
    other free coordinates, ordered by increasing free-column index.
    Pass cols explicitly when mat has no rows.
    """
    rows = len(mat)
    if rows == 0:
        if cols is None:
            raise ValueError("nullspace of empty system needs explicit cols")
        return [[F.one if i == j else F.zero for i in range(cols)] for j in range(cols)]
    cols = len(mat[0])
    red, pivots = rref(F, mat)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [F.zero] * cols
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(red[r][fc])
        basis.append(v)
    return basis


def nullspace_free(F, mat, cols=None):
    """Like nullspace, but also returns the free column indices.

    The canonical basis vector for free column f has a 1 at position f and
    zeros at every other free position, so the coordinates of any vector in
    the span can be read off its free positions.
    """
    rows = len(mat)
    if rows == 0:
        if cols is None:
            raise ValueError("nullspace of empty system needs explicit cols")
        basis = [[F.one if i == j else F.zero for i in range(cols)] for j in range(cols)]
        return basis, list(range(cols))
    cols = len(mat[0])
    red, pivots = rref(F, mat)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [F.zero] * cols
        v[fc] = F.one
        for r, pc in enumerate(pivots):
            v[pc] = F.neg(red[r][fc])
        basis.append(v)
    return basis, free


class Span:
    """Echelon-canonical subspace with O(1) coordinate extraction."""

    def __init__(self, F, basis, free):
        self.F = F
        self.basis = basis
        self.free = free

    @property
    def dim(self):
        return len(self.basis)

    def coords(self, vec):
        """Coordinates of vec in the basis; None if vec is outside the span."""
        F = self.F
        x = [vec[f] for f in self.free]
        recon = [F.zero] * len(vec)
        for c, bv in zip(x, self.basis):
            if c != F.zero:
                for i, b in enumerate(bv):
                    if b != F.zero:
                        recon[i] = F.add(recon[i], F.mul(c, b))
        if recon != list(vec):
            return None
        return x

    def combine(self, coeffs):
        F = self.F
        n = len(self.basis[0]) if self.basis else 0
        out = [F.zero] * n
        for c, bv in zip(coeffs, self.basis):
            if c != F.zero:
                for i, b in enumerate(bv):
                    if b != F.zero:
                        out[i] = F.add(out[i], F.mul(c, b))
        return out


def inverse(F, mat):
    """Exact inverse, or None if singular (also for the 0x0 matrix: [])."""
    n = len(mat)
    if n == 0:
        return []
    aug = [row[:] + ident_row for row, ident_row in zip(mat, identity(F, n))]
    red, pivots = rref(F, aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def is_invertible(F, mat):
    n = len(mat)
    if n == 0:
        return True
    if any(len(row) != n for row in mat):
        return False
    return rank(F, mat) == n


def solve(F, a, b):
    """One solution x of a x = b, or None.  b is a flat vector."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if rows == 0:
        return [F.zero] * cols
    aug = [a[i][:] + [b[i]] for i in range(rows)]
    red, pivots = rref(F, aug)
    if cols in pivots:
        return None
    x = [F.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def block_diag(F, a, ashape, b, bshape):
    """Block diagonal of a (ar x ac) and b (br x bc), shapes passed explicitly."""
    ar, ac = ashape
    br, bc = bshape
    out = zeros(F, ar + br, ac + bc)
    for i in range(ar):
        for j in range(ac):
            out[i][j] = a[i][j]
    for i in range(br):
        for j in range(bc):
            out[ar + i][ac + j] = b[i][j]
    return out


def flatten(mat):
    return [x for row in mat for x in row]


def unflatten(vec, rows, cols):
    return [list(vec[i * cols:(i + 1) * cols]) for i in range(rows)]
