"""Sesquilinear forms as A-valued Gram arrays.

Convention: the row index is the first argument, G[i][j] = s(e_i, e_j),
with each entry a coordinate vector over the algebra.  Adjoints are derived
from the Gram array relative to the stored functional basis of the dual.
"""

from __future__ import annotations

import random

from . import linalg
from .amodule import ModuleHom, direct_sum, dual_hom, dual_module, module_extend
from .errors import (AlgebraMismatch, NoUnimodularFound, NotAGroupRing,
                     NotInvariant, NotSesquilinear)
from .exactfield import field_embed


class SesqForm:
    def __init__(self, module, gram):
        self.module = module
        self.gram = gram            # n x n array of algebra coordinate vectors
        self._left = None
        self._right = None
        self._qobj = None           # cached darrow image
        self._endo = None           # cached endomorphism ring with involution

    @property
    def algebra(self):
        return self.module.algebra

    @property
    def dim(self):
        return self.module.dim

    def validate(self):
        A = self.algebra
        F = A.field
        n = self.module.dim
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise NotSesquilinear("Gram array has wrong shape")
        for row in self.gram:
            for entry in row:
                if len(entry) != A.dim:
                    raise NotSesquilinear("Gram entry is not an algebra element")
        for b in range(A.dim):
            R = self.module.actions[b]
            eb = A.basis_el(b)
            seb = A.sigma_vec(eb)
            for i in range(n):
                for j in range(n):
                    # right compatibility: s(e_i, e_j b) = s(e_i, e_j) * b
                    acc = A.zero_el()
                    for m in range(n):
                        if R[m][j] != F.zero:
                            acc = linalg.vec_add(F, acc,
                                                 linalg.vec_scale(F, R[m][j], self.gram[i][m]))
                    if acc != A.mul_vec(self.gram[i][j], eb):
                        raise NotSesquilinear(f"right compatibility fails at (a{b},{i},{j})")
                    # left compatibility: s(e_i b, e_j) = sigma(b) s(e_i, e_j)
                    acc = A.zero_el()
                    for m in range(n):
                        if R[m][i] != F.zero:
                            acc = linalg.vec_add(F, acc,
                                                 linalg.vec_scale(F, R[m][i], self.gram[m][j]))
                    if acc != A.mul_vec(seb, self.gram[i][j]):
                        raise NotSesquilinear(f"left compatibility fails at (a{b},{i},{j})")
        return self

    def evaluate(self, x, y):
        """s(x, y) for coordinate vectors x, y over k."""
        A = self.algebra
        F = A.field
        acc = A.zero_el()
        for i, xi in enumerate(x):
            if xi == F.zero:
                continue
            for j, yj in enumerate(y):
                if yj == F.zero:
                    continue
                acc = linalg.vec_add(F, acc,
                                     linalg.vec_scale(F, F.mul(xi, yj), self.gram[i][j]))
        return acc

    def __eq__(self, other):
        return (isinstance(other, SesqForm) and self.module == other.module
                and self.gram == other.gram)

    def __repr__(self):
        return f"SesqForm(dim={self.dim} over {self.algebra!r})"


class SesqSystem:
    """Ordered list of sesquilinear forms sharing one module."""

    def __init__(self, module, grams):
        self.module = module
        self.grams = grams
        self._qobj = None

    @property
    def members(self):
        return [SesqForm(self.module, g) for g in self.grams]

    def validate(self):
        for m in self.members:
            m.validate()
        return self

    def __eq__(self, other):
        return (isinstance(other, SesqSystem) and self.module == other.module
                and self.grams == other.grams)


class GBilinearForm:
    """G-invariant k-valued bilinear form on a module over a group ring."""

    def __init__(self, module, bmat):
        self.module = module
        self.bmat = bmat

    def validate(self):
        A = self.module.algebra
        if A.group is None:
            raise NotAGroupRing("module is not over a group ring")
        F = A.field
        n = self.module.dim
        if len(self.bmat) != n or any(len(r) != n for r in self.bmat):
            raise NotInvariant("bilinear Gram matrix has wrong shape")
        for g in range(A.dim):
            Rg = self.module.actions[g]
            lhs = linalg.matmul(F, linalg.matmul(F, linalg.transpose(Rg, cols=n), self.bmat,
                                                 bcols=n), Rg, bcols=n)
            if lhs != self.bmat:
                raise NotInvariant(f"form is not invariant under group element {g}")
        return self

    def __eq__(self, other):
        return (isinstance(other, GBilinearForm) and self.module == other.module
                and self.bmat == other.bmat)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def form_validate(module, gram):
    return SesqForm(module, gram).validate()


def zero_form(module):
    A = module.algebra
    return SesqForm(module, [[A.zero_el() for _ in range(module.dim)]
                             for _ in range(module.dim)])


def left_adjoint(s):
    """s_l : V -> V*, s_l(x)(y) = s(x, y).  Cached on the form."""
    if s._left is not None:
        return s._left
    V = s.module
    Vd = dual_module(V)
    cols = []
    for i in range(V.dim):
        # functional matrix of s_l(e_i): column j = s(e_i, e_j)
        fmat = linalg.transpose([s.gram[i][j] for j in range(V.dim)], cols=s.algebra.dim) \
            if V.dim else [[] for _ in range(s.algebra.dim)]
        cols.append(Vd.functional_coords(fmat))
    mat = linalg.transpose(cols, cols=Vd.dim) if cols else [[] for _ in range(Vd.dim)]
    s._left = ModuleHom(V, Vd, mat).validate()
    return s._left


def right_adjoint(s):
    """s_r : V -> V*, s_r(x)(y) = sigma(s(y, x)).  Cached on the form."""
    if s._right is not None:
        return s._right
    V = s.module
    A = s.algebra
    Vd = dual_module(V)
    cols = []
    for i in range(V.dim):
        fmat = linalg.transpose([A.sigma_vec(s.gram[j][i]) for j in range(V.dim)],
                                cols=A.dim) if V.dim else [[] for _ in range(A.dim)]
        cols.append(Vd.functional_coords(fmat))
    mat = linalg.transpose(cols, cols=Vd.dim) if cols else [[] for _ in range(Vd.dim)]
    s._right = ModuleHom(V, Vd, mat).validate()
    return s._right


def unimodular_check(s):
    return left_adjoint(s).is_invertible()


def orth_sum(s, t):
    if s.algebra != t.algebra:
        raise AlgebraMismatch("orthogonal sum over different algebras")
    A = s.algebra
    V = direct_sum(s.module, t.module)
    n, m = s.dim, t.dim
    gram = [[A.zero_el() for _ in range(n + m)] for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            gram[i][j] = s.gram[i][j]
    for i in range(m):
        for j in range(m):
            gram[n + i][n + j] = t.gram[i][j]
    return SesqForm(V, gram)


def form_extend(s, L):
    """Scalar extension of a form (or system) along k -> L."""
    if isinstance(s, SesqSystem):
        VL = module_extend(s.module, L)
        k = s.module.field
        grams = [[[ [field_embed(k, L, c) for c in e] for e in row] for row in g]
                 for g in s.grams]
        return SesqSystem(VL, grams)
    VL = module_extend(s.module, L)
    k = s.module.field
    gram = [[[field_embed(k, L, c) for c in e] for e in row] for row in s.gram]
    return SesqForm(VL, gram)


def isometry_criterion(s, t, phi_mat):
    """True iff phi transports s to t: it is an invertible module hom with
    t(phi x, phi y) = s(x, y) entrywise on the Gram arrays."""
    V, W = s.module, t.module
    F = V.field
    if V.dim != W.dim:
        return False
    hom = ModuleHom(V, W, phi_mat)
    try:
        hom.validate()
    except Exception:
        return False
    if not hom.is_invertible():
        return False
    return gram_transports(s, t, phi_mat)


def gram_transports(s, t, phi_mat):
    """Entrywise Gram transport t(phi e_i, phi e_j) == s(e_i, e_j)."""
    F = s.module.field
    n = s.dim
    for i in range(n):
        col_i = [phi_mat[p][i] for p in range(t.dim)]
        for j in range(n):
            col_j = [phi_mat[q][j] for q in range(t.dim)]
            if t.evaluate(col_i, col_j) != s.gram[i][j]:
                return False
    return True


def isometry_criterion_adjoint(s, t, phi_mat):
    """The adjoint-level criterion s_l = phi* t_l phi, as a matrix identity."""
    F = s.module.field
    phi = ModuleHom(s.module, t.module, phi_mat)
    lhs = left_adjoint(s).mat
    rhs = dual_hom(phi).compose(left_adjoint(t)).compose(phi).mat
    return lhs == rhs


# -- the section-11 bridge ----------------------------------------------------

def gbilinear_to_sesq(b):
    """S(x, y) = sum_g b(x g, y) g, assembled entrywise."""
    b.validate()
    A = b.module.algebra
    F = A.field
    n = b.module.dim
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = A.zero_el()
            for g in range(A.dim):
                Rg = b.module.actions[g]
                # b(e_i g, e_j) = sum_p Rg[p][i] B[p][j]
                coef = F.zero
                for p in range(n):
                    if Rg[p][i] != F.zero:
                        coef = F.add(coef, F.mul(Rg[p][i], b.bmat[p][j]))
                entry[g] = coef
            row.append(entry)
        gram.append(row)
    return form_validate(b.module, gram)


def sesq_to_gbilinear(s):
    """Project each Gram entry to its group-unit coefficient."""
    A = s.algebra
    if A.group is None:
        raise NotAGroupRing("form is not over a group ring")
    e = A.group.unit_index
    bmat = [[s.gram[i][j][e] for j in range(s.dim)] for i in range(s.dim)]
    return GBilinearForm(s.module, bmat).validate()


# -- seeded random forms -------------------------------------------------------

def gram_solution_span(V):
    """Span of all valid Gram arrays on V, flattened as n*n*d vectors. Cached."""
    if V._gram_span is not None:
        return V._gram_span
    A = V.algebra
    F = A.field
    n = V.dim
    d = A.dim
    unknowns = n * n * d

    def pos(i, j, m):
        return (i * n + j) * d + m

    rows = []
    for b in range(d):
        R = V.actions[b]
        eb = A.basis_el(b)
        seb = A.sigma_vec(eb)
        Rright = A.right_mult_matrix(eb)    # x -> x * a_b on coordinates
        Lleft = A.left_mult_matrix(seb)     # x -> sigma(a_b) * x
        for i in range(n):
            for j in range(n):
                for m in range(d):
                    # right: sum_t R[t][j] G[i][t][m] - (G[i][j] * a_b)[m] = 0
                    row = [F.zero] * unknowns
                    for t in range(n):
                        if R[t][j] != F.zero:
                            p = pos(i, t, m)
                            row[p] = F.add(row[p], R[t][j])
                    for mm in range(d):
                        if Rright[m][mm] != F.zero:
                            p = pos(i, j, mm)
                            row[p] = F.sub(row[p], Rright[m][mm])
                    if any(x != F.zero for x in row):
                        rows.append(row)
                    # left: sum_t R[t][i] G[t][j][m] - (sigma(a_b) G[i][j])[m] = 0
                    row = [F.zero] * unknowns
                    for t in range(n):
                        if R[t][i] != F.zero:
                            p = pos(t, j, m)
                            row[p] = F.add(row[p], R[t][i])
                    for mm in range(d):
                        if Lleft[m][mm] != F.zero:
                            p = pos(i, j, mm)
                            row[p] = F.sub(row[p], Lleft[m][mm])
                    if any(x != F.zero for x in row):
                        rows.append(row)
    basis, free = linalg.nullspace_free(F, rows, cols=unknowns)
    span = linalg.Span(F, basis, free)
    V._gram_span = span
    return span


def _unflatten_gram(vec, n, d):
    return [[list(vec[(i * n + j) * d:(i * n + j) * d + d]) for j in range(n)]
            for i in range(n)]


def random_form(V, seed, require_unimodular=False, max_tries=128):
    """Seeded uniform sample from the space of valid Gram arrays on V."""
    from .errors import InfiniteField
    F = V.field
    if F.order is None:
        raise InfiniteField("random_form needs a finite base field")
    span = gram_solution_span(V)
    rng = random.Random(f"sesq-random-form:{seed}")
    total = V.dim * V.dim * V.algebra.dim
    for _ in range(max(1, max_tries)):
        coeffs = [F.sample(rng) for _ in range(span.dim)]
        vec = span.combine(coeffs) if span.dim else [F.zero] * total
        gram = _unflatten_gram(vec, V.dim, V.algebra.dim)
        s = SesqForm(V, gram)
        if not require_unimodular or unimodular_check(s):
            return s
    raise NoUnimodularFound(f"no unimodular form found in {max_tries} tries")
