"""Right modules over an algebra with involution.

A module is a k-space with one action matrix per algebra basis element;
coordinates are columns, so x * a_i has coordinates R_i x and the right
action law reads R(a_i a_j) = R_j R_i.

Dual modules are computed concretely: a functional is an A-linear map
V -> A stored as a (dim A) x (dim V) matrix over k, the functional basis
being the echelon-canonical basis of the intertwining system.  Nothing ever
identifies V* with V.
"""

from __future__ import annotations

from . import linalg
from .errors import AlgebraMismatch, NotAModule
from .exactfield import field_embed


class RightModule:
    def __init__(self, algebra, dim, actions):
        self.algebra = algebra
        self.dim = dim
        self.actions = actions
        self._dual = None
        self._ddual_map = None
        self._gram_span = None

    @property
    def field(self):
        return self.algebra.field

    def act_matrix(self, avec):
        """Action matrix of an arbitrary algebra element."""
        F = self.field
        out = linalg.zeros(F, self.dim, self.dim)
        for i, c in enumerate(avec):
            if c == F.zero:
                continue
            Ri = self.actions[i]
            for r in range(self.dim):
                for s in range(self.dim):
                    if Ri[r][s] != F.zero:
                        out[r][s] = F.add(out[r][s], F.mul(c, Ri[r][s]))
        return out

    def validate(self):
        A = self.algebra
        F = self.field
        n = self.dim
        if len(self.actions) != A.dim:
            raise NotAModule("one action matrix per algebra basis element required")
        for R in self.actions:
            if len(R) != n or any(len(row) != n for row in R):
                raise NotAModule("action matrix has wrong shape")
        if self.act_matrix(A.unit) != linalg.identity(F, n):
            raise NotAModule("unit does not act as the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                lhs = self.act_matrix(A.structure[i][j])
                rhs = linalg.matmul(F, self.actions[j], self.actions[i])
                if lhs != rhs:
                    raise NotAModule(f"R(a{i}*a{j}) != R(a{j}) R(a{i})")
        return self

    def basis_vec(self, j):
        v = [self.field.zero] * self.dim
        v[j] = self.field.one
        return v

    def __eq__(self, other):
        return (isinstance(other, RightModule)
                and self.algebra == other.algebra
                and self.dim == other.dim
                and self.actions == other.actions)

    def __repr__(self):
        return f"RightModule(dim={self.dim} over {self.algebra!r})"


class ModuleHom:
    """A-linear map, stored as an (dim target) x (dim source) matrix over k."""

    def __init__(self, source, target, mat):
        self.source = source
        self.target = target
        self.mat = mat

    def validate(self):
        F = self.source.field
        if self.source.algebra != self.target.algebra:
            raise AlgebraMismatch("hom between modules over different algebras")
        if len(self.mat) != self.target.dim or any(len(r) != self.source.dim for r in self.mat):
            raise NotAModule("hom matrix has wrong shape")
        for i in range(self.source.algebra.dim):
            lhs = linalg.matmul(F, self.mat, self.source.actions[i], bcols=self.source.dim)
            rhs = linalg.matmul(F, self.target.actions[i], self.mat, bcols=self.source.dim)
            if lhs != rhs:
                raise NotAModule(f"map does not intertwine action of a{i}")
        return self

    def compose(self, other):
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise AlgebraMismatch("composition shape mismatch")
        F = self.source.field
        return ModuleHom(other.source, self.target,
                         linalg.matmul(F, self.mat, other.mat, bcols=other.source.dim))

    def is_invertible(self):
        return (self.source.dim == self.target.dim
                and linalg.is_invertible(self.source.field, self.mat))

    def inverse(self):
        inv = linalg.inverse(self.source.field, self.mat)
        if inv is None or self.source.dim != self.target.dim:
            from .errors import NotInvertible
            raise NotInvertible("module hom is not invertible")
        return ModuleHom(self.target, self.source, inv)

    def __eq__(self, other):
        return (isinstance(other, ModuleHom) and self.source == other.source
                and self.target == other.target and self.mat == other.mat)

    def __repr__(self):
        return f"ModuleHom({self.source.dim} -> {self.target.dim})"


class DualModule(RightModule):
    """V* with a concrete functional basis and coordinate extraction."""

    def __init__(self, base, dim, actions, functionals, span):
        super().__init__(base.algebra, dim, actions)
        self.base = base
        self.functionals = functionals   # list of (dim A) x (dim V) matrices
        self.span = span                 # Span over flattened functionals

    def functional_coords(self, fmat):
        """Coordinates of a raw functional matrix in the stored basis."""
        x = self.span.coords(linalg.flatten(fmat))
        if x is None:
            raise NotAModule("functional not in the dual space")
        return x


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def module_validate(algebra, dim, actions):
    return RightModule(algebra, dim, actions).validate()


def zero_module(A):
    return RightModule(A, 0, [[] for _ in range(A.dim)])


def regular_module(A):
    """A as a right module over itself.  Cached on the algebra."""
    cached = getattr(A, "_regular_module", None)
    if cached is not None:
        return cached
    # column i of R_j = coordinates of a_i * a_j
    actions = []
    for j in range(A.dim):
        cols = [A.structure[i][j] for i in range(A.dim)]
        actions.append(linalg.transpose(cols, cols=A.dim))
    mod = module_validate(A, A.dim, actions)
    A._regular_module = mod
    return mod


def _hom_span(V, W):
    """Echelon-canonical span of intertwiner matrices, flattened row-major."""
    if V.algebra != W.algebra:
        raise AlgebraMismatch("modules over different algebras")
    F = V.field
    nV, nW = V.dim, W.dim
    unknowns = nW * nV
    rows = []
    for b in range(V.algebra.dim):
        RV, RW = V.actions[b], W.actions[b]
        for r in range(nW):
            for c in range(nV):
                row = [F.zero] * unknowns
                for m in range(nV):
                    if RV[m][c] != F.zero:
                        row[r * nV + m] = F.add(row[r * nV + m], RV[m][c])
                for m in range(nW):
                    if RW[r][m] != F.zero:
                        row[m * nV + c] = F.sub(row[m * nV + c], RW[r][m])
                if any(x != F.zero for x in row):
                    rows.append(row)
    basis, free = linalg.nullspace_free(F, rows, cols=unknowns)
    return linalg.Span(F, basis, free)


def hom_space(V, W):
    """k-basis of Hom_A(V, W) in echelon-canonical order."""
    span = _hom_span(V, W)
    return [ModuleHom(V, W, linalg.unflatten(v, W.dim, V.dim)) for v in span.basis]


def dual_module(V):
    """V* = Hom_A(V, A) with the sigma-twisted right action.  Cached on V."""
    if V._dual is not None:
        return V._dual
    A = V.algebra
    F = V.field
    reg = regular_module(A)
    span = _hom_span(V, reg)
    functionals = [linalg.unflatten(v, A.dim, V.dim) for v in span.basis]
    m = len(functionals)
    actions = []
    for j in range(A.dim):
        L = A.left_mult_matrix(A.sigma_vec(A.basis_el(j)))
        cols = []
        for fmat in functionals:
            target = linalg.matmul(F, L, fmat, bcols=V.dim)
            x = span.coords(linalg.flatten(target))
            if x is None:
                raise NotAModule("dual action left the functional span")
            cols.append(x)
        actions.append(linalg.transpose(cols, cols=m) if cols else
                       [[] for _ in range(m)])
    dual = DualModule(V, m, actions, functionals, span)
    dual.validate()
    V._dual = dual
    return dual


def double_dual_map(V):
    """The evaluation map e_V : V -> V**, e_V(x)(f) = sigma(f(x)).  Cached."""
    if V._ddual_map is not None:
        return V._ddual_map
    A = V.algebra
    F = V.field
    Vd = dual_module(V)
    Vdd = dual_module(Vd)
    cols = []
    for j in range(V.dim):
        # e_V(e_j) as a functional on V*: column t = sigma(F_t(e_j))
        fcols = [A.sigma_vec([fmat[r][j] for r in range(A.dim)])
                 for fmat in Vd.functionals]
        emat = linalg.transpose(fcols, cols=A.dim) if fcols else [[] for _ in range(A.dim)]
        cols.append(Vdd.functional_coords(emat))
    mat = linalg.transpose(cols, cols=Vdd.dim) if cols else [[] for _ in range(Vdd.dim)]
    e = ModuleHom(V, Vdd, mat).validate()
    V._ddual_map = e
    return e


def reflexive_check(V):
    e = double_dual_map(V)
    return e.is_invertible()


def dual_hom(T):
    """(T* f)(x) = f(T x), expressed in the stored functional bases."""
    F = T.source.field
    Vd = dual_module(T.source)
    Wd = dual_module(T.target)
    cols = []
    for gmat in Wd.functionals:
        fmat = linalg.matmul(F, gmat, T.mat, bcols=T.source.dim)
        cols.append(Vd.functional_coords(fmat))
    mat = linalg.transpose(cols, cols=Vd.dim) if cols else [[] for _ in range(Vd.dim)]
    return ModuleHom(Wd, Vd, mat)


def direct_sum(V, W):
    if V.algebra != W.algebra:
        raise AlgebraMismatch("direct sum over different algebras")
    F = V.field
    actions = [linalg.block_diag(F, V.actions[i], (V.dim, V.dim),
                                 W.actions[i], (W.dim, W.dim))
               for i in range(V.algebra.dim)]
    return RightModule(V.algebra, V.dim + W.dim, actions)


def module_extend(V, L):
    """Scalar extension of V to a module over A tensor L."""
    from .algebra import algebra_extend
    AL = algebra_extend(V.algebra, L)
    k = V.field

    def emb(x):
        return field_embed(k, L, x)

    actions = [[[emb(x) for x in row] for row in R] for R in V.actions]
    return module_validate(AL, V.dim, actions)
