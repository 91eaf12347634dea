"""The double-arrow category: objects (V, W, (f_i, g_i)), its duality,
hermitian pairs, and the two functors between forms and hermitian objects.

Arrow lists generalize the classical single pair (f1, f2) so that systems of
forms need no separate category.
"""

from __future__ import annotations

from . import linalg
from .amodule import ModuleHom, double_dual_map, dual_hom, dual_module, reflexive_check
from .errors import (AlgebraMismatch, NotAMorphism, NotAnIsometry,
                     NotHermitian, NotInvertible, NotReflexive)
from .sesqform import (SesqForm, SesqSystem, form_validate, left_adjoint,
                       right_adjoint, isometry_criterion_adjoint)


class DoubleArrow:
    def __init__(self, V, W, arrows):
        if not arrows:
            raise NotAMorphism("an object needs at least one arrow pair")
        self.V = V
        self.W = W
        self.arrows = arrows      # list of (f_i, g_i), both ModuleHom V -> W
        self._dual_obj = None

    @property
    def algebra(self):
        return self.V.algebra

    def validate(self):
        for f, g in self.arrows:
            for h in (f, g):
                if h.source != self.V or h.target != self.W:
                    raise NotAMorphism("arrow endpoints do not match the object")
                h.validate()
        return self

    def __eq__(self, other):
        return (isinstance(other, DoubleArrow) and self.V == other.V
                and self.W == other.W
                and [(f.mat, g.mat) for f, g in self.arrows]
                == [(f.mat, g.mat) for f, g in other.arrows])

    def __repr__(self):
        return f"DoubleArrow(V dim {self.V.dim}, W dim {self.W.dim}, {len(self.arrows)} arrow pair(s))"


class DAMorphism:
    def __init__(self, source, target, phi, psi):
        self.source = source
        self.target = target
        self.phi = phi    # ModuleHom source.V -> target.V
        self.psi = psi    # ModuleHom source.W -> target.W

    def check(self):
        """True iff all intertwining identities hold exactly."""
        F = self.source.V.field
        for (f, g), (fp, gp) in zip(self.source.arrows, self.target.arrows):
            if fp.compose(self.phi).mat != self.psi.compose(f).mat:
                return False
            if gp.compose(self.phi).mat != self.psi.compose(g).mat:
                return False
        return True

    def compose(self, other):
        """self after other."""
        return DAMorphism(other.source, self.target,
                          self.phi.compose(other.phi), self.psi.compose(other.psi))

    def is_invertible(self):
        return self.phi.is_invertible() and self.psi.is_invertible()

    def inverse(self):
        if not self.is_invertible():
            raise NotInvertible("double-arrow morphism is not invertible")
        return DAMorphism(self.target, self.source,
                          self.phi.inverse(), self.psi.inverse())

    def dual(self):
        """The dual morphism (psi*, phi*) : target* -> source*."""
        return DAMorphism(da_dual(self.target), da_dual(self.source),
                          dual_hom(self.psi), dual_hom(self.phi))

    def __eq__(self, other):
        return (isinstance(other, DAMorphism)
                and self.phi.mat == other.phi.mat and self.psi.mat == other.psi.mat)


class HermPair:
    """Candidate hermitian form h = (phi: V -> W*, psi: W -> V*) on an object."""

    def __init__(self, obj, phi, psi):
        self.obj = obj
        self.phi = phi
        self.psi = psi

    def as_morphism(self):
        return DAMorphism(self.obj, da_dual(self.obj), self.phi, self.psi)

    def is_unimodular(self):
        return self.phi.is_invertible() and self.psi.is_invertible()

    def __eq__(self, other):
        return (isinstance(other, HermPair) and self.obj == other.obj
                and self.phi.mat == other.phi.mat and self.psi.mat == other.psi.mat)


class IsoResult:
    """Outcome of an object-isomorphism search."""

    def __init__(self, status, morphism=None, searched=0):
        self.status = status          # "found" | "none" | "undecided"
        self.morphism = morphism
        self.searched = searched

    def __repr__(self):
        return f"IsoResult({self.status}, searched={self.searched})"


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def da_dual(M):
    """(W*, V*, (g_i*, f_i*)).  Cached on the object."""
    if M._dual_obj is not None:
        return M._dual_obj
    Wd = dual_module(M.W)
    Vd = dual_module(M.V)
    arrows = [(dual_hom(g), dual_hom(f)) for f, g in M.arrows]
    M._dual_obj = DoubleArrow(Wd, Vd, arrows)
    return M._dual_obj


def canonical_double_dual(M):
    """E_M = (e_V, e_W) : M -> M**."""
    return DAMorphism(M, da_dual(da_dual(M)),
                      double_dual_map(M.V), double_dual_map(M.W))


def da_morphism_check(M, Mp, pair):
    """Exact check that (phi, psi) is a morphism M -> M'."""
    phi, psi = pair
    if len(M.arrows) != len(Mp.arrows):
        return False
    if (len(phi.mat) != Mp.V.dim or phi.source.dim != M.V.dim
            or len(psi.mat) != Mp.W.dim or psi.source.dim != M.W.dim):
        raise NotAMorphism("component shapes do not match the objects")
    try:
        phi.validate()
        psi.validate()
    except Exception:
        return False
    return DAMorphism(M, Mp, phi, psi).check()


def herm_check(M, h):
    """True iff h is a hermitian form on M: a morphism M -> M* with
    phi = psi* e_V and psi = phi* e_W, all as exact matrix identities."""
    Md = da_dual(M)
    if (h.phi.source.dim != M.V.dim or len(h.phi.mat) != Md.V.dim
            or h.psi.source.dim != M.W.dim or len(h.psi.mat) != Md.W.dim):
        raise NotAMorphism("hermitian pair has incompatible shapes")
    if not da_morphism_check(M, Md, (h.phi, h.psi)):
        return False
    eV = double_dual_map(M.V)
    eW = double_dual_map(M.W)
    if h.phi.mat != dual_hom(h.psi).compose(eV).mat:
        return False
    if h.psi.mat != dual_hom(h.phi).compose(eW).mat:
        return False
    return True


def q_of_form(s):
    """F(V, s) = ((V, V*, s_l, s_r), (e_V, id)).  Accepts forms and systems."""
    if s._qobj is not None:
        return s._qobj
    V = s.module
    if not reflexive_check(V):
        raise NotReflexive("the underlying module is not reflexive")
    Vd = dual_module(V)
    members = s.members if isinstance(s, SesqSystem) else [s]
    arrows = [(left_adjoint(m), right_adjoint(m)) for m in members]
    M = DoubleArrow(V, Vd, arrows)
    eta = HermPair(M, double_dual_map(V),
                   ModuleHom(Vd, Vd, linalg.identity(V.field, Vd.dim)))
    s._qobj = (M, eta)
    return s._qobj


def form_of_herm(M, h, mode="roundtrip"):
    """Recover the form(s) with s_l := psi f_1 ("roundtrip", the default) or
    s_l := psi f_2 ("literal", which lands on the sigma-transpose)."""
    if not herm_check(M, h):
        raise NotHermitian("the pair is not hermitian on this object")
    V = M.V
    A = V.algebra
    F = V.field
    Vd = dual_module(V)
    if h.psi.target.dim != Vd.dim:
        raise NotHermitian("psi does not land in V*")
    grams = []
    for f, g in M.arrows:
        sl = h.psi.compose(f if mode == "roundtrip" else g)
        gram = []
        for i in range(V.dim):
            coeffs = [sl.mat[t][i] for t in range(Vd.dim)]
            # functional of e_i as a concrete map V -> A
            fmat = linalg.zeros(F, A.dim, V.dim)
            for t, c in enumerate(coeffs):
                if c != F.zero:
                    ft = Vd.functionals[t]
                    for r in range(A.dim):
                        for col in range(V.dim):
                            if ft[r][col] != F.zero:
                                fmat[r][col] = F.add(fmat[r][col], F.mul(c, ft[r][col]))
            gram.append([[fmat[r][j] for r in range(A.dim)] for j in range(V.dim)])
        grams.append(gram)
    if len(grams) == 1:
        return form_validate(V, grams[0])
    return SesqSystem(V, grams).validate()


def f_on_morphism(phi_mat, s, t):
    """F(phi) = (phi, phi*^{-1}) for an isometry phi : (V, s) -> (V', t)."""
    phi = ModuleHom(s.module, t.module, phi_mat)
    try:
        phi.validate()
    except Exception as e:
        raise NotAnIsometry(str(e))
    if not phi.is_invertible() or not isometry_criterion_adjoint(s, t, phi_mat):
        raise NotAnIsometry("the map does not transport the forms")
    M, _ = q_of_form(s)
    Mp, _ = q_of_form(t)
    psi = dual_hom(phi).inverse()
    mor = DAMorphism(M, Mp, phi, psi)
    if not mor.check():
        raise NotAnIsometry("image pair fails the morphism identities")
    return mor


def da_isomorphic(M, Mp, cap=10 ** 6, trials=200, seed=0):
    """Search for an isomorphism M -> M' in the double-arrow category.

    Finite fields: exhaustive enumeration of the morphism space (canonical
    order, first witness wins).  Rationals: seeded random combinations, with
    "undecided" when nothing invertible is found.
    """
    from . import sweeps
    if M.algebra != Mp.algebra:
        raise AlgebraMismatch("objects over different algebras")
    if len(M.arrows) != len(Mp.arrows):
        return IsoResult("none")
    if M.V.dim != Mp.V.dim or M.W.dim != Mp.W.dim:
        return IsoResult("none")
    return sweeps.find_pair_iso(M, Mp, cap=cap, trials=trials, seed=seed)


def herm_pushforward(h, iso):
    """Transport h along an invertible morphism: eta = iso*^{-1} h iso^{-1}."""
    if not iso.is_invertible():
        raise NotInvertible("pushforward needs an invertible morphism")
    hm = h.as_morphism()
    moved = iso.dual().inverse().compose(hm).compose(iso.inverse())
    return HermPair(iso.target, moved.phi, moved.psi)
