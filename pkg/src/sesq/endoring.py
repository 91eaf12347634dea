"""Endomorphism rings of double-arrow objects, the involution induced by a
unimodular hermitian pair, Jacobson radicals, radical quotients, and the
congruence classes of symmetric units.

An EndoRing is a structure-constant algebra like InvAlgebra; the radical and
class-set operations below accept any InvAlgebra, so they apply to group
rings as well as to computed endomorphism rings.
"""

from __future__ import annotations

from . import linalg
from .algebra import InvAlgebra
from .amodule import ModuleHom
from .darrow import DAMorphism, HermPair, da_isomorphic, herm_pushforward, q_of_form
from .errors import (EnumTooLarge, InfiniteField, NotInvolution, SesqError,
                     NotIsomorphicToQ0, NotUnimodular, RadicalNotStable)


class EndoRing(InvAlgebra):
    """Ring E = End(Q0) with optional induced involution.

    After quotient_radical the ring is abstract: obj/basis/span are None.
    """

    def __init__(self, field, dim, structure, unit, invol=None,
                 obj=None, basis=None, span=None):
        placeholder = invol if invol is not None else linalg.identity(field, dim)
        super().__init__(field, dim, structure, unit, placeholder)
        self.has_involution = invol is not None
        self.obj = obj
        self.basis = basis      # list of DAMorphism, or None
        self.span = span        # Span over flattened (phi, psi) pairs, or None

    def validate(self):
        if self.has_involution:
            return super().validate()
        self.validate_ring()
        return self

    def element_morphism(self, x):
        """Concrete DAMorphism Q0 -> Q0 for a coordinate vector (needs basis)."""
        F = self.field
        phi = linalg.zeros(F, self.obj.V.dim, self.obj.V.dim)
        psi = linalg.zeros(F, self.obj.W.dim, self.obj.W.dim)
        for c, b in zip(x, self.basis):
            if c == F.zero:
                continue
            phi = linalg.mat_add(F, phi, linalg.mat_scale(F, c, b.phi.mat))
            psi = linalg.mat_add(F, psi, linalg.mat_scale(F, c, b.psi.mat))
        return DAMorphism(self.obj, self.obj,
                          ModuleHom(self.obj.V, self.obj.V, phi),
                          ModuleHom(self.obj.W, self.obj.W, psi))


class HermClassSet:
    """Congruence classes of symmetric units: representatives and orbit sizes."""

    def __init__(self, representatives, orbit_sizes, total_symmetric):
        self.representatives = representatives
        self.orbit_sizes = orbit_sizes
        self.total_symmetric = total_symmetric

    def __len__(self):
        return len(self.representatives)

    def to_json(self, field):
        return {"classes": [[field.el_to_json(c) for c in r] for r in self.representatives],
                "orbit_sizes": self.orbit_sizes,
                "symmetric_units": self.total_symmetric}


# ---------------------------------------------------------------------------
# pair space of two double-arrow objects
# ---------------------------------------------------------------------------

def pair_span(M, Mp):
    """Echelon span of morphism pairs (phi, psi) : M -> M', flattened as
    flat(phi) ++ flat(psi)."""
    F = M.V.field
    nV, nW = M.V.dim, M.W.dim
    nVp, nWp = Mp.V.dim, Mp.W.dim
    np_phi = nVp * nV
    unknowns = np_phi + nWp * nW

    def phi_pos(r, c):
        return r * nV + c

    def psi_pos(r, c):
        return np_phi + r * nW + c

    rows = []
    # phi and psi are module homs
    for b in range(M.algebra.dim):
        RV, RVp = M.V.actions[b], Mp.V.actions[b]
        for r in range(nVp):
            for c in range(nV):
                row = [F.zero] * unknowns
                for m in range(nV):
                    if RV[m][c] != F.zero:
                        row[phi_pos(r, m)] = F.add(row[phi_pos(r, m)], RV[m][c])
                for m in range(nVp):
                    if RVp[r][m] != F.zero:
                        row[phi_pos(m, c)] = F.sub(row[phi_pos(m, c)], RVp[r][m])
                if any(x != F.zero for x in row):
                    rows.append(row)
        RW, RWp = M.W.actions[b], Mp.W.actions[b]
        for r in range(nWp):
            for c in range(nW):
                row = [F.zero] * unknowns
                for m in range(nW):
                    if RW[m][c] != F.zero:
                        row[psi_pos(r, m)] = F.add(row[psi_pos(r, m)], RW[m][c])
                for m in range(nWp):
                    if RWp[r][m] != F.zero:
                        row[psi_pos(m, c)] = F.sub(row[psi_pos(m, c)], RWp[r][m])
                if any(x != F.zero for x in row):
                    rows.append(row)
    # arrow intertwining: f'_t phi = psi f_t (and likewise for g_t)
    for (f, g), (fp, gp) in zip(M.arrows, Mp.arrows):
        for amat, apmat in ((f.mat, fp.mat), (g.mat, gp.mat)):
            for r in range(nWp):
                for c in range(nV):
                    row = [F.zero] * unknowns
                    for m in range(nVp):
                        if apmat[r][m] != F.zero:
                            row[phi_pos(m, c)] = F.add(row[phi_pos(m, c)], apmat[r][m])
                    for m in range(nW):
                        if amat[m][c] != F.zero:
                            row[psi_pos(r, m)] = F.sub(row[psi_pos(r, m)], amat[m][c])
                    if any(x != F.zero for x in row):
                        rows.append(row)
    basis, free = linalg.nullspace_free(F, rows, cols=unknowns)
    return linalg.Span(F, basis, free)


def split_pair(vec, M, Mp):
    """Split a flattened pair vector into (phi matrix, psi matrix)."""
    nV, nW = M.V.dim, M.W.dim
    nVp, nWp = Mp.V.dim, Mp.W.dim
    cut = nVp * nV
    return (linalg.unflatten(vec[:cut], nVp, nV),
            linalg.unflatten(vec[cut:], nWp, nW))


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def endo_compute(Q0):
    """End(Q0) with composition structure constants (no involution yet)."""
    F = Q0.V.field
    span = pair_span(Q0, Q0)
    basis = []
    for vec in span.basis:
        phi, psi = split_pair(vec, Q0, Q0)
        basis.append(DAMorphism(Q0, Q0, ModuleHom(Q0.V, Q0.V, phi),
                                ModuleHom(Q0.W, Q0.W, psi)))
    m = len(basis)
    structure = []
    for bi in basis:
        row = []
        for bj in basis:
            comp = bi.compose(bj)
            flat = linalg.flatten(comp.phi.mat) + linalg.flatten(comp.psi.mat)
            coords = span.coords(flat)
            if coords is None:
                raise SesqError("endomorphism space is not closed under composition")
            row.append(coords)
        structure.append(row)
    ident = linalg.flatten(linalg.identity(F, Q0.V.dim)) + \
        linalg.flatten(linalg.identity(F, Q0.W.dim))
    unit = span.coords(ident)
    if unit is None:
        raise SesqError("identity is not in the computed endomorphism space")
    ring = EndoRing(F, m, structure, unit, invol=None,
                    obj=Q0, basis=basis, span=span)
    return ring.validate()


def induced_involution(E, eta0):
    """Install ~f = eta0^{-1} f* eta0 on E.  eta0 must be unimodular."""
    if not eta0.is_unimodular():
        raise NotUnimodular("the hermitian pair is not unimodular")
    F = E.field
    eta = eta0.as_morphism()
    eta_inv = eta.inverse()
    cols = []
    for b in E.basis:
        tb = eta_inv.compose(b.dual().compose(eta))
        flat = linalg.flatten(tb.phi.mat) + linalg.flatten(tb.psi.mat)
        coords = E.span.coords(flat)
        if coords is None:
            raise NotInvolution("induced involution left the endomorphism space")
        cols.append(coords)
    invol = linalg.transpose(cols, cols=E.dim) if cols else []
    ring = EndoRing(F, E.dim, E.structure, E.unit, invol=invol,
                    obj=E.obj, basis=E.basis, span=E.span)
    ring.eta0 = eta0
    return ring.validate()


def _check_finite_enum(field, dim, cap):
    if field.order is None:
        raise InfiniteField("enumeration needs a finite base field")
    total = field.order ** dim
    if total > cap:
        raise EnumTooLarge(f"{field.order}^{dim} = {total} exceeds cap {cap}")
    return total


def enumerate_elements(field, dim):
    """All coordinate vectors in canonical order (first coordinate varies
    slowest), matching the kernel sweep order."""
    els = field.elements()
    out = [[]]
    for _ in range(dim):
        out = [v + [e] for v in out for e in els]
    return out


def units_enumerate(E, cap=10 ** 6):
    _check_finite_enum(E.field, E.dim, cap)
    return [x for x in enumerate_elements(E.field, E.dim) if E.is_unit(x)]


def radical(E, cap=10 ** 6):
    """Echelon basis of rad(E).

    Finite fields: quasi-regularity sweep (x is radical iff 1 - a*x is a unit
    for every a).  Characteristic zero: kernel of the trace form of the
    regular representation.
    """
    F = E.field
    if F.order is not None:
        _check_finite_enum(F, E.dim, cap)
        elements = enumerate_elements(F, E.dim)
        members = []
        for x in elements:
            ok = True
            for a in elements:
                ax = E.mul_vec(a, x)
                one_minus = linalg.vec_sub(F, E.unit, ax)
                if not E.is_unit(one_minus):
                    ok = False
                    break
            if ok:
                members.append(x)
        red, pivots = linalg.rref(F, members) if members else ([], [])
        basis = red[:len(pivots)]
    else:
        lmats = [E.left_mult_matrix(E.basis_el(i)) for i in range(E.dim)]
        gram = [[_trace(F, linalg.matmul(F, lmats[i], lmats[j]))
                 for j in range(E.dim)] for i in range(E.dim)]
        basis = linalg.nullspace(F, gram, cols=E.dim)
    _verify_radical(E, basis)
    return basis


def _trace(F, mat):
    acc = F.zero
    for i in range(len(mat)):
        acc = F.add(acc, mat[i][i])
    return acc


def _verify_radical(E, basis):
    """The computed space must be a nilpotent two-sided ideal."""
    F = E.field
    if not basis:
        return
    span = _subspace_span(F, basis, E.dim)
    for r in basis:
        for i in range(E.dim):
            b = E.basis_el(i)
            if span.coords(E.mul_vec(b, r)) is None or span.coords(E.mul_vec(r, b)) is None:
                raise RadicalNotStable("computed radical is not a two-sided ideal")
    power = [list(r) for r in basis]
    for _ in range(E.dim + 1):
        if not power:
            return
        nxt = []
        for x in power:
            for r in basis:
                p = E.mul_vec(x, r)
                if any(c != F.zero for c in p):
                    nxt.append(p)
        red, piv = linalg.rref(F, nxt) if nxt else ([], [])
        power = red[:len(piv)]
    raise RadicalNotStable("computed radical is not nilpotent")


def _subspace_span(F, basis, ambient):
    red, pivots = linalg.rref(F, basis)
    red = red[:len(pivots)]
    # convert the RREF rows to a Span: free positions are the pivots
    return _PivotSpan(F, red, pivots)


class _PivotSpan:
    """Span of RREF rows; coordinates read off the pivot positions."""

    def __init__(self, F, basis, pivots):
        self.F = F
        self.basis = basis
        self.pivots = pivots

    def coords(self, vec):
        F = self.F
        x = [vec[p] for p in self.pivots]
        recon = [F.zero] * len(vec)
        for c, bv in zip(x, self.basis):
            if c != F.zero:
                for i, b in enumerate(bv):
                    if b != F.zero:
                        recon[i] = F.add(recon[i], F.mul(c, b))
        if recon != list(vec):
            return None
        return x


def quotient_radical(E, cap=10 ** 6):
    """E / rad(E) with the induced involution."""
    F = E.field
    rad = radical(E, cap)
    if not rad:
        return E
    red, pivots = linalg.rref(F, rad)
    red = red[:len(pivots)]
    pivset = set(pivots)
    reps = [i for i in range(E.dim) if i not in pivset]

    def reduce_vec(x):
        x = list(x)
        for r, p in zip(red, pivots):
            c = x[p]
            if c != F.zero:
                x = [F.sub(a, F.mul(c, b)) for a, b in zip(x, r)]
        return [x[i] for i in reps]

    if getattr(E, "has_involution", True):
        span = _PivotSpan(F, red, pivots)
        for r in rad:
            if span.coords(E.sigma_vec(r)) is None:
                raise RadicalNotStable("involution does not stabilize the radical")

    m = len(reps)
    structure = [[reduce_vec(E.mul_vec(E.basis_el(reps[i]), E.basis_el(reps[j])))
                  for j in range(m)] for i in range(m)]
    unit = reduce_vec(E.unit)
    invol = None
    if getattr(E, "has_involution", True):
        cols = [reduce_vec(E.sigma_vec(E.basis_el(reps[j]))) for j in range(m)]
        invol = linalg.transpose(cols, cols=m) if cols else []
    ring = EndoRing(F, m, structure, unit, invol=invol)
    return ring.validate()


def herm_classes(E, cap=10 ** 6):
    """Symmetric units E+ partitioned into congruence orbits f -> ~g f g."""
    if not getattr(E, "has_involution", True):
        raise NotInvolution("herm_classes needs an involution on the ring")
    _check_finite_enum(E.field, E.dim, cap)
    units = units_enumerate(E, cap)
    sym = [u for u in units if E.sigma_vec(u) == u]
    sym_keys = {tuple(u) for u in sym}
    seen = set()
    reps, sizes = [], []
    for f in sym:
        tf = tuple(f)
        if tf in seen:
            continue
        orbit = set()
        for g in units:
            moved = E.mul_vec(E.mul_vec(E.sigma_vec(g), f), g)
            orbit.add(tuple(moved))
        if not orbit <= sym_keys:
            raise SesqError("congruence orbit left the symmetric units")
        seen |= orbit
        reps.append(list(min(orbit)))
        sizes.append(len(orbit))
    return HermClassSet(reps, sizes, len(sym))


def transfer_class(s, Q0, eta0, E, cap=10 ** 6):
    """The symmetric unit eta0^{-1} eta_M attached to a form with q(s) ~ Q0."""
    Ms, etaM0 = q_of_form(s)
    res = da_isomorphic(Ms, Q0, cap=cap)
    if res.status != "found":
        raise NotIsomorphicToQ0("q(s) is not isomorphic to Q0")
    etaM = herm_pushforward(etaM0, res.morphism)
    fmor = eta0.as_morphism().inverse().compose(etaM.as_morphism())
    flat = linalg.flatten(fmor.phi.mat) + linalg.flatten(fmor.psi.mat)
    coords = E.span.coords(flat)
    if coords is None:
        raise NotIsomorphicToQ0("transfer element left the endomorphism ring")
    if E.sigma_vec(coords) != coords or not E.is_unit(coords):
        raise NotIsomorphicToQ0("transfer element is not a symmetric unit")
    return coords
