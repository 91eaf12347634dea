"""Exhaustive searches over finite coefficient spaces.

Three sweeps live here: object isomorphism in the double-arrow category,
form isometry, and unit congruence in a structure-constant ring.  Every
sweep walks candidate coefficient vectors in one canonical order (first
coordinate most significant, field elements in their natural order) and
returns the first witness, so results are reproducible across runs and
across backends.

Prime fields are dispatched to the compiled or numpy kernels; extension
fields and the rationals use the generic exact path.
"""

from __future__ import annotations

from . import linalg
from .amodule import ModuleHom, _hom_span
from .darrow import DAMorphism, IsoResult
from .errors import EnumTooLarge, InfiniteField
from .exactfield import PrimeField
from .sesqform import SesqSystem


def _kernels():
    from . import _kernels as k
    return k


def iter_vectors(F, length):
    """All coordinate vectors of the given length in canonical order."""
    els = F.elements()
    if length == 0:
        yield []
        return
    idx = [0] * length
    while True:
        yield [els[i] for i in idx]
        t = length - 1
        while t >= 0:
            idx[t] += 1
            if idx[t] < len(els):
                break
            idx[t] = 0
            t -= 1
        if t < 0:
            return


def _enum_total(F, dim, cap):
    if F.order is None:
        raise InfiniteField("exhaustive search needs a finite field")
    total = F.order ** dim
    if total > cap:
        raise EnumTooLarge(f"{F.order}^{dim} = {total} exceeds cap {cap}")
    return total


def _use_kernel(F, span_dim):
    import os
    if os.environ.get("SESQ_GENERIC"):
        return False
    return isinstance(F, PrimeField) and span_dim > 0


# ---------------------------------------------------------------------------
# object isomorphism
# ---------------------------------------------------------------------------

def find_pair_iso(M, Mp, cap=10 ** 6, trials=200, seed=0):
    """First invertible morphism pair (phi, psi) : M -> M', or "none".

    Over the rationals the search is a seeded random probe of the morphism
    space and reports "undecided" when no invertible pair turns up.
    """
    from .endoring import pair_span, split_pair
    F = M.V.field
    span = pair_span(M, Mp)
    if F.order is None:
        return _pair_iso_random(M, Mp, span, trials, seed)
    if span.dim == 0:
        # only the zero pair; invertible exactly when everything is 0-dim
        if M.V.dim == 0 and M.W.dim == 0 and Mp.V.dim == 0 and Mp.W.dim == 0:
            mor = _pair_morphism(M, Mp, [F.zero] * 0, span)
            return IsoResult("found", mor, 1)
        return IsoResult("none", None, 1)
    total = _enum_total(F, span.dim, cap)
    if _use_kernel(F, span.dim) and M.V.dim > 0 and M.W.dim > 0:
        import numpy as np
        nV, nW = M.V.dim, M.W.dim
        nVp, nWp = Mp.V.dim, Mp.W.dim
        cut = nVp * nV
        bphi = np.array([[v[r * nV + c] for r in range(nVp) for c in range(nV)]
                         for v in span.basis], dtype=np.int64).reshape(span.dim, nVp, nV)
        bpsi = np.array([[v[cut + r * nW + c] for r in range(nWp) for c in range(nW)]
                         for v in span.basis], dtype=np.int64).reshape(span.dim, nWp, nW)
        coeffs, searched = _kernels().sweep_pair_iso(bphi, bpsi, F.p, total)
        if coeffs is None:
            return IsoResult("none", None, searched)
        return IsoResult("found",
                         _pair_morphism(M, Mp, [int(c) % F.p for c in coeffs], span),
                         searched)
    searched = 0
    for coeffs in iter_vectors(F, span.dim):
        searched += 1
        vec = span.combine(coeffs)
        phi, psi = split_pair(vec, M, Mp)
        if linalg.is_invertible(F, phi) and linalg.is_invertible(F, psi):
            return IsoResult("found", _pair_morphism(M, Mp, coeffs, span), searched)
    return IsoResult("none", None, searched)


def _pair_morphism(M, Mp, coeffs, span):
    from .endoring import split_pair
    F = M.V.field
    total = Mp.V.dim * M.V.dim + Mp.W.dim * M.W.dim
    vec = span.combine(coeffs) if span.dim else [F.zero] * total
    phi, psi = split_pair(vec, M, Mp)
    mor = DAMorphism(M, Mp, ModuleHom(M.V, Mp.V, phi), ModuleHom(M.W, Mp.W, psi))
    if not mor.check() or not mor.is_invertible():
        raise EnumTooLarge("internal sweep returned a non-isomorphism")
    return mor


def _pair_iso_random(M, Mp, span, trials, seed):
    import random
    from .endoring import split_pair
    F = M.V.field
    rng = random.Random(f"pair-iso:{seed}")
    if span.dim == 0:
        if M.V.dim == 0 and M.W.dim == 0 and Mp.V.dim == 0 and Mp.W.dim == 0:
            return IsoResult("found", _pair_morphism(M, Mp, [], span), 1)
        return IsoResult("none", None, 1)
    searched = 0
    for _ in range(trials):
        searched += 1
        coeffs = [F.el_from_json(f"{rng.randint(-9, 9)}/{rng.randint(1, 4)}")
                  for _ in range(span.dim)]
        vec = span.combine(coeffs)
        phi, psi = split_pair(vec, M, Mp)
        if linalg.is_invertible(F, phi) and linalg.is_invertible(F, psi):
            mor = DAMorphism(M, Mp, ModuleHom(M.V, Mp.V, phi),
                             ModuleHom(M.W, Mp.W, psi))
            if mor.check():
                return IsoResult("found", mor, searched)
    return IsoResult("undecided", None, searched)


# ---------------------------------------------------------------------------
# form isometry
# ---------------------------------------------------------------------------

def _members(s):
    return s.members if isinstance(s, SesqSystem) else [s]


def _transports(F, phi, gs, gt, n, d):
    for i in range(n):
        for j in range(n):
            acc = [F.zero] * d
            for p in range(n):
                xpi = phi[p][i]
                if xpi == F.zero:
                    continue
                for q in range(n):
                    c = F.mul(xpi, phi[q][j])
                    if c == F.zero:
                        continue
                    gpq = gt[p][q]
                    for m in range(d):
                        if gpq[m] != F.zero:
                            acc[m] = F.add(acc[m], F.mul(c, gpq[m]))
            if acc != gs[i][j]:
                return False
    return True


def find_isometry(s, t, cap=10 ** 6):
    """First invertible module map carrying s to t, swept over Hom(V_s, V_t).

    Returns (matrix or None, number of candidates inspected).  Systems are
    handled member by member with one shared map.
    """
    F = s.module.field
    ms, mt = _members(s), _members(t)
    if len(ms) != len(mt) or s.module.dim != t.module.dim:
        return None, 0
    n = s.module.dim
    d = s.module.algebra.dim
    if n == 0:
        return [], 1
    span = _hom_span(s.module, t.module)
    if span.dim == 0:
        return None, 1
    total = _enum_total(F, span.dim, cap)
    if _use_kernel(F, span.dim):
        import numpy as np
        basis = np.array([v for v in span.basis], dtype=np.int64)
        basis = basis.reshape(span.dim, n, n)
        gsrc = np.array([[[c for m in ms for c in m.gram[i][j]]
                          for j in range(n)] for i in range(n)], dtype=np.int64)
        gtgt = np.array([[[c for m in mt for c in m.gram[i][j]]
                          for j in range(n)] for i in range(n)], dtype=np.int64)
        coeffs, searched = _kernels().sweep_isometry(basis, gsrc, gtgt, F.p, total)
        if coeffs is None:
            return None, searched
        vec = span.combine([int(c) % F.p for c in coeffs])
        return linalg.unflatten(vec, n, n), searched
    searched = 0
    for coeffs in iter_vectors(F, span.dim):
        searched += 1
        phi = linalg.unflatten(span.combine(coeffs), n, n)
        if not linalg.is_invertible(F, phi):
            continue
        if all(_transports(F, phi, a.gram, b.gram, n, d) for a, b in zip(ms, mt)):
            return phi, searched
    return None, searched


def find_bilinear_isometry(b1, b2, cap=10 ** 6):
    """First invertible equivariant map with phi^T B2 phi = B1.

    Both forms live on modules over one group ring; the sweep runs over the
    equivariant hom space.  Returns (matrix or None, candidates inspected).
    """
    F = b1.module.field
    n = b1.module.dim
    if n != b2.module.dim:
        return None, 0
    if n == 0:
        return [], 1
    span = _hom_span(b1.module, b2.module)
    if span.dim == 0:
        return None, 1
    total = _enum_total(F, span.dim, cap)
    g1 = [[[b1.bmat[i][j]] for j in range(n)] for i in range(n)]
    g2 = [[[b2.bmat[i][j]] for j in range(n)] for i in range(n)]
    if _use_kernel(F, span.dim):
        import numpy as np
        basis = np.array([v for v in span.basis], dtype=np.int64).reshape(span.dim, n, n)
        gsrc = np.array(b1.bmat, dtype=np.int64)[:, :, None]
        gtgt = np.array(b2.bmat, dtype=np.int64)[:, :, None]
        coeffs, searched = _kernels().sweep_isometry(basis, gsrc, gtgt, F.p, total)
        if coeffs is None:
            return None, searched
        vec = span.combine([int(c) % F.p for c in coeffs])
        return linalg.unflatten(vec, n, n), searched
    searched = 0
    for coeffs in iter_vectors(F, span.dim):
        searched += 1
        phi = linalg.unflatten(span.combine(coeffs), n, n)
        if not linalg.is_invertible(F, phi):
            continue
        if _transports(F, phi, g1, g2, n, 1):
            return phi, searched
    return None, searched


# ---------------------------------------------------------------------------
# unit congruence in a ring with involution
# ---------------------------------------------------------------------------

def find_congruence(E, f, fp, cap=10 ** 6):
    """First unit g with ~g f g = f', or None.  Returns (g, searched)."""
    F = E.field
    m = E.dim
    total = _enum_total(F, m, cap)
    if _use_kernel(F, m):
        import numpy as np
        struct = np.array(E.structure, dtype=np.int64)
        invol = np.array(E.invol, dtype=np.int64)
        fa = np.array(f, dtype=np.int64)
        fpa = np.array(fp, dtype=np.int64)
        g, searched = _kernels().sweep_congruence(struct, invol, fa, fpa, F.p, total)
        if g is None:
            return None, searched
        return [int(c) % F.p for c in g], searched
    searched = 0
    for g in iter_vectors(F, m):
        searched += 1
        moved = E.mul_vec(E.mul_vec(E.sigma_vec(g), f), g)
        if moved == fp and E.is_unit(g):
            return g, searched
    return None, searched
