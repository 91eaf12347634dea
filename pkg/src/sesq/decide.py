"""Decision procedures and verification suites.

Isometry can be decided two ways: a direct sweep of the hom space, or the
transfer route through the endomorphism ring of the associated double-arrow
object, where the question becomes unit congruence of symmetric elements.
Both report a verified witness when the answer is positive.

The suites (cancellation, odd-degree descent, orthogonal summands, and the
group-bilinear comparison) are deterministic functions of their seed.
"""

from __future__ import annotations

import random
import time

from . import linalg, sweeps
from .amodule import ModuleHom, RightModule, _hom_span, direct_sum
from .darrow import da_isomorphic, herm_pushforward, q_of_form
from .endoring import endo_compute, induced_involution
from .errors import (CharacteristicTwo, EnumTooLarge, InfiniteField,
                     NoEmbedding, SesqError)
from .exactfield import ExtField, PrimeField, find_irreducible
from .sesqform import (SesqForm, SesqSystem, gram_solution_span,
                       isometry_criterion, orth_sum, random_form,
                       unimodular_check, _unflatten_gram)


class DecisionReport:
    """Outcome of one decision.  The wall-clock time is kept on the object
    but never serialized, so reports are reproducible byte for byte."""

    def __init__(self, verdict, witness=None, method="bruteforce",
                 search_size=0, elapsed=0.0, detail=None):
        self.verdict = verdict        # "isometric" | "not_isometric" | "undecided"
        self.witness = witness
        self.method = method
        self.search_size = search_size
        self.elapsed = elapsed
        self.detail = detail

    def to_json(self, field=None):
        wit = None
        if self.witness is not None and field is not None:
            wit = [[field.el_to_json(x) for x in row] for row in self.witness]
        elif self.witness is not None:
            wit = self.witness
        out = {"verdict": self.verdict, "method": self.method,
               "search_size": self.search_size, "witness": wit}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


class SuiteReport:
    """Aggregate result of a seeded verification suite."""

    def __init__(self, name, seed, params, records, violations):
        self.name = name
        self.seed = seed
        self.params = params
        self.records = records
        self.violations = violations

    def ok(self):
        return self.violations == 0

    def to_json(self):
        return {"suite": self.name, "seed": self.seed, "params": self.params,
                "violations": self.violations, "records": self.records}


def _members(s):
    return s.members if isinstance(s, SesqSystem) else [s]


# ---------------------------------------------------------------------------
# isometry
# ---------------------------------------------------------------------------

def isometry_bruteforce(s, t, cap=10 ** 6):
    start = time.perf_counter()
    ms, mt = _members(s), _members(t)
    if len(ms) != len(mt) or s.module.dim != t.module.dim:
        return DecisionReport("not_isometric", method="bruteforce",
                              elapsed=time.perf_counter() - start)
    try:
        phi, searched = sweeps.find_isometry(s, t, cap=cap)
    except (EnumTooLarge, InfiniteField) as e:
        return DecisionReport("undecided", method="bruteforce",
                              elapsed=time.perf_counter() - start,
                              detail=str(e))
    verdict = "isometric" if phi is not None else "not_isometric"
    if phi is not None and not all(
            isometry_criterion(a, b, phi) for a, b in zip(ms, mt)):
        raise SesqError("sweep produced a witness that fails the criterion")
    return DecisionReport(verdict, witness=phi, method="bruteforce",
                          search_size=searched,
                          elapsed=time.perf_counter() - start)


def transfer_setup(s):
    """Base object, canonical hermitian pair and endomorphism ring of s.
    Cached on the form."""
    cached = getattr(s, "_endo", None)
    if cached is not None:
        return cached
    Q0, eta0 = q_of_form(s)
    E = induced_involution(endo_compute(Q0), eta0)
    setup = (Q0, eta0, E)
    try:
        s._endo = setup
    except AttributeError:
        pass
    return setup


def isometry_transfer(s, t, cap=10 ** 6):
    """Decide isometry via the endomorphism ring of q(s).

    The base form transfers to the unit 1; t is isometric to s exactly when
    its transfer element is congruent to 1 by a unit of the ring.
    """
    start = time.perf_counter()
    ms, mt = _members(s), _members(t)
    if len(ms) != len(mt) or s.module.dim != t.module.dim:
        return DecisionReport("not_isometric", method="transfer",
                              elapsed=time.perf_counter() - start)
    Q0, eta0, E = transfer_setup(s)
    Mt, etat = q_of_form(t)
    try:
        res = da_isomorphic(Mt, Q0, cap=cap)
    except (EnumTooLarge, InfiniteField) as e:
        return DecisionReport("undecided", method="transfer",
                              elapsed=time.perf_counter() - start, detail=str(e))
    if res.status == "undecided":
        return DecisionReport("undecided", method="transfer",
                              search_size=res.searched,
                              elapsed=time.perf_counter() - start,
                              detail="object isomorphism search inconclusive")
    if res.status == "none":
        return DecisionReport("not_isometric", method="transfer",
                              search_size=res.searched,
                              elapsed=time.perf_counter() - start,
                              detail="underlying objects are not isomorphic")
    etap = herm_pushforward(etat, res.morphism)
    fmor = eta0.as_morphism().inverse().compose(etap.as_morphism())
    fp = E.span.coords(linalg.flatten(fmor.phi.mat) + linalg.flatten(fmor.psi.mat))
    if fp is None:
        raise SesqError("transfer element left the endomorphism ring")
    try:
        g, searched = sweeps.find_congruence(E, E.unit, fp, cap=cap)
    except (EnumTooLarge, InfiniteField) as e:
        return DecisionReport("undecided", method="transfer",
                              search_size=res.searched,
                              elapsed=time.perf_counter() - start, detail=str(e))
    total = res.searched + searched
    if g is None:
        return DecisionReport("not_isometric", method="transfer",
                              search_size=total,
                              elapsed=time.perf_counter() - start)
    # ~g g = f' makes g a hermitian isometry (Q0, eta') -> (Q0, eta0); composing
    # with the object isomorphism gives a module map V_t -> V_s carrying t to s
    w = E.element_morphism(g).compose(res.morphism).phi.mat
    F = s.module.field
    if not isometry_criterion(t, s, w):
        raise SesqError("transfer produced a witness that fails the criterion")
    winv = linalg.inverse(F, w)
    if not all(isometry_criterion(a, b, winv) for a, b in zip(ms, mt)):
        raise SesqError("inverse transfer witness fails the criterion")
    return DecisionReport("isometric", witness=winv, method="transfer",
                          search_size=total,
                          elapsed=time.perf_counter() - start)


def isometry_decide(s, t, method="bruteforce", cap=10 ** 6):
    if method == "transfer":
        return isometry_transfer(s, t, cap=cap)
    return isometry_bruteforce(s, t, cap=cap)


def congruence_decide(E, f, fp, cap=10 ** 6):
    start = time.perf_counter()
    try:
        g, searched = sweeps.find_congruence(E, f, fp, cap=cap)
    except (EnumTooLarge, InfiniteField) as e:
        return DecisionReport("undecided", method="congruence",
                              elapsed=time.perf_counter() - start, detail=str(e))
    verdict = "isometric" if g is not None else "not_isometric"
    return DecisionReport(verdict, witness=[g] if g is not None else None,
                          method="congruence", search_size=searched,
                          elapsed=time.perf_counter() - start)


# ---------------------------------------------------------------------------
# exhaustive form enumeration
# ---------------------------------------------------------------------------

def enumerate_forms(V, cap=10 ** 6, unimodular_only=False):
    """Every valid form on V, in the canonical coefficient order."""
    F = V.field
    if F.order is None:
        raise InfiniteField("form enumeration needs a finite field")
    span = gram_solution_span(V)
    total = F.order ** span.dim
    if total > cap:
        raise EnumTooLarge(f"{total} forms exceed cap {cap}")
    n, d = V.dim, V.algebra.dim
    out = []
    for coeffs in sweeps.iter_vectors(F, span.dim):
        vec = span.combine(coeffs) if span.dim else [F.zero] * (n * n * d)
        s = SesqForm(V, _unflatten_gram(vec, n, d))
        if unimodular_only and not unimodular_check(s):
            continue
        out.append(s)
    return out


# ---------------------------------------------------------------------------
# cancellation suite
# ---------------------------------------------------------------------------

def small_modules(A, maxdim=2):
    """Building blocks: all one-dimensional modules, plus the regular module
    when it fits."""
    F = A.field
    blocks = []
    if F.order is not None and F.order ** A.dim <= 4096:
        for scalars in sweeps.iter_vectors(F, A.dim):
            actions = [[[c]] for c in scalars]
            m = RightModule(A, 1, actions)
            try:
                m.validate()
            except Exception:
                continue
            blocks.append(m)
    if 1 < A.dim <= maxdim:
        from .amodule import regular_module
        blocks.append(regular_module(A))
    return blocks


def _random_sum(rng, blocks, maxdim):
    picks = []
    total = 0
    while total < maxdim:
        fitting = [b for b in blocks if b.dim <= maxdim - total]
        if not fitting:
            break
        b = rng.choice(fitting)
        picks.append(b)
        total += b.dim
        if rng.random() < 0.3:
            break
    return picks


def _sum_module(A, picks):
    from .amodule import zero_module
    V = zero_module(A)
    for b in picks:
        V = direct_sum(V, b)
    return V


def _transported_form(s, u):
    """Pull s back along an invertible module map u, giving an isometric copy."""
    n = s.dim
    gram = [[s.evaluate([u[p][i] for p in range(n)],
                        [u[q][j] for q in range(n)])
             for j in range(n)] for i in range(n)]
    return SesqForm(s.module, gram).validate()


def _random_automorphism(V, rng, tries=64):
    F = V.field
    span = _hom_span(V, V)
    for _ in range(tries):
        coeffs = [F.sample(rng) for _ in range(span.dim)]
        u = linalg.unflatten(span.combine(coeffs), V.dim, V.dim)
        if linalg.is_invertible(F, u):
            return u
    return linalg.identity(F, V.dim)


def witt_cancellation_check(A, trials=100, seed=0, dims=2, cap=500000):
    """Seeded search for cancellation failures: s + s1 isometric to s + s2
    while s1 and s2 are not.  Characteristic two is out of scope."""
    F = A.field
    if getattr(F, "p", 0) == 2:
        raise CharacteristicTwo("cancellation suite needs odd characteristic")
    if F.order is None:
        raise InfiniteField("cancellation suite needs a finite field")
    blocks = small_modules(A, maxdim=dims)
    if not blocks:
        raise SesqError("no building-block modules available")
    records = []
    violations = 0
    for t in range(trials):
        rng = random.Random(f"witt:{seed}:{t}")
        picks1 = _random_sum(rng, blocks, dims) or [rng.choice(blocks)]
        picks0 = _random_sum(rng, blocks, dims)
        # shrink until the big decision fits under the cap
        while True:
            V1 = _sum_module(A, picks1)
            V0 = _sum_module(A, picks0)
            big_mod = direct_sum(V0, V1)
            hd = _hom_span(big_mod, big_mod).dim
            if F.order ** hd <= cap:
                break
            if picks0:
                picks0 = picks0[:-1]
            elif len(picks1) > 1:
                picks1 = picks1[:-1]
            else:
                break
        V1 = _sum_module(A, picks1)
        V0 = _sum_module(A, picks0)
        s0 = random_form(V0, f"{seed}:{t}:base")
        s1 = random_form(V1, f"{seed}:{t}:one")
        planted = rng.random() < 0.5
        if planted:
            s2 = _transported_form(s1, _random_automorphism(V1, rng))
        else:
            s2 = random_form(V1, f"{seed}:{t}:two")
        big = isometry_bruteforce(orth_sum(s0, s1), orth_sum(s0, s2), cap=cap)
        small = isometry_bruteforce(s1, s2, cap=cap)
        bad = False
        if big.verdict == "isometric" and small.verdict == "not_isometric":
            bad = True
        if small.verdict == "isometric" and big.verdict == "not_isometric":
            bad = True     # adding a common summand can never break an isometry
        if bad:
            violations += 1
        records.append({"trial": t, "dim_base": V0.dim, "dim_side": V1.dim,
                        "planted": planted, "sum": big.verdict,
                        "side": small.verdict, "violation": bad})
    return SuiteReport("cancellation", seed,
                       {"trials": trials, "dims": dims, "cap": cap},
                       records, violations)


# ---------------------------------------------------------------------------
# odd-degree descent
# ---------------------------------------------------------------------------

def springer_check(s, t, deg, cap=10 ** 6):
    """Compare isometry over the base field and over its degree-d extension.

    For odd d the two verdicts must agree; for even d the extension can
    merge classes, which the report simply records.
    """
    from .sesqform import form_extend
    F = s.module.field
    if not isinstance(F, PrimeField):
        raise NoEmbedding("scalar extension starts from a prime field")
    L = ExtField(F.p, deg, find_irreducible(F.p, deg))
    base = isometry_bruteforce(s, t, cap=cap)
    ext = isometry_bruteforce(form_extend(s, L).validate(),
                              form_extend(t, L).validate(), cap=cap)
    descends = not (ext.verdict == "isometric"
                    and base.verdict == "not_isometric")
    return {"degree": deg,
            "base": base.to_json(F),
            "extension": ext.to_json(L),
            "odd_degree": deg % 2 == 1,
            "descends": descends}


# ---------------------------------------------------------------------------
# orthogonal summands
# ---------------------------------------------------------------------------

def _image_form(s, e):
    """Restriction of s to the image of an idempotent endomorphism e."""
    F = s.module.field
    V = s.module
    cols = linalg.transpose(e, cols=V.dim)
    red, pivots = linalg.rref(F, cols)
    basis = red[:len(pivots)]
    r = len(basis)
    bmat_cols = linalg.transpose(basis, cols=V.dim) if basis else []
    actions = []
    for b in range(V.algebra.dim):
        R = V.actions[b]
        mats = []
        for u in basis:
            w = linalg.matvec(F, R, u)
            x = linalg.solve(F, bmat_cols, w) if r else []
            if x is None:
                raise SesqError("idempotent image is not action stable")
            mats.append(x)
        actions.append(linalg.transpose(mats, cols=r) if mats else [])
    U = RightModule(V.algebra, r, actions).validate()
    gram = [[s.evaluate(basis[i], basis[j]) for j in range(r)] for i in range(r)]
    return SesqForm(U, gram).validate()


def summand_enumerate(s, cap=10 ** 6):
    """Orthogonal summands of s up to isometry.

    Sweeps idempotent module endomorphisms whose image and co-image are
    orthogonal for s, restricts the form to each image, and keeps one
    representative per isometry class.
    """
    F = s.module.field
    if F.order is None:
        raise InfiniteField("summand enumeration needs a finite field")
    V = s.module
    n = V.dim
    span = _hom_span(V, V)
    total = F.order ** span.dim
    if total > cap:
        raise EnumTooLarge(f"{total} endomorphisms exceed cap {cap}")
    reps = []
    for coeffs in sweeps.iter_vectors(F, span.dim):
        e = linalg.unflatten(span.combine(coeffs), n, n) if span.dim else \
            linalg.zeros(F, n, n)
        if linalg.matmul(F, e, e, bcols=n) != e:
            continue
        c = linalg.mat_sub(F, linalg.identity(F, n), e)
        ortho = True
        for i in range(n):
            ei = [e[p][i] for p in range(n)]
            for j in range(n):
                cj = [c[q][j] for q in range(n)]
                if (s.evaluate(ei, cj) != V.algebra.zero_el()
                        or s.evaluate(cj, ei) != V.algebra.zero_el()):
                    ortho = False
                    break
            if not ortho:
                break
        if not ortho:
            continue
        sub = _image_form(s, e)
        if any(sub.dim == r.dim
               and isometry_bruteforce(r, sub, cap=cap).verdict == "isometric"
               for r in reps):
            continue
        reps.append(sub)
    reps.sort(key=lambda r: r.dim)
    return reps


# ---------------------------------------------------------------------------
# group-bilinear comparison
# ---------------------------------------------------------------------------

def gbilinear_isometry(b1, b2, cap=10 ** 6):
    """Equivariant isometry of invariant bilinear forms over a group ring."""
    start = time.perf_counter()
    b1.validate()
    b2.validate()
    if b1.module.dim != b2.module.dim:
        return DecisionReport("not_isometric", method="equivariant",
                              elapsed=time.perf_counter() - start)
    try:
        phi, searched = sweeps.find_bilinear_isometry(b1, b2, cap=cap)
    except (EnumTooLarge, InfiniteField) as e:
        return DecisionReport("undecided", method="equivariant",
                              elapsed=time.perf_counter() - start, detail=str(e))
    verdict = "isometric" if phi is not None else "not_isometric"
    return DecisionReport(verdict, witness=phi, method="equivariant",
                          search_size=searched,
                          elapsed=time.perf_counter() - start)
