"""End-to-end acceptance gate.

Ten independent checks, each printing a single PASS/FAIL line.  Everything
is exact arithmetic; the only tolerances are wall-clock budgets.
"""

import time

import pytest

from sesq import linalg
from sesq.algebra import (cyclic_group_json, group_ring, matrix_algebra,
                          trivial_algebra)
from sesq.amodule import (direct_sum, double_dual_map, dual_hom, dual_module,
                          module_validate, regular_module)
from sesq.darrow import form_of_herm, herm_check, q_of_form
from sesq.decide import (enumerate_forms, gbilinear_isometry,
                         isometry_bruteforce, isometry_transfer,
                         small_modules, springer_check, summand_enumerate,
                         transfer_setup, witt_cancellation_check)
from sesq.endoring import herm_classes, quotient_radical, radical
from sesq.exactfield import PrimeField
from sesq.serialize import canonical_dumps, load_fixture
from sesq.sesqform import (GBilinearForm, form_validate, gbilinear_to_sesq,
                           left_adjoint, random_form, right_adjoint,
                           sesq_to_gbilinear)


def _report(num, ok, message):
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'}: {message}"
    print(line)
    assert ok, line


def _matrix_simple_module(A):
    """The 2-dim simple right module of the 2x2 matrix algebra."""
    actions = [linalg.transpose([[A.field.from_int(v) for v in row]
                                 for row in mat])
               for mat in ([[1, 0], [0, 0]], [[0, 1], [0, 0]],
                           [[0, 0], [1, 0]], [[0, 0], [0, 1]])]
    return module_validate(A, 2, actions)


def _sample_modules():
    """Five algebras with modules of k-dimension at most four."""
    F3, F5, F2 = PrimeField(3), PrimeField(5), PrimeField(2)
    out = []

    T3 = trivial_algebra(F3)
    k = regular_module(T3)
    out.append(("F3", [k, direct_sum(k, k), direct_sum(k, direct_sum(k, k)),
                       direct_sum(direct_sum(k, k), direct_sum(k, k))]))

    T5 = trivial_algebra(F5)
    k = regular_module(T5)
    out.append(("F5", [k, direct_sum(k, k), direct_sum(k, direct_sum(k, k)),
                       direct_sum(direct_sum(k, k), direct_sum(k, k))]))

    A = group_ring(F3, cyclic_group_json(2))
    r = regular_module(A)
    sign = module_validate(A, 1, [[[1]], [[2]]])
    out.append(("F3[C2]", [r, direct_sum(r, sign), direct_sum(r, r)]))

    B = group_ring(F2, cyclic_group_json(3))
    r = regular_module(B)
    triv = module_validate(B, 1, [[[1]], [[1]], [[1]]])
    out.append(("F2[C3]", [triv, r, direct_sum(r, triv)]))

    M = matrix_algebra(F3, 2)
    out.append(("M2(F3)", [_matrix_simple_module(M), regular_module(M)]))
    return out


@pytest.fixture(scope="module")
def corpus():
    """200 seeded forms spread across the five sample algebras."""
    forms = []
    for name, modules in _sample_modules():
        for i in range(40):
            V = modules[i % len(modules)]
            forms.append((name, random_form(V, f"acc1:{name}:{i}")))
    assert len(forms) == 200
    return forms


def test_criterion_01_functor_roundtrip(corpus):
    start = time.perf_counter()
    bad = 0
    for _, s in corpus:
        M, h = q_of_form(s)
        back = form_of_herm(M, h)
        if back.gram != s.gram:
            bad += 1
    elapsed = time.perf_counter() - start
    _report(1, bad == 0 and elapsed < 30.0,
            f"functor round trip exact on {len(corpus)} forms "
            f"({bad} mismatches, {elapsed:.1f}s)")


def test_criterion_02_adjoint_identity(corpus):
    bad = 0
    for _, s in corpus:
        expect = dual_hom(left_adjoint(s)).compose(double_dual_map(s.module))
        if right_adjoint(s).mat != expect.mat:
            bad += 1
    _report(2, bad == 0,
            f"s_r = s_l^* o e_V exact on {len(corpus)} forms ({bad} mismatches)")


def test_criterion_03_hermitian_structure(corpus):
    bad = 0
    for _, s in corpus:
        M, h = q_of_form(s)
        if not (herm_check(M, h) and h.phi.is_invertible()
                and h.psi.is_invertible()):
            bad += 1
    for name in ("m_k1_f3.json", "m_k2_f3.json", "m_reg_f3c2.json"):
        V = load_fixture(name)
        Vd = dual_module(V)
        comp = dual_hom(double_dual_map(V)).compose(double_dual_map(Vd))
        if comp.mat != linalg.identity(V.field, Vd.dim):
            bad += 1
    _report(3, bad == 0,
            f"hermitian pairs valid with bijective components and the "
            f"duality identity holds ({bad} failures)")


def test_criterion_04_transfer_soundness():
    start = time.perf_counter()
    F3 = PrimeField(3)
    T = trivial_algebra(F3)
    k1 = regular_module(T)
    k2 = direct_sum(k1, k1)
    forms = enumerate_forms(k1, unimodular_only=True) + \
        enumerate_forms(k2, unimodular_only=True)
    assert len(forms) == 2 + 48
    disagreements = 0
    pairs = 0
    for s in forms:
        for t in forms:
            if s.module.dim != t.module.dim:
                continue
            pairs += 1
            if isometry_bruteforce(s, t).verdict != \
                    isometry_transfer(s, t).verdict:
                disagreements += 1
    one = form_validate(k1, [[[1]]])
    Q0, eta0, E = transfer_setup(one)
    lines = [s for s in forms if s.module.dim == 1]
    classes = []
    for s in lines:
        if not any(isometry_bruteforce(s, r).verdict == "isometric"
                   for r in classes):
            classes.append(s)
    n_classes = len(classes)
    n_herm = len(herm_classes(E))
    elapsed = time.perf_counter() - start
    _report(4, disagreements == 0 and n_classes == n_herm == 2
            and elapsed < 120.0,
            f"transfer agrees with brute force on {pairs} pairs "
            f"({disagreements} disagreements); classes over Q0: "
            f"{n_classes} = |H| = {n_herm} ({elapsed:.1f}s)")


def test_criterion_05_witt_cancellation():
    start = time.perf_counter()
    F3, F5 = PrimeField(3), PrimeField(5)
    algebras = [trivial_algebra(F3), trivial_algebra(F5),
                group_ring(F3, cyclic_group_json(2)),
                group_ring(F5, cyclic_group_json(2))]
    total = 0
    for A in algebras:
        rep = witt_cancellation_check(A, trials=100, seed=0, dims=2)
        total += rep.violations
    elapsed = time.perf_counter() - start
    _report(5, total == 0 and elapsed < 300.0,
            f"cancellation held in 100 trials x {len(algebras)} algebras "
            f"({total} violations, {elapsed:.1f}s)")


def test_criterion_06_springer_descent(one_f3, two_f3):
    start = time.perf_counter()
    odd = springer_check(one_f3, two_f3, 3)
    even = springer_check(one_f3, two_f3, 2)
    ok = (odd["base"]["verdict"] == "not_isometric"
          and odd["extension"]["verdict"] == "not_isometric"
          and odd["descends"]
          and even["extension"]["verdict"] == "isometric"
          and not even["descends"])
    elapsed = time.perf_counter() - start
    _report(6, ok and elapsed < 5.0,
            f"<1> vs <2> stays non-isometric over F27, merges over F9 "
            f"({elapsed:.1f}s)")


def test_criterion_07_g_bilinear_correspondence():
    start = time.perf_counter()
    F3, F2 = PrimeField(3), PrimeField(2)
    A = group_ring(F3, cyclic_group_json(2))
    B = group_ring(F2, cyclic_group_json(3))
    bad = 0
    count = 0
    for alg in (A, B):
        R = regular_module(alg)
        for i in range(50):
            s = random_form(R, f"acc7:{alg.dim}:{i}")
            b = sesq_to_gbilinear(s)
            if sesq_to_gbilinear(gbilinear_to_sesq(b)).bmat != b.bmat:
                bad += 1
            count += 1
    # rank-one family over F3[C2]: verdicts agree across the bridge
    mismatches = 0
    family = []
    for V in [m for m in small_modules(A, maxdim=1) if m.dim == 1]:
        for c in range(3):
            family.append(GBilinearForm(V, [[c]]).validate())
    for b1 in family:
        for b2 in family:
            if b1.module is not b2.module:
                continue
            eq = gbilinear_isometry(b1, b2).verdict
            sq = isometry_bruteforce(gbilinear_to_sesq(b1),
                                     gbilinear_to_sesq(b2)).verdict
            if eq != sq:
                mismatches += 1
    elapsed = time.perf_counter() - start
    _report(7, bad == 0 and mismatches == 0 and count == 100
            and elapsed < 120.0,
            f"P o S = b exact on {count} forms ({bad} failures); rank-one "
            f"family verdicts agree ({mismatches} mismatches, {elapsed:.1f}s)")


def test_criterion_08_radical_reduction(diag11_f3, one_f3, T3, k2, A3C2):
    start = time.perf_counter()
    F2, F3 = PrimeField(2), PrimeField(3)
    r2 = radical(group_ring(F2, cyclic_group_json(2)))
    r3 = radical(group_ring(F3, cyclic_group_json(2)))
    ok = r2 == [[1, 1]] and r3 == []
    # class counts before and after killing the radical, odd characteristic
    from sesq.sesqform import form_validate as fv
    degenerate = fv(k2, [[[1], [0]], [[0], [0]]])
    reg_form = random_form(regular_module(A3C2), "acc8", require_unimodular=True)
    mism = []
    for s in (one_f3, diag11_f3, degenerate, reg_form):
        _, _, E = transfer_setup(s)
        a = len(herm_classes(E))
        b = len(herm_classes(quotient_radical(E)))
        if a != b:
            mism.append((s.dim, a, b))
    elapsed = time.perf_counter() - start
    _report(8, ok and not mism and elapsed < 60.0,
            f"rad(F2[C2]) = span(e+g), rad(F3[C2]) = 0; class counts match "
            f"E/rad on 4 endomorphism rings ({mism or 'all equal'}, "
            f"{elapsed:.1f}s)")


def test_criterion_09_summand_finiteness(sum12_f3, one_f3, two_f3):
    start = time.perf_counter()
    reps = summand_enumerate(sum12_f3)
    ok = [r.dim for r in reps] == [0, 1, 1, 2]
    if ok:
        lines = [r for r in reps if r.dim == 1]
        hits = {w.gram[0][0][0]
                for w in (one_f3, two_f3)
                for m in lines
                if isometry_bruteforce(m, w).verdict == "isometric"}
        ok = hits == {1, 2}
        ok = ok and isometry_bruteforce(reps[-1], sum12_f3).verdict == \
            "isometric"
    elapsed = time.perf_counter() - start
    _report(9, ok and elapsed < 60.0,
            f"summands of <1>+<2> are exactly {{0, <1>, <2>, whole}} "
            f"({elapsed:.1f}s)")


def test_criterion_10_determinism(one_f3, two_f3, diag11_f3, diag22_f3):
    F3 = PrimeField(3)
    T = trivial_algebra(F3)
    pieces = []
    for _ in range(2):
        chunk = []
        chunk.append(canonical_dumps(
            witt_cancellation_check(T, trials=10, seed=4).to_json()))
        chunk.append(canonical_dumps(springer_check(one_f3, two_f3, 3)))
        chunk.append(canonical_dumps(
            isometry_bruteforce(diag11_f3, diag22_f3).to_json(F3)))
        chunk.append(canonical_dumps(
            isometry_transfer(diag11_f3, diag22_f3).to_json(F3)))
        _, _, E = transfer_setup(one_f3)
        chunk.append(canonical_dumps(herm_classes(E).to_json(E.field)))
        pieces.append(chunk)
    same = pieces[0] == pieces[1]
    _report(10, same, "suite reruns are byte-identical "
            f"({len(pieces[0])} reports compared)")
