import pytest

from sesq import linalg
from sesq.algebra import cyclic_group_json, group_ring, trivial_algebra
from sesq.amodule import regular_module
from sesq.darrow import q_of_form
from sesq.decide import (congruence_decide, enumerate_forms,
                         gbilinear_isometry, isometry_bruteforce,
                         isometry_decide, isometry_transfer, small_modules,
                         springer_check, summand_enumerate, transfer_setup,
                         witt_cancellation_check)
from sesq.endoring import endo_compute, induced_involution
from sesq.errors import CharacteristicTwo
from sesq.exactfield import PrimeField, RationalField
from sesq.serialize import load_fixture
from sesq.sesqform import (GBilinearForm, form_validate, isometry_criterion,
                           random_form, unimodular_check)


def test_bruteforce_distinguishes_f2_planes():
    s = load_fixture("f2_diag.json")
    t = load_fixture("f2_antidiag.json")
    rep = isometry_bruteforce(s, t)
    assert rep.verdict == "not_isometric"
    assert rep.search_size == 16


def test_bruteforce_finds_witness(diag11_f3, diag22_f3):
    rep = isometry_bruteforce(diag11_f3, diag22_f3)
    assert rep.verdict == "isometric"
    assert isometry_criterion(diag11_f3, diag22_f3, rep.witness)


def test_bruteforce_scaled_line(one_f3, two_f3):
    assert isometry_bruteforce(one_f3, two_f3).verdict == "not_isometric"
    assert isometry_bruteforce(one_f3, one_f3).verdict == "isometric"


def test_transfer_agrees_with_bruteforce_on_lines(one_f3, two_f3):
    assert isometry_transfer(one_f3, two_f3).verdict == "not_isometric"
    assert isometry_transfer(one_f3, one_f3).verdict == "isometric"


def test_transfer_witness_verified(diag11_f3, diag22_f3):
    rep = isometry_transfer(diag11_f3, diag22_f3)
    assert rep.verdict == "isometric"
    assert isometry_criterion(diag11_f3, diag22_f3, rep.witness)


def test_transfer_vs_bruteforce_random(A3C2):
    R = regular_module(A3C2)
    forms = [random_form(R, k, require_unimodular=True) for k in range(4)]
    for s in forms[:2]:
        for t in forms:
            b = isometry_bruteforce(s, t).verdict
            tr = isometry_transfer(s, t).verdict
            assert b == tr


def test_transfer_setup_cached(diag11_f3):
    assert transfer_setup(diag11_f3) is transfer_setup(diag11_f3)


def test_isometry_decide_dispatch(one_f3, two_f3):
    assert isometry_decide(one_f3, two_f3).method == "bruteforce"
    assert isometry_decide(one_f3, two_f3, method="transfer").method == \
        "transfer"


def test_undecided_over_rationals(Q):
    T = trivial_algebra(Q)
    V = regular_module(T)
    s = form_validate(V, [[[Q.from_int(1)]]])
    rep = isometry_bruteforce(s, s)
    assert rep.verdict == "undecided"
    assert rep.detail


def test_congruence_decide(one_f3, diag11_f3):
    _, _, E1 = transfer_setup(one_f3)
    rep = congruence_decide(E1, [1], [2])
    assert rep.verdict == "not_isometric"
    rep = congruence_decide(E1, [1], [1])
    assert rep.verdict == "isometric" and rep.witness == [[1]]


def test_congruence_planted(diag11_f3):
    _, _, E = transfer_setup(diag11_f3)
    import random
    rng = random.Random("congruence-planted")
    f = E.unit
    for _ in range(5):
        g0 = [E.field.sample(rng) for _ in range(E.dim)]
        if not E.is_unit(g0):
            continue
        fp = E.mul_vec(E.mul_vec(E.sigma_vec(g0), f), g0)
        rep = congruence_decide(E, f, fp)
        assert rep.verdict == "isometric"
        g = rep.witness[0]
        assert E.mul_vec(E.mul_vec(E.sigma_vec(g), f), g) == fp


def test_enumerate_forms_line(T3, k1):
    forms = enumerate_forms(k1)
    assert len(forms) == 3
    uni = enumerate_forms(k1, unimodular_only=True)
    assert len(uni) == 2
    assert all(unimodular_check(s) for s in uni)


def test_enumerate_forms_canonical_order(T3, k1):
    grams = [s.gram for s in enumerate_forms(k1)]
    assert grams == [[[[0]]], [[[1]]], [[[2]]]]


def test_small_modules(T3, A3C2):
    assert any(b.dim == 1 for b in small_modules(T3))
    blocks = small_modules(A3C2)
    assert any(b.dim == 2 for b in blocks)       # the regular module
    assert any(b.dim == 1 for b in blocks)


def test_witt_no_violations_trivial(F3, T3):
    report = witt_cancellation_check(T3, trials=25, seed=0)
    assert report.ok()
    assert report.violations == 0
    assert len(report.records) == 25
    assert any(r["planted"] for r in report.records)
    assert any(not r["planted"] for r in report.records)
    # planted trials must come out isometric on the side forms
    for r in report.records:
        if r["planted"]:
            assert r["side"] == "isometric" and r["sum"] == "isometric"


def test_witt_no_violations_group_ring(A3C2):
    report = witt_cancellation_check(A3C2, trials=10, seed=1, cap=200000)
    assert report.ok() and report.violations == 0


def test_witt_rejects_char_two(F2):
    with pytest.raises(CharacteristicTwo):
        witt_cancellation_check(group_ring(F2, cyclic_group_json(2)))


def test_witt_deterministic(T3):
    a = witt_cancellation_check(T3, trials=8, seed=3).to_json()
    b = witt_cancellation_check(T3, trials=8, seed=3).to_json()
    assert a == b


def test_springer_odd_degree_descends(one_f3, two_f3):
    out = springer_check(one_f3, two_f3, 3)
    assert out["odd_degree"] and out["descends"]
    assert out["base"]["verdict"] == "not_isometric"
    assert out["extension"]["verdict"] == "not_isometric"


def test_springer_even_degree_can_merge(one_f3, two_f3):
    out = springer_check(one_f3, two_f3, 2)
    assert not out["odd_degree"]
    assert out["base"]["verdict"] == "not_isometric"
    assert out["extension"]["verdict"] == "isometric"
    assert out["descends"] is False


def test_springer_isometric_stays_isometric(diag11_f3, diag22_f3):
    out = springer_check(diag11_f3, diag22_f3, 3)
    assert out["base"]["verdict"] == "isometric"
    assert out["extension"]["verdict"] == "isometric"
    assert out["descends"]


def test_summands_of_split_plane(sum12_f3, one_f3, two_f3):
    reps = summand_enumerate(sum12_f3)
    assert [r.dim for r in reps] == [0, 1, 1, 2]
    mids = [r for r in reps if r.dim == 1]
    # the two rank-one summands land in distinct isometry classes
    assert isometry_bruteforce(mids[0], mids[1]).verdict == "not_isometric"
    found = {isometry_bruteforce(m, one_f3).verdict for m in mids}
    assert found == {"isometric", "not_isometric"}


def test_summands_of_line(one_f3):
    reps = summand_enumerate(one_f3)
    assert [r.dim for r in reps] == [0, 1]


def test_gbilinear_isometry(A3C2):
    R = regular_module(A3C2)
    F = A3C2.field
    b1 = GBilinearForm(R, linalg.identity(F, 2)).validate()
    rep = gbilinear_isometry(b1, b1)
    assert rep.verdict == "isometric"
    # transported copy: u^T B u for an equivariant automorphism u = R_g
    u = R.actions[1]
    ut = linalg.transpose(u)
    moved = linalg.matmul(F, linalg.matmul(F, ut, b1.bmat), u)
    b2 = GBilinearForm(R, moved).validate()
    rep = gbilinear_isometry(b1, b2)
    assert rep.verdict == "isometric"
    phi = rep.witness
    lhs = linalg.matmul(F, linalg.matmul(F, linalg.transpose(phi), b2.bmat), phi)
    assert lhs == b1.bmat


def test_report_json_has_no_timing(one_f3, two_f3):
    rep = isometry_bruteforce(one_f3, two_f3)
    data = rep.to_json(one_f3.module.field)
    assert "elapsed" not in data
    assert rep.elapsed >= 0.0
    rep2 = isometry_bruteforce(one_f3, two_f3)
    assert data == rep2.to_json(one_f3.module.field)
