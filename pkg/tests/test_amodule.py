import pytest

from sesq import linalg
from sesq.algebra import algebra_validate
from sesq.amodule import (ModuleHom, direct_sum, double_dual_map, dual_hom,
                          dual_module, hom_space, module_extend,
                          module_validate, regular_module, zero_module)
from sesq.errors import NotAModule
from sesq.exactfield import ExtField, PrimeField, find_irreducible


@pytest.fixture(scope="module")
def triangular():
    """Upper-triangular 2x2 matrices with the anti-diagonal flip involution."""
    F = PrimeField(3)
    z = [0, 0, 0]

    def v(i):
        x = [0, 0, 0]
        x[i] = 1
        return x

    S = [[z[:] for _ in range(3)] for _ in range(3)]
    S[0][0] = v(0)
    S[0][1] = v(1)
    S[1][2] = v(1)
    S[2][2] = v(2)
    invol = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    return algebra_validate(F, 3, S, [1, 0, 1], invol,
                            basis_names=["E00", "E01", "E11"])


def test_regular_module_action(A3C2):
    R = regular_module(A3C2)
    assert R.dim == 2
    # right multiplication by g swaps the two coordinates
    assert R.actions[1] == [[0, 1], [1, 0]]
    assert R.actions[0] == [[1, 0], [0, 1]]


def test_regular_module_cached(A3C2):
    assert regular_module(A3C2) is regular_module(A3C2)


def test_module_validate_rejects_nonaction(A3C2):
    # R_g must square to the identity in F3[C2]
    module_validate(A3C2, 1, [[[1]], [[2]]])      # 2^2 = 4 = 1 mod 3
    with pytest.raises(NotAModule):
        module_validate(A3C2, 1, [[[1]], [[0]]])


def test_zero_module(A3C2):
    Z = zero_module(A3C2)
    assert Z.dim == 0 and dual_module(Z).dim == 0


def test_hom_space_dimensions(A3C2, k2):
    R = regular_module(A3C2)
    assert len(hom_space(R, R)) == 2
    assert len(hom_space(k2, k2)) == 4


def test_hom_space_members_are_homs(A3C2):
    R = regular_module(A3C2)
    for hom in hom_space(R, R):
        hom.validate()


def test_dual_module_dimension(A3C2, k1):
    R = regular_module(A3C2)
    assert dual_module(R).dim == 2
    assert dual_module(k1).dim == 1


def test_dual_functionals_are_homs(A3C2):
    R = regular_module(A3C2)
    Rd = dual_module(R)
    Areg = regular_module(A3C2)
    for fmat in Rd.functionals:
        ModuleHom(R, Areg, fmat).validate()


def test_double_dual_bijective(A3C2, k2):
    for V in (regular_module(A3C2), k2):
        e = double_dual_map(V)
        assert e.is_invertible()


def test_duality_unit_identity(A3C2, k2):
    # (e_V)^* composed with e_{V^*} is the identity on V^*
    F = A3C2.field
    for V in (regular_module(A3C2), k2):
        Vd = dual_module(V)
        e_V = double_dual_map(V)
        e_Vd = double_dual_map(Vd)
        comp = dual_hom(e_V).compose(e_Vd)
        assert comp.mat == linalg.identity(F, Vd.dim)


def test_dual_hom_contravariant(A3C2):
    F = A3C2.field
    R = regular_module(A3C2)
    T = ModuleHom(R, R, [[1, 2], [2, 1]]).validate()
    U = ModuleHom(R, R, [[0, 1], [1, 0]]).validate()
    TU = T.compose(U)                      # T after U
    assert dual_hom(TU).mat == dual_hom(U).compose(dual_hom(T)).mat


def test_double_dual_natural(A3C2):
    R = regular_module(A3C2)
    T = ModuleHom(R, R, [[1, 2], [2, 1]]).validate()
    Tdd = dual_hom(dual_hom(T))
    e = double_dual_map(R)
    assert Tdd.compose(e).mat == e.compose(T).mat


def test_direct_sum_block_structure(A3C2):
    R = regular_module(A3C2)
    S = direct_sum(R, R)
    assert S.dim == 4
    assert S.actions[1] == linalg.block_diag(A3C2.field, R.actions[1], (2, 2),
                                             R.actions[1], (2, 2))


def test_module_extend(A3C2):
    F9 = ExtField(3, 2, find_irreducible(3, 2))
    R = regular_module(A3C2)
    RL = module_extend(R, F9)
    assert RL.dim == R.dim and RL.field is F9
    RL.validate()


def test_nonreflexive_module_exists(triangular):
    A = triangular
    # the character where E00 acts as identity has a zero dual
    V = module_validate(A, 1, [[[1]], [[0]], [[0]]])
    assert dual_module(V).dim == 0
    from sesq.amodule import reflexive_check
    assert reflexive_check(V) is False
    # the opposite character is reflexive with a 2-dimensional dual
    W = module_validate(A, 1, [[[0]], [[0]], [[1]]])
    assert dual_module(W).dim == 2
    assert reflexive_check(W) is True


def test_dual_action_consistency(A3C2):
    """Pairing covariance: (f . a)(x) = sigma(a) f(x) on basis functionals."""
    A = A3C2
    F = A.field
    R = regular_module(A)
    Rd = dual_module(R)
    for j, fmat in enumerate(Rd.functionals):
        for t in range(A.dim):
            avec = A.basis_el(t)
            coords = linalg.zeros(F, Rd.dim, 1)
            acted = linalg.matvec(F, Rd.actions[t],
                                  [F.one if i == j else F.zero
                                   for i in range(Rd.dim)])
            new_fmat = linalg.zeros(F, A.dim, R.dim)
            for i, c in enumerate(acted):
                new_fmat = linalg.mat_add(F, new_fmat,
                                          linalg.mat_scale(F, c,
                                                           Rd.functionals[i]))
            sig = A.sigma_vec(avec)
            expect = linalg.matmul(F, A.left_mult_matrix(sig), fmat)
            assert new_fmat == expect
