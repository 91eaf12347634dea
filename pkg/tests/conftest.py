import os

import pytest

from sesq import (ExtField, PrimeField, RationalField, cyclic_group_json,
                  form_validate, group_ring, matrix_algebra, regular_module,
                  trivial_algebra)
from sesq.amodule import direct_sum

DATA = os.path.join(os.path.dirname(__file__), "data")


def data_path(name):
    return os.path.join(DATA, name)


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def Q():
    return RationalField()


@pytest.fixture(scope="session")
def A3C2(F3):
    return group_ring(F3, cyclic_group_json(2))


@pytest.fixture(scope="session")
def A2C3(F2):
    return group_ring(F2, cyclic_group_json(3))


@pytest.fixture(scope="session")
def M2F3(F3):
    return matrix_algebra(F3, 2)


@pytest.fixture(scope="session")
def T3(F3):
    return trivial_algebra(F3)


@pytest.fixture(scope="session")
def k1(T3):
    return regular_module(T3)


@pytest.fixture(scope="session")
def k2(T3, k1):
    return direct_sum(k1, k1)


def scalar_diag(A, V, entries):
    """Diagonal form over a trivial-style algebra (scalar Gram entries)."""
    n = V.dim
    gram = [[A.scalar_el(A.field.from_int(entries[i])) if i == j
             else A.zero_el() for j in range(n)] for i in range(n)]
    return form_validate(V, gram)


@pytest.fixture(scope="session")
def one_f3(T3, k1):
    return scalar_diag(T3, k1, [1])


@pytest.fixture(scope="session")
def two_f3(T3, k1):
    return scalar_diag(T3, k1, [2])


@pytest.fixture(scope="session")
def diag11_f3(T3, k2):
    return scalar_diag(T3, k2, [1, 1])


@pytest.fixture(scope="session")
def diag22_f3(T3, k2):
    return scalar_diag(T3, k2, [2, 2])


@pytest.fixture(scope="session")
def sum12_f3(T3, k2):
    return scalar_diag(T3, k2, [1, 2])
