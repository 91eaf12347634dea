"""Finite-dimensional algebras with involution, given by structure constants.

An algebra element is a coordinate vector over the base field.  Structure
constants are stored as c[i][j] = coordinates of a_i * a_j.  The involution
matrix S holds the coordinates of sigma(a_j) in column j.  The base field is
central and fixed pointwise by the involution by construction, so the
involution is always k-linear.
"""

from __future__ import annotations

from . import linalg
from .errors import (BadDimension, NoEmbedding, NotAGroup, NotAssociative,
                     NotInvolution, BadUnit)
from .exactfield import field_embed


class GroupData:
    """Group-ring bookkeeping: element names, multiplication and inverses."""

    def __init__(self, names, table, unit_index, inverse):
        self.names = list(names)
        self.table = [list(r) for r in table]
        self.unit_index = unit_index
        self.inverse = list(inverse)

    def to_json(self):
        return {"elements": self.names, "table": self.table, "unit": self.unit_index}


class InvAlgebra:
    def __init__(self, field, dim, structure, unit, invol, basis_names=None, group=None):
        self.field = field
        self.dim = dim
        self.structure = structure      # structure[i][j] -> coordinate vector
        self.unit = list(unit)
        self.invol = [row[:] for row in invol]
        self.basis_names = list(basis_names) if basis_names else [f"a{i}" for i in range(dim)]
        self.group = group              # GroupData for group rings, else None

    # -- element arithmetic ---------------------------------------------------

    def zero_el(self):
        return [self.field.zero] * self.dim

    def basis_el(self, i):
        v = self.zero_el()
        v[i] = self.field.one
        return v

    def mul_vec(self, x, y):
        F = self.field
        out = self.zero_el()
        for i, xi in enumerate(x):
            if xi == F.zero:
                continue
            for j, yj in enumerate(y):
                if yj == F.zero:
                    continue
                c = F.mul(xi, yj)
                sij = self.structure[i][j]
                for m in range(self.dim):
                    if sij[m] != F.zero:
                        out[m] = F.add(out[m], F.mul(c, sij[m]))
        return out

    def sigma_vec(self, x):
        return linalg.matvec(self.field, self.invol, x)

    def left_mult_matrix(self, b):
        """d x d matrix of x -> b*x on coordinates."""
        cols = [self.mul_vec(b, self.basis_el(i)) for i in range(self.dim)]
        return linalg.transpose(cols, cols=self.dim) if cols else []

    def right_mult_matrix(self, b):
        """d x d matrix of x -> x*b on coordinates."""
        cols = [self.mul_vec(self.basis_el(i), b) for i in range(self.dim)]
        return linalg.transpose(cols, cols=self.dim) if cols else []

    def scalar_el(self, c):
        """The central element c * unit."""
        return [self.field.mul(c, u) for u in self.unit]

    # -- validation -------------------------------------------------------

    def is_unit(self, x):
        return linalg.is_invertible(self.field, self.left_mult_matrix(x))

    def inv_el(self, x):
        """Two-sided inverse via the regular representation."""
        from .errors import NotInvertible
        L = linalg.inverse(self.field, self.left_mult_matrix(x))
        if L is None:
            raise NotInvertible("element is not a unit")
        return linalg.matvec(self.field, L, self.unit)

    def validate_ring(self):
        """Shape, unit and associativity checks only."""
        d = self.dim
        if len(self.structure) != d or any(len(r) != d for r in self.structure):
            raise BadDimension("structure constants have wrong shape")
        if any(len(self.structure[i][j]) != d for i in range(d) for j in range(d)):
            raise BadDimension("structure constants have wrong shape")
        if len(self.unit) != d or len(self.invol) != d or any(len(r) != d for r in self.invol):
            raise BadDimension("unit or involution has wrong shape")
        basis = [self.basis_el(i) for i in range(d)]
        # two-sided unit
        for i in range(d):
            if self.mul_vec(self.unit, basis[i]) != basis[i]:
                raise BadUnit(f"unit fails on the left at basis index {i}")
            if self.mul_vec(basis[i], self.unit) != basis[i]:
                raise BadUnit(f"unit fails on the right at basis index {i}")
        # associativity on all basis triples
        for i in range(d):
            for j in range(d):
                ij = self.structure[i][j]
                for m in range(d):
                    lhs = self.mul_vec(ij, basis[m])
                    rhs = self.mul_vec(basis[i], self.structure[j][m])
                    if lhs != rhs:
                        raise NotAssociative(f"(a{i}*a{j})*a{m} != a{i}*(a{j}*a{m})")
        return self

    def validate(self):
        F = self.field
        d = self.dim
        self.validate_ring()
        basis = [self.basis_el(i) for i in range(d)]
        # involution: sigma^2 = id, anti-multiplicative, fixes the unit
        s2 = linalg.matmul(F, self.invol, self.invol)
        if s2 != linalg.identity(F, d):
            raise NotInvolution("sigma^2 is not the identity")
        for i in range(d):
            for j in range(d):
                lhs = self.sigma_vec(self.structure[i][j])
                rhs = self.mul_vec(self.sigma_vec(basis[j]), self.sigma_vec(basis[i]))
                if lhs != rhs:
                    raise NotInvolution(f"sigma(a{i}*a{j}) != sigma(a{j})*sigma(a{i})")
        if self.sigma_vec(self.unit) != self.unit:
            raise NotInvolution("sigma does not fix the unit")
        return self

    def __eq__(self, other):
        return (isinstance(other, InvAlgebra)
                and self.field == other.field
                and self.dim == other.dim
                and self.structure == other.structure
                and self.unit == other.unit
                and self.invol == other.invol)

    def __repr__(self):
        return f"InvAlgebra(dim={self.dim}, field={self.field.descriptor()})"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def algebra_validate(field, dim, structure, unit, invol, basis_names=None, group=None):
    return InvAlgebra(field, dim, structure, unit, invol, basis_names, group).validate()


def trivial_algebra(field):
    """The base field viewed as an algebra with the identity involution."""
    one = field.one
    return algebra_validate(field, 1, [[[one]]], [one], [[one]], basis_names=["1"])


def _check_group(table, unit):
    n = len(table)
    if any(len(r) != n for r in table):
        raise NotAGroup("multiplication table is not square")
    if any(not (0 <= x < n) for r in table for x in r):
        raise NotAGroup("table entry out of range")
    for i in range(n):
        if table[unit][i] != i or table[i][unit] != i:
            raise NotAGroup("unit element fails")
    inverse = [None] * n
    for i in range(n):
        for j in range(n):
            if table[i][j] == unit and table[j][i] == unit:
                inverse[i] = j
                break
        if inverse[i] is None:
            raise NotAGroup(f"element {i} has no inverse")
    for i in range(n):
        for j in range(n):
            for m in range(n):
                if table[table[i][j]][m] != table[i][table[j][m]]:
                    raise NotAGroup("table is not associative")
    return inverse


def group_ring(field, group_json):
    """Group ring k[G] with the canonical involution g -> g^{-1}."""
    names = list(group_json["elements"])
    table = [list(r) for r in group_json["table"]]
    unit = group_json["unit"]
    inverse = _check_group(table, unit)
    n = len(table)
    F = field
    structure = [[[F.one if m == table[i][j] else F.zero for m in range(n)]
                  for j in range(n)] for i in range(n)]
    unit_vec = [F.one if i == unit else F.zero for i in range(n)]
    invol = [[F.one if inverse[j] == i else F.zero for j in range(n)] for i in range(n)]
    gd = GroupData(names, table, unit, inverse)
    return algebra_validate(field, n, structure, unit_vec, invol,
                            basis_names=names, group=gd)


def cyclic_group_json(n):
    """Multiplication table of the cyclic group C_n."""
    return {"elements": [f"g{i}" if i else "e" for i in range(n)],
            "table": [[(i + j) % n for j in range(n)] for i in range(n)],
            "unit": 0}


def matrix_algebra(field, n):
    """Full matrix algebra M_n(k) with the transpose involution."""
    if n < 1:
        raise BadDimension("matrix algebra needs n >= 1")
    F = field
    d = n * n

    def idx(a, b):
        return a * n + b

    structure = [[[F.zero] * d for _ in range(d)] for _ in range(d)]
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    # E_ab * E_ce = delta_bc E_ae
                    if b == c:
                        structure[idx(a, b)][idx(c, e)][idx(a, e)] = F.one
    unit = [F.zero] * d
    for a in range(n):
        unit[idx(a, a)] = F.one
    invol = [[F.zero] * d for _ in range(d)]
    for a in range(n):
        for b in range(n):
            invol[idx(b, a)][idx(a, b)] = F.one
    names = [f"E{a}{b}" for a in range(n) for b in range(n)]
    return algebra_validate(field, d, structure, unit, invol, basis_names=names)


def algebra_extend(A, L):
    """Scalar extension A tensor L with the involution extended L-linearly."""
    k = A.field
    if field_embed(k, L, k.zero) is None:  # raises NoEmbedding when impossible
        raise NoEmbedding("no embedding")  # pragma: no cover

    def emb(x):
        return field_embed(k, L, x)

    structure = [[[emb(c) for c in A.structure[i][j]] for j in range(A.dim)]
                 for i in range(A.dim)]
    unit = [emb(c) for c in A.unit]
    invol = [[emb(c) for c in row] for row in A.invol]
    return algebra_validate(L, A.dim, structure, unit, invol,
                            basis_names=A.basis_names, group=A.group)
