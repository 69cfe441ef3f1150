"""Finite-dimensional associative algebras given by structure constants.

An :class:`Algebra` carries a designated complete set of orthogonal
idempotents and a designated radical; every constructor derives these
functorially and :meth:`Algebra.validate` then proves the designation
correct (associativity on all basis triples, unit and idempotent laws,
radical a nilpotent two-sided ideal, elementary semisimple quotient).
Only elementary (basic split) algebras are supported.

Structure constants are stored sparsely: ``table[i][j]`` is a dict
mapping basis index k to the coefficient of b_k in b_i * b_j.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import FieldSpec
from .linalg import Echelon, Matrix, Subspace, unit_vec, vec_is_zero, zero_vec


class AlgebraError(Exception):
    """A constructed algebra violates its invariants."""


class Algebra:
    __slots__ = ("field", "dim", "labels", "table", "unit", "idempotents",
                 "radical", "name", "_opposite", "_left_mult", "_right_mult",
                 "_generators", "_radical_powers")

    def __init__(self, field: FieldSpec, labels, table, unit, idempotents,
                 radical: Subspace, name: str = "A", validate: bool = True):
        self.field = field
        self.dim = len(labels)
        self.labels = list(labels)
        self.table = table
        self.unit = tuple(unit)
        self.idempotents = [tuple(e) for e in idempotents]
        self.radical = radical
        self.name = name
        self._opposite = None
        self._left_mult = {}
        self._right_mult = {}
        self._generators = None
        self._radical_powers = None
        if validate:
            self.validate()

    def __repr__(self):
        return f"Algebra({self.name}, dim {self.dim} over {self.field})"

    # -- multiplication ----------------------------------------------------
    def mult(self, x, y) -> tuple:
        """Bilinear product of coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise AlgebraError(f"dimension mismatch: expected {self.dim}")
        f = self.field
        add, mul = f.add, f.mul
        acc = [f.zero] * self.dim
        table = self.table
        for i, xi in enumerate(x):
            if xi == 0:
                continue
            ti = table[i]
            for j, yj in enumerate(y):
                if yj == 0:
                    continue
                c = mul(xi, yj)
                for k, ck in ti[j].items():
                    acc[k] = add(acc[k], mul(c, ck))
        return tuple(acc)

    def basis_product(self, i: int, j: int) -> tuple:
        f = self.field
        v = [f.zero] * self.dim
        for k, c in self.table[i][j].items():
            v[k] = c
        return tuple(v)

    def basis_vector(self, i: int) -> tuple:
        return unit_vec(self.field, self.dim, i)

    def element_by_label(self, label: str) -> tuple:
        try:
            return self.basis_vector(self.labels.index(label))
        except ValueError:
            raise AlgebraError(f"no basis element labeled {label!r}") from None

    def left_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> x*y (columns are x*b_j)."""
        key = tuple(x)
        m = self._left_mult.get(key)
        if m is None:
            cols = [self.mult(x, self.basis_vector(j)) for j in range(self.dim)]
            m = Matrix.from_columns(self.field, cols, self.dim)
            self._left_mult[key] = m
        return m

    def right_mult_matrix(self, x) -> Matrix:
        """Matrix of y -> y*x."""
        key = tuple(x)
        m = self._right_mult.get(key)
        if m is None:
            cols = [self.mult(self.basis_vector(j), x) for j in range(self.dim)]
            m = Matrix.from_columns(self.field, cols, self.dim)
            self._right_mult[key] = m
        return m

    # -- derived data ------------------------------------------------------
    def generators(self) -> list[tuple]:
        """Idempotents plus a lift of rad/rad^2: an algebra generating set."""
        if self._generators is None:
            rad2 = self.radical_power(2)
            gens = list(self.idempotents)
            ech = Echelon(self.field, self.dim)
            ech.extend(rad2.basis)
            for row in self.radical.basis:
                if ech.add(row):
                    gens.append(tuple(row))
            self._generators = gens
        return self._generators

    def radical_power(self, k: int) -> Subspace:
        """rad^k, computed by iterated product spans (k >= 1)."""
        if self._radical_powers is None:
            self._radical_powers = {1: self.radical}
        powers = self._radical_powers
        top = max(powers)
        while top < k:
            prev = powers[top]
            ech = Echelon(self.field, self.dim)
            for r in self.radical.basis:
                lm = self.left_mult_matrix(r)
                for v in prev.basis:
                    ech.add(lm.mv(v))
            powers[top + 1] = ech.to_subspace()
            top += 1
        return powers[k]

    def loewy_length(self) -> int:
        """Smallest L with rad^L = 0."""
        k = 1
        while self.radical_power(k).dim > 0:
            k += 1
            if k > self.dim + 1:
                raise AlgebraError("designated radical is not nilpotent")
        return k

    # -- validation --------------------------------------------------------
    def validate(self):
        f = self.field
        n = self.dim
        if len(self.table) != n or any(len(row) != n for row in self.table):
            raise AlgebraError("structure constant table has wrong shape")
        # unit laws
        for i in range(n):
            b = self.basis_vector(i)
            if self.mult(self.unit, b) != b or self.mult(b, self.unit) != b:
                raise AlgebraError(f"unit law fails at basis element {self.labels[i]}")
        # associativity on all basis triples
        products = [[self.basis_product(i, j) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                pij = products[i][j]
                for l in range(n):
                    left = self.mult(pij, self.basis_vector(l))
                    right = self.mult(self.basis_vector(i), products[j][l])
                    if left != right:
                        raise AlgebraError(
                            f"associativity fails on ({self.labels[i]}, {self.labels[j]}, {self.labels[l]})")
        # orthogonal idempotents summing to the unit
        total = zero_vec(f, n)
        for a, e in enumerate(self.idempotents):
            total = tuple(f.add(x, y) for x, y in zip(total, e))
            for b, e2 in enumerate(self.idempotents):
                p = self.mult(e, e2)
                expected = e if a == b else zero_vec(f, n)
                if p != expected:
                    raise AlgebraError(f"idempotents {a}, {b} not orthogonal idempotents")
        if total != self.unit:
            raise AlgebraError("idempotents do not sum to the unit")
        # radical is a two-sided ideal
        for i in range(n):
            b = self.basis_vector(i)
            for r in self.radical.basis:
                if not self.radical.contains(self.mult(b, r)):
                    raise AlgebraError("radical not closed under left multiplication")
                if not self.radical.contains(self.mult(r, b)):
                    raise AlgebraError("radical not closed under right multiplication")
        # nilpotency
        self.loewy_length()
        # elementary semisimple quotient: images of e_i form a basis of A/rad
        if self.radical.dim + len(self.idempotents) != n:
            raise AlgebraError("A/rad dimension differs from the number of idempotents")
        ech = Echelon(f, n)
        ech.extend(self.radical.basis)
        for e in self.idempotents:
            if not ech.add(e):
                raise AlgebraError("idempotent images not independent in A/rad")
        return self

    # -- opposite ----------------------------------------------------------
    def opposite(self) -> "Algebra":
        """Same space, reversed product; an involution (op of op is self)."""
        if self._opposite is None:
            n = self.dim
            table = [[self.table[j][i] for j in range(n)] for i in range(n)]
            op = Algebra(self.field, self.labels, table, self.unit,
                         self.idempotents, self.radical,
                         name=f"{self.name}^op", validate=False)
            op._opposite = self
            self._opposite = op
        return self._opposite


@dataclass(frozen=True)
class AlgebraMorphism:
    """Unital algebra homomorphism given by its matrix on basis vectors."""

    source: Algebra
    target: Algebra
    matrix: Matrix  # target.dim x source.dim

    def apply(self, x) -> tuple:
        return self.matrix.mv(x)

    def check(self) -> "AlgebraMorphism":
        if self.apply(self.source.unit) != self.target.unit:
            raise AlgebraError("morphism does not preserve the unit")
        n = self.source.dim
        for i in range(n):
            bi = self.source.basis_vector(i)
            fi = self.apply(bi)
            for j in range(n):
                bj = self.source.basis_vector(j)
                lhs = self.apply(self.source.mult(bi, bj))
                rhs = self.target.mult(fi, self.apply(bj))
                if lhs != rhs:
                    raise AlgebraError(
                        f"morphism not multiplicative on ({self.source.labels[i]}, {self.source.labels[j]})")
        return self

    @staticmethod
    def identity(a: Algebra) -> "AlgebraMorphism":
        return AlgebraMorphism(a, a, Matrix.identity(a.field, a.dim))


@dataclass(frozen=True)
class Ideal:
    """Two-sided ideal as a subspace closed under outer multiplication."""

    algebra: Algebra
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    def check(self) -> "Ideal":
        a = self.algebra
        for i in range(a.dim):
            b = a.basis_vector(i)
            for v in self.space.basis:
                if not self.space.contains(a.mult(b, v)):
                    raise AlgebraError("subspace not closed under left multiplication")
                if not self.space.contains(a.mult(v, b)):
                    raise AlgebraError("subspace not closed under right multiplication")
        return self

    def contains_unit(self) -> bool:
        return self.space.contains(self.algebra.unit)


def ideal_generated(a: Algebra, gens) -> Ideal:
    """Smallest two-sided ideal containing gens (closure to a fixed point).

    Closing under the algebra generators on both sides suffices, since any
    basis element is a sum of products of generators.
    """
    ech = Echelon(a.field, a.dim)
    work = []
    for g in gens:
        g = tuple(g)
        if ech.add(g):
            work.append(g)
    outer = a.generators()
    while work:
        x = work.pop()
        for g in outer:
            for p in (a.mult(g, x), a.mult(x, g)):
                if ech.add(p):
                    work.append(p)
    return Ideal(a, ech.to_subspace())


def vertex_ideal(a: Algebra, idempotent_indices) -> Ideal:
    """The ideal A e A for e the sum of the chosen designated idempotents."""
    f = a.field
    e = zero_vec(f, a.dim)
    for i in idempotent_indices:
        e = tuple(f.add(x, y) for x, y in zip(e, a.idempotents[i]))
    return ideal_generated(a, [e])


def quotient_algebra(a: Algebra, ideal: Ideal):
    """A/I on the canonical coset representatives (non-pivot directions).

    Returns (quotient, projection morphism).  Idempotents of A that fall
    into I are dropped; the radical is the image of rad(A) + I.
    """
    if ideal.algebra is not a:
        raise AlgebraError("ideal does not belong to this algebra")
    space = ideal.space
    if space.contains(a.unit):
        raise AlgebraError("quotient by an ideal containing the unit")
    f = a.field
    pivset = set(space.pivots)
    survivors = [j for j in range(a.dim) if j not in pivset]
    pos = {j: t for t, j in enumerate(survivors)}

    def project(vec) -> tuple:
        red = space.reduce(vec)
        return tuple(red[j] for j in survivors)

    n = len(survivors)
    table = []
    for i in survivors:
        row = []
        for j in survivors:
            p = project(a.basis_product(i, j))
            row.append({k: c for k, c in enumerate(p) if c != 0})
        table.append(row)
    labels = [a.labels[j] for j in survivors]
    unit = project(a.unit)
    idems = []
    for e in a.idempotents:
        if space.contains(e):
            continue
        idems.append(project(e))
    rad_ech = Echelon(f, n)
    for r in a.radical.basis:
        rad_ech.add(project(r))
    quot = Algebra(f, labels, table, unit, idems, rad_ech.to_subspace(),
                   name=f"{a.name}/I")
    proj = AlgebraMorphism(a, quot, Matrix(f, [[f.of(project(a.basis_vector(j))[t])
                                                for j in range(a.dim)]
                                               for t in range(n)], a.dim))
    return quot, proj


@dataclass(frozen=True)
class CornerInclusion:
    """Embedding data of a corner fAf: basis rows in A-coordinates."""

    corner: Algebra
    ambient: Algebra
    f_vector: tuple
    basis_in_ambient: Matrix  # corner.dim x ambient.dim

    def embed(self, x) -> tuple:
        return self.basis_in_ambient.transpose().mv(x)


def corner_algebra(a: Algebra, idempotent_indices) -> CornerInclusion:
    """The corner f A f for f a sum of a subset of designated idempotents."""
    idxs = list(idempotent_indices)
    if len(set(idxs)) != len(idxs) or not all(0 <= i < len(a.idempotents) for i in idxs):
        raise AlgebraError("corner requires a subset of the designated idempotents")
    f = a.field
    fvec = zero_vec(f, a.dim)
    for i in idxs:
        fvec = tuple(f.add(x, y) for x, y in zip(fvec, a.idempotents[i]))
    lm = a.left_mult_matrix(fvec)
    rm = a.right_mult_matrix(fvec)
    ech = Echelon(f, a.dim)
    for j in range(a.dim):
        ech.add(rm.mv(lm.col(j)))  # f * b_j * f
    space = ech.to_subspace()
    basis = space.basis_matrix()
    n = space.dim

    def coords(vec) -> tuple:
        c = space.coords(vec)
        assert c is not None, "corner not closed"
        return c

    table = []
    for i in range(n):
        bi = basis.row(i)
        row = []
        for j in range(n):
            p = coords(a.mult(bi, basis.row(j)))
            row.append({k: c for k, c in enumerate(p) if c != 0})
        table.append(row)
    labels = []
    for i in range(n):
        r = basis.row(i)
        nz = [j for j, c in enumerate(r) if c != 0]
        labels.append(a.labels[nz[0]] if len(nz) == 1 and r[nz[0]] == f.one
                      else f"c{i}")
    rad_ech = Echelon(f, n)
    for r in a.radical.basis:
        v = rm.mv(lm.mv(r))
        c = space.coords(v)
        assert c is not None
        rad_ech.add(c)
    idems = [coords(a.idempotents[i]) for i in idxs]
    cor = Algebra(f, labels, table, coords(fvec), idems, rad_ech.to_subspace(),
                  name=f"corner({a.name})")
    return CornerInclusion(cor, a, fvec, basis)


def product_subspace(a: Algebra, left: Subspace, right: Subspace) -> Subspace:
    """span{x*y : x in left, y in right} inside A."""
    ech = Echelon(a.field, a.dim)
    for x in left.basis:
        lm = a.left_mult_matrix(x)
        for y in right.basis:
            ech.add(lm.mv(y))
    return ech.to_subspace()


def algebras_equal(a: Algebra, b: Algebra) -> bool:
    """Structural identity: same field, labels, table, unit, idempotents."""
    return (a.field == b.field and a.labels == b.labels
            and a.unit == b.unit and a.idempotents == b.idempotents
            and all(a.table[i][j] == b.table[i][j]
                    for i in range(a.dim) for j in range(a.dim)))
