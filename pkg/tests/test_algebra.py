"""Structure-constant algebras: multiplication, corners, quotients, ideals."""

import pytest

from singequiv.algebra import (Algebra, AlgebraError, algebras_equal, corner_algebra,
                               ideal_generated, quotient_algebra, vertex_ideal)
from singequiv.fields import QQ
from singequiv.linalg import Subspace


def hand_dual():
    """k[x]/(x^2) from an explicit table, independent of the quiver builder."""
    table = [
        [{0: QQ.one}, {1: QQ.one}],   # e*e = e, e*x = x
        [{1: QQ.one}, {}],            # x*e = x, x*x = 0
    ]
    rad = Subspace(QQ, 2, [(0, 1)])
    return Algebra(QQ, ["e", "x"], table, (1, 0), [(1, 0)], rad, name="k[x]/x^2")


def test_hand_built_dual_matches_quiver_build(dual):
    h = hand_dual()
    assert h.dim == dual.dim
    assert all(h.table[i][j] == dual.table[i][j] for i in range(2) for j in range(2))


def test_multiply_e31(e31):
    alpha = e31.element_by_label("alpha")
    e1 = e31.element_by_label("e_1")
    beta = e31.element_by_label("beta")
    omega = e31.element_by_label("alpha*beta")
    # idempotent unit law at a vertex: alpha . e_1 = alpha
    assert e31.mult(alpha, e1) == alpha
    # path reduction: alpha . beta is the nonzero loop class (= gamma delta)
    assert e31.mult(alpha, beta) == omega
    gamma = e31.element_by_label("gamma")
    delta = e31.element_by_label("delta")
    assert e31.mult(gamma, delta) == omega
    # non-composable product vanishes
    assert e31.mult(beta, beta) == (QQ.zero,) * 9


def test_mult_dimension_mismatch(e31):
    with pytest.raises(AlgebraError):
        e31.mult((1, 0), (0, 1))


def test_validate_rejects_broken_associativity():
    table = [
        [{0: QQ.one}, {1: QQ.one}],
        [{1: QQ.one}, {0: QQ.one}],  # x*x = e makes the radical designation wrong
    ]
    rad = Subspace(QQ, 2, [(0, 1)])
    with pytest.raises(AlgebraError):
        Algebra(QQ, ["e", "x"], table, (1, 0), [(1, 0)], rad)


# -- opposite ----------------------------------------------------------------

def test_opposite_commutative_is_identical(dual):
    op = dual.opposite()
    assert all(op.table[i][j] == dual.table[i][j] for i in range(2) for j in range(2))


def test_opposite_reverses_a2(a2):
    op = a2.opposite()
    e1, e2, a = (a2.element_by_label(l) for l in ("e_1", "e_2", "a"))
    # in A2, a = a*e_1 (arrow out of 1); in the opposite it is e_1*a
    assert a2.mult(a, e1) == a and a2.mult(e1, a) == (QQ.zero,) * 3
    assert op.mult(e1, a) == a and op.mult(a, e1) == (QQ.zero,) * 3


def test_opposite_is_involution(e31):
    assert e31.opposite().opposite() is e31


# -- corners ------------------------------------------------------------------

def test_corner_full_is_identity(e31):
    cor = corner_algebra(e31, [0, 1, 2]).corner
    assert cor.dim == e31.dim
    assert all(cor.table[i][j] == e31.table[i][j]
               for i in range(cor.dim) for j in range(cor.dim))


def test_corner_e31_without_vertex_1(e31):
    # path enumeration oracle: paths avoiding vertex 1 are
    # {e_*, e_2, x, gamma, delta, gamma*delta = alpha*beta}
    cor = corner_algebra(e31, [1, 2]).corner
    assert cor.dim == 6
    assert set(cor.labels) == {"e_*", "e_2", "x", "gamma", "delta", "alpha*beta"}


def test_corner_a2_at_sink(a2):
    cor = corner_algebra(a2, [1]).corner
    assert cor.dim == 1 and cor.labels == ["e_2"]


def test_corner_rejects_non_idempotent_subset(a2):
    with pytest.raises(AlgebraError):
        corner_algebra(a2, [0, 0])


# -- generated ideals ----------------------------------------------------------

def test_ideal_generated_by_unit_is_everything(e31):
    ide = ideal_generated(e31, [e31.unit])
    assert ide.dim == e31.dim


def test_ideal_generated_by_nothing_is_zero(e31):
    assert ideal_generated(e31, []).dim == 0


def test_ideal_of_vertex_1_in_e31(e31):
    # closure by hand: e_1, alpha = alpha*e_1, beta = e_1*beta, alpha*beta
    ide = vertex_ideal(e31, [0])
    assert ide.dim == 4
    for lab in ("e_1", "alpha", "beta", "alpha*beta"):
        assert ide.space.contains(e31.element_by_label(lab))
    ide.check()


# -- quotients ------------------------------------------------------------------

def test_quotient_by_zero_is_identity(e31):
    from singequiv.linalg import Subspace
    from singequiv.algebra import Ideal
    zero = Ideal(e31, Subspace.zero(QQ, e31.dim))
    quot, proj = quotient_algebra(e31, zero)
    assert quot.dim == e31.dim
    assert algebras_equal(quot, e31) or all(
        quot.table[i][j] == e31.table[i][j] for i in range(9) for j in range(9))
    assert proj.matrix.mv(e31.unit) == quot.unit


def test_quotient_a2_by_sink_ideal(a2):
    quot, proj = quotient_algebra(a2, vertex_ideal(a2, [1]))
    assert quot.dim == 1 and quot.labels == ["e_1"]
    proj.check()


def test_quotient_e31_by_vertex_1_is_gamma_prime(e31):
    quot, proj = quotient_algebra(e31, vertex_ideal(e31, [0]))
    assert quot.dim == 5
    assert set(quot.labels) == {"e_*", "e_2", "x", "delta", "gamma"}
    # radical square zero
    rad2 = quot.radical_power(2)
    assert rad2.dim == 0
    proj.check()


def test_quotient_rejects_unit(e31):
    with pytest.raises(AlgebraError):
        quotient_algebra(e31, ideal_generated(e31, [e31.unit]))


def test_quotient_dimension_formula(e31):
    ide = vertex_ideal(e31, [0])
    quot, _ = quotient_algebra(e31, ide)
    assert quot.dim == e31.dim - ide.dim


def test_ideal_generated_monotone_idempotent(e31):
    gens = [e31.element_by_label("x")]
    i1 = ideal_generated(e31, gens)
    i2 = ideal_generated(e31, list(i1.space.basis))
    assert i1.space == i2.space
    bigger = ideal_generated(e31, gens + [e31.element_by_label("e_2")])
    assert bigger.space.contains_subspace(i1.space)
