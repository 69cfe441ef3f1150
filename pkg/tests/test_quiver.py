"""Presentation parsing, algebra construction, oracles, presentation checks."""

import pytest

from singequiv.algebra import AlgebraError, quotient_algebra, vertex_ideal
from singequiv.fields import GF, QQ
from singequiv.fixtures import DUAL, E31, build_fixture, e33_text, fixture_presentation
from singequiv.quiver import (PresentationError, build_algebra,
                              count_monomial_survivors, enumerate_paths,
                              parse_presentation, quotient_presentation_check)


# -- parsing -------------------------------------------------------------------

def test_parse_dual():
    p = parse_presentation(DUAL)
    assert len(p.quiver.vertices) == 1
    assert len(p.relations) == 1
    assert p.nilpotency == 2
    assert p.field == QQ


def test_parse_e31_has_ten_relations():
    p = parse_presentation(E31)
    assert len(p.relations) == 10


def test_parse_rejects_non_parallel():
    text = """\
field Q
vertices 1, 2
arrow a: 1 -> 2
arrow b: 2 -> 1
relation a b - b a
nilpotency 3
"""
    with pytest.raises(PresentationError, match="non-parallel"):
        parse_presentation(text)


def test_parse_rejects_non_composable_and_reports_both_conventions():
    text = """\
field Q
vertices 1, 2, 3
arrow a: 1 -> 2
arrow b: 2 -> 3
relation a b
nilpotency 3
"""
    # "a b" in function order means b then a: needs target(b) = source(a): fails;
    # in diagram order it would compose.
    with pytest.raises(PresentationError, match="diagram order: True"):
        parse_presentation(text)


def test_parse_diagram_convention():
    text = """\
field Q
composition diagram
vertices 1, 2, 3
arrow a: 1 -> 2
arrow b: 2 -> 3
relation a b
nilpotency 3
"""
    p = parse_presentation(text)
    assert p.relations[0][0][1].arrows == (0, 1)


def test_parse_prime_field():
    p = parse_presentation(DUAL.replace("field Q", "field F 2"))
    assert p.field == GF(2)


def test_parse_coefficients():
    text = """\
field Q
vertices v
arrow x: v -> v
arrow y: v -> v
relation 2 x y - 3 y x
nilpotency 3
"""
    p = parse_presentation(text)
    (c1, p1), (c2, p2) = p.relations[0]
    assert c1 == 2 and c2 == -3


# -- building -------------------------------------------------------------------

def test_build_dual_dim(dual):
    assert dual.dim == 2 and dual.labels == ["e_v", "x"]


def test_build_a2(a2):
    assert a2.dim == 3


def test_build_e31_dim_and_basis(e31):
    # exhaustive path reduction oracle (hand-checked): 3 trivial + 5 arrows + 1 loop class
    assert e31.dim == 9
    assert "alpha*beta" in e31.labels and "gamma*delta" not in e31.labels


def test_build_e32_dim(e32):
    assert e32.dim == 11


def test_build_e33_dim(e33):
    # exhaustive path reduction: 6 trivial + 6 two-cycle arrows + 3 central
    # vertices x 6 nonzero central path lengths = 30; cross-checked by the
    # peel telescope 30 -> 26 -> 22 -> 18 in test_matrixext
    assert e33.dim == 30


def test_e33_requires_r_at_least_2():
    with pytest.raises(ValueError):
        e33_text(1)


def longest_nonzero_central_path(gamma, max_len=12):
    """Oracle: multiply central arrows out from each vertex until zero."""
    zero = (QQ.zero,) * gamma.dim
    g = [gamma.element_by_label(f"g{i}") for i in (1, 2, 3)]
    best = 0
    for start in range(3):
        prod = gamma.element_by_label(f"e_{start + 1}")
        for ell in range(1, max_len + 1):
            prod = gamma.mult(g[(start + ell - 1) % 3], prod)
            if prod == zero:
                break
            best = max(best, ell)
    return best


def test_e33_longest_nonzero_central_path(e33):
    # central paths of length 3r = 6 survive, strictly longer ones vanish
    assert longest_nonzero_central_path(e33) == 6
    # the length-6 classes are identified with the a_i b_i loops: the
    # canonical representative is the shorter word a_i*b_i
    labels = set(e33.labels)
    assert "a1*b1" in labels and "a2*b2" in labels and "a3*b3" in labels


def test_monomial_oracle_agrees_on_monomial_fixtures():
    for fid in ("dual", "a2"):
        pres = fixture_presentation(fid)
        assert count_monomial_survivors(pres) == build_fixture(fid).dim


def test_monomial_oracle_on_radical_square_zero():
    text = """\
field Q
vertices *, 2
arrow x: * -> *
arrow delta: * -> 2
arrow gamma: 2 -> *
relation x x
relation delta x
relation x gamma
relation delta gamma
relation gamma delta
nilpotency 2
"""
    # nilpotency 2 makes every length-2 path zero; relations are then redundant
    pres = parse_presentation(text)
    assert count_monomial_survivors(pres) == build_algebra(pres).dim == 5


def test_build_dimension_independent_of_relation_order():
    lines = E31.splitlines()
    rels = [l for l in lines if l.startswith("relation")]
    other = [l for l in lines if not l.startswith("relation")]
    reordered = other[:-1] + list(reversed(rels)) + [other[-1]]
    a = build_algebra(parse_presentation("\n".join(reordered)))
    assert a.dim == 9


def test_nilpotency_not_certified():
    text = """\
field Q
vertices v
arrow x: v -> v
relation x x x
nilpotency 2
"""
    # J^2 is not inside (x^3): the bound must be rejected
    with pytest.raises(AlgebraError, match="bound not certified"):
        build_algebra(parse_presentation(text))


def test_build_over_f2(e31):
    a = build_algebra(parse_presentation(E31.replace("field Q", "field F 2")))
    assert a.dim == e31.dim
    assert a.field == GF(2)


def test_enumerate_paths_sorted():
    pres = fixture_presentation("e31")
    paths = enumerate_paths(pres.quiver, 2)
    lens = [len(p) for p in paths]
    assert lens == sorted(lens)


# -- quotient presentation check -------------------------------------------------

GAMMA_PRIME_PRESENTATION = """\
# radical-square-zero algebra on the quiver of e31 minus vertex 1
field Q
vertices *, 2
arrow x: * -> *
arrow delta: * -> 2
arrow gamma: 2 -> *
relation x x
relation x gamma
relation delta x
relation gamma delta
relation delta gamma
nilpotency 2
"""

ONE_VERTEX_SQUARE_ZERO = """\
# k<x1,x2>/(x1,x2)^2 as a one-vertex presentation
field Q
vertices *
arrow x1: * -> *
arrow x2: * -> *
relation x1 x1
relation x2 x2
relation x1 x2
relation x2 x1
nilpotency 2
"""


def test_presentation_check_gamma_prime(e31):
    quot, _ = quotient_algebra(e31, vertex_ideal(e31, [0]))
    pres = parse_presentation(GAMMA_PRIME_PRESENTATION)
    gmap = {lab: quot.element_by_label(f"e_{lab}") for lab in ("*", "2")}
    for arrow in ("x", "delta", "gamma"):
        gmap[arrow] = quot.element_by_label(arrow)
    assert quotient_presentation_check(quot, pres, gmap)


def test_presentation_check_rejects_wrong_map(e31):
    quot, _ = quotient_algebra(e31, vertex_ideal(e31, [0]))
    pres = parse_presentation(GAMMA_PRIME_PRESENTATION)
    gmap = {lab: quot.element_by_label(f"e_{lab}") for lab in ("*", "2")}
    # swap delta and gamma: endpoints no longer match, relations break
    gmap["x"] = quot.element_by_label("x")
    gmap["delta"] = quot.element_by_label("gamma")
    gmap["gamma"] = quot.element_by_label("delta")
    report = quotient_presentation_check(quot, pres, gmap)
    assert not report.passed
    assert report.failures


def test_presentation_check_catches_non_spanning(dual):
    pres = parse_presentation(ONE_VERTEX_SQUARE_ZERO)
    gmap = {"*": dual.element_by_label("e_v"),
            "x1": dual.element_by_label("x"),
            "x2": dual.element_by_label("x")}
    report = quotient_presentation_check(dual, pres, gmap)
    assert not report.passed
    assert any("spanning" in f for f in report.failures)
