"""Smoke tests for the Python bindings; the heavy lifting is covered by the
C++ suites."""

import pytest

import legdga


@pytest.fixture(scope="module")
def knot():
    return legdga.parse_dga(legdga.k62_text())


def test_axioms(knot):
    report = legdga.check_axioms(knot)
    assert report.ok()
    assert report.degree_ok and report.d_squared_zero
    assert knot.metadata.thurston_bennequin == -7
    assert knot.display_name == "K6_2"


def test_polynomial_arithmetic():
    alg = legdga.Algebra([("al", -1), ("be", 1)])
    rel = alg.poly("1 + be al")
    assert str(rel + rel) == "0"
    assert str(rel * rel) == "1 + be al be al"
    assert rel.homogeneity() == ("homogeneous", 0)
    assert str(alg.poly("be al").reversed()) == "al be"
    with pytest.raises(legdga.ParseError):
        alg.poly("nope")


def test_differential_and_mirror(knot):
    alg = knot.algebra
    assert str(knot.d(alg.poly("a1"))) == "1 + a10 a5 a3"
    mirrored = legdga.mirror(knot)
    assert str(mirrored.differential("a1")) == "1 + a3 a5 a10"
    assert legdga.mirror(mirrored) == knot


def test_witness(knot):
    alg = knot.algebra
    w = legdga.Witness(alg.poly("a10"), alg.poly("a5 a3"), alg.poly("a1"), 1, -1)
    assert legdga.verify_witness(knot, w).valid
    found = legdga.search_witness(knot, 1, -1, 2)
    assert found is not None
    assert str(found.x) == "a10" and str(found.y) == "a11" and str(found.z) == "a9"


def test_normal_form():
    rules = legdga.parse_rules(legdga.unknot_rules_text())
    p = rules.algebra.poly("b a b a")
    assert str(rules.normal_form(p)) == "1"


def test_distinguish(knot):
    mirrored = legdga.mirror(knot)
    recipe = legdga.k62_projection(knot.algebra)
    report = legdga.distinguish(knot, mirrored, 1, -1, recipe, 9)
    assert report.verdict == "nonisomorphic"
    assert report.refutation.status == "refuted (structural)"
    assert "nonisomorphic graded homology algebras" in report.certificate()
