from fractions import Fraction

import pytest

import coxgrowth as cg


def test_a2_growth_polynomial():
    m = cg.CoxeterMatrix.parse("rank 2\nm 1 2 3")
    w = cg.growth_series(m)
    assert w.numerator == [1, 2, 2, 1]
    assert w.denominator == [1]
    assert str(w) == "(1 + 2*t + 2*t^2 + t^3) / (1)"


def test_infinite_dihedral_series_and_identities():
    m = cg.CoxeterMatrix.from_catalog("inf-dihedral")
    assert m.order(0, 1) is None
    w = cg.growth_series(m)
    assert w == cg.RationalFunction([1, 1], [1, -1])
    assert w.series(5) == [1, 2, 2, 2, 2, 2]
    assert cg.verify_identity(m, 1)["verdict"] == "holds"
    assert cg.verify_identity(m, 2)["verdict"] == "not-applicable"
    for which in (3, 4):
        report = cg.verify_identity(m, which)
        assert report["verdict"] == "holds"
        assert report["lhs"] == report["rhs"]


def test_series_matches_bfs_on_catalog():
    for name in cg.catalog_names():
        m = cg.CoxeterMatrix.from_catalog(name)
        sizes = cg.sphere_sizes(m, 7)
        sizes += [0] * (8 - len(sizes))
        assert cg.growth_series(m).series(7) == sizes, name


def test_rational_function_arithmetic():
    a = cg.RationalFunction([1], [1, 1])
    assert a + a == cg.RationalFunction([2], [1, 1])
    assert cg.RationalFunction([1]) - cg.RationalFunction([2], [1, 1]) == cg.RationalFunction([-1, 1], [1, 1])
    big = cg.RationalFunction([1], [1, -(10**30)])
    assert big.series(2) == [1, 10**30, 10**60]
    with pytest.raises(ValueError):
        a / cg.RationalFunction([0])


def test_classify_and_chi():
    m = cg.CoxeterMatrix.from_catalog("tilde-A2")
    assert cg.classify(m) == {"finite": False, "type": "infinite"}
    sub = cg.classify(m, [0, 1])
    assert sub["type"] == "A2" and sub["order"] == 6 and sub["longest_length"] == 3
    d = cg.CoxeterMatrix.from_catalog("inf-dihedral")
    assert cg.chi_coefficient(d, []) == -1
    assert cg.chi_coefficient(d, [0]) == -1


def test_census():
    assert cg.chi_t(cg.CoxeterMatrix.from_catalog("tilde-A2"), "davis", 6) == [1, 0, 0, 0, 0, 0, 0]
    assert cg.chi_t(cg.CoxeterMatrix.from_catalog("A2"), "coxeter", 3) == [1, 0, 0, -1]
    assert cg.chi_t(cg.CoxeterMatrix.from_catalog("inf-dihedral"), "tits", 4) == [-1, 0, 0, 0, 0]
    with pytest.raises(ValueError):
        cg.chi_t(cg.CoxeterMatrix.from_catalog("A2"), "davis", 3)


def test_parse_errors_are_value_errors():
    with pytest.raises(cg.ParseError):
        cg.CoxeterMatrix.parse("rank 2\nm 1 3 3")
    assert issubclass(cg.ParseError, ValueError)


def test_run_cli_in_process():
    code, out, err = cg.run_cli(["growth", "A2"])
    assert code == 0
    assert "W(t) = (1 + 2*t + 2*t^2 + t^3) / (1)" in out
    code, _, err = cg.run_cli(["growth"])
    assert code == 2
