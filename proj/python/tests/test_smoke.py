from fractions import Fraction

import pytest

import regula


def test_group_orders():
    assert regula.group("A(5)").order == 60
    assert regula.group("M12.2").order == 190080
    g = regula.group("GLQ(l=1,q=3)")
    assert (g.order, g.degree) == (72, 9)
    assert regula.group("S(4)").contains("(1,2)")
    assert not regula.group("A(4)").contains("(1,2)")


def test_class_counts():
    assert regula.class_counts(regula.group("A(5)"), 2)["k_regular"] == 4
    assert regula.class_counts(regula.group("PSL2(7)"), 7)["k_singular"] == 2
    assert regula.class_counts(regula.group("M11"), 2)["k_regular"] == 5
    s5, a5 = regula.group("S(5)"), regula.group("A(5)")
    assert regula.fused_counts(s5, a5, 2)["k_regular"] == 3


def test_class_table():
    t = regula.conjugacy_classes("A( 5 )")
    assert t["group"] == "A(5)"
    assert t["class_count"] == 5
    assert sorted(c["size"] for c in t["classes"]) == [1, 12, 12, 15, 20]
    assert sum(c["size"] for c in t["classes"]) == t["order"]


def test_cores():
    s4 = regula.group("S(4)")
    assert regula.core(s4, "p", 2).order == 4
    assert regula.fitting(s4).order == 4
    assert regula.core(regula.group("S(5)"), "solvable").order == 1
    assert regula.derived_length(s4) == 3
    assert regula.quotient(s4, regula.core(s4, "p", 2)).order == 6


def test_numbers():
    assert regula.landau_quantity(2, 24, 3) == Fraction(1864135, 72)
    assert regula.zsigmondy_primes(2, 6) == []
    assert regula.zsigmondy_primes(2, 4) == [5]
    assert regula.prime_family("fermat", 10**5) == [3, 5, 17, 257, 65537]
    assert {16, 97}.issubset(regula.psl2_candidate_scan(10**5))
    assert regula.coxeter_number("E8", 8) == 30


def test_bounds():
    assert regula.bound("regular_classes", "linear_unitary", 2, 7) == pytest.approx(7 / 48)
    assert regula.bound("singular_proportion", "linear_unitary", 2, 7, p=7) == pytest.approx(2 / 35)


def test_errors():
    with pytest.raises(regula.ParseError):
        regula.group("A(5")
    with pytest.raises(regula.UnknownName):
        regula.group("Frobnitz")
    with pytest.raises(regula.RegulaError):
        regula.class_counts(regula.group("A(5)"), 4)


def test_suite():
    report, ok = regula.run_suite("numtheory")
    assert ok
    assert report["summary"]["fail"] == 0
    assert report["summary"]["total"] == len(report["checks"])
    assert "theorem-b" in regula.suite_names()


def test_names_and_generators():
    names = regula.known_group_names()
    assert "M11" in names
    g = regula.from_cycles(["(1,2,3,4,5)", "(1,2,3)"], 5)
    assert g.order == 60
    assert regula.canonical("x( S(3) , C(2) )") == "x(S(3),C(2))"
