from fractions import Fraction

import pytest

import kleinrr


def test_d4_example():
    t = kleinrr.CharacterTable("D4")
    assert t.order == 8
    assert t.dims == [1, 1, 1, 1, 2]
    rr = t.rr_coefficients()
    assert rr["rho_0"] == Fraction(13, 32)
    assert list(rr.values()) == [Fraction(13, 32)] + [Fraction(-3, 32)] * 3 + [Fraction(-1, 16)]
    assert t.delta([2, 0, 0, 0, -1]) == Fraction(7, 8)
    assert t.skyscraper_class("rho_0") == [2, 0, 0, 0, -1]
    assert t.skyscraper_class(4) == [-1, -1, -1, -1, 2]
    assert t.ct19_delta_O() == Fraction(13, 32)


def test_exceptional_tables():
    e6 = kleinrr.rr_coefficients("E6")
    assert list(e6.values()) == [Fraction(*p) for p in
                                 [(167, 288), (29, 144), (-3, 32), (-19, 144), (-25, 288), (-19, 144), (-25, 288)]]
    e7 = kleinrr.CharacterTable("E7")
    assert e7.rr_coefficients()["rho_2''"] == Fraction(-25, 288)
    assert e7.element_sum_coefficients() == e7.rr_coefficients()
    e8 = kleinrr.CharacterTable("E8")
    assert e8.centralizer_orders[:2] == [120, 120]
    assert sum(d * d for d in e8.dims) == 120
    assert "μ⁺" in str(e8)


def test_decompose_and_mckay():
    t = kleinrr.CharacterTable("D4")
    v = t.values()[4]
    square = [str(int(x) ** 2) for x in v]
    assert t.decompose(square) == [1, 1, 1, 1, 0]
    graph = t.mckay_graph()
    assert [row[4] for row in graph[:4]] == [1, 1, 1, 1]


def test_closed_forms():
    assert kleinrr.closed_form_A(6, 2) == Fraction(-13, 72)
    assert kleinrr.closed_form_D(3, "psi_2") == Fraction(-13, 72)
    assert kleinrr.closed_form_D(3, "psi_2", printed=True) == Fraction(-19, 72)


def test_verify_reports():
    report = kleinrr.verify("E7")
    assert report["summary"]["mismatch"] == 0
    assert report["summary"]["paper-erratum"] == 1
    sweep = kleinrr.verify(max_a=4, max_d=3)
    assert sweep["summary"]["paper-erratum"] == 3


def test_errors():
    with pytest.raises(kleinrr.InputError):
        kleinrr.CharacterTable("F4")
    with pytest.raises(ValueError):
        kleinrr.CharacterTable("D4").delta([1, 2])
    with pytest.raises(kleinrr.KleinrrError):
        kleinrr.closed_form_A(3, 5)


def test_json_record():
    d = kleinrr.CharacterTable("A2").to_dict()
    assert d["order"] == 3
    assert [c["centralizer_order"] for c in d["classes"]] == [3, 3, 3]
