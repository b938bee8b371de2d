"""Smoke tests for the python bindings."""

import pytest

import cremona

F = "(t^2-1)*(t^2-4)*(t^2-9)"


def test_parse_poly_round_trip():
    s = cremona.parse_poly("(t^2-1)*(t+2)")
    assert s == cremona.parse_poly(s)
    with pytest.raises(ValueError):
        cremona.parse_poly("x^2")
    with pytest.raises(ValueError):
        cremona.parse_poly("1.5*t")


def test_validate():
    good = cremona.validate(A="1", B="0", C="1", H="-(t^2-1)")
    assert good["valid"] is True
    assert good["normal_form"]["valid"] is True

    bad = cremona.validate(A="1", B="0", C="t^2-1", H="-(t^2)+1")
    assert bad["valid"] is False
    names = {c["name"]: c["pass"] for c in bad["report"]["checks"]}
    assert names["delta_squarefree"] is False


def test_invariants_and_oracle():
    inv = cremona.invariants(A="1", B="0", C=F, H="-(t-7/2)*(t-15/4)",
                             samples=150, seed=3)
    assert inv["fixed_curve"]["genus"] == 2
    assert inv["fixed_curve"]["real_components"] == 3
    assert inv["classification"]["label"] == "Iskovskikh(d=2, g=2)"
    assert inv["oracle"]["agreed"] == inv["oracle"]["tested"]


def test_classify():
    dj = cremona.classify(A="1", B="0", C="-1", H="t^2-2")
    assert dj["kind"] == "de_jonquieres"
    isk = cremona.classify(A="1", B="0", C="1", H="-(t^2-1)")
    assert isk["kind"] == "iskovskikh"
    assert isk["twist"] == 2


def test_compare():
    m = {"A": "1", "B": "0", "C": F, "H": "-(t-7/2)*(t-15/4)"}
    m2 = {"A": "2", "B": "0", "C": f"2*{F}", "H": "-2*(t-7/2)*(t-15/4)"}
    d = cremona.compare(m, m2)
    assert d["verdict"] == "equivalent"
    assert d["witnesses"] == {"lambda": "4", "mu": "2"}

    other = {"A": "1", "B": "0", "C": F, "H": "-(t-13/4)*(t-18/5)"}
    nd = cremona.compare(m, other)
    assert nd["verdict"] == "not_equivalent"
    assert nd["failed_condition"] == "sign_condition"


def test_compare_up_to_mobius():
    m = {"A": "1", "B": "0", "C": F, "H": "-(t-7/2)*(t-5)"}
    shifted = {
        "A": "1",
        "B": "0",
        "C": cremona.parse_poly("((t+1)^2-1)*((t+1)^2-4)*((t+1)^2-9)"),
        "H": cremona.parse_poly("-(t+1-7/2)*(t+1-5)"),
    }
    fixed = cremona.compare(m, shifted)
    assert fixed["verdict"] == "not_equivalent"
    ext = cremona.compare(m, shifted, up_to_mobius=True)
    assert ext["verdict"] == "equivalent"
    assert ext["extended"] is True


def test_family_demo():
    rep = cremona.family_demo(F, [("31/10", "32/10"), ("31/10", "33/10")])
    assert rep["valid_count"] == 2
    assert rep["not_equivalent_count"] == 1
    assert rep["all_distinct_rootsets_nonequivalent"] is True
    assert rep["shared_fixed_curve"]["genus"] == 2


def test_dejonquieres():
    dj = cremona.dejonquieres("t^4-5*t^2+4")
    assert dj["valid"] is True
    assert dj["d"] == 2
    assert dj["fixed_curve"]["flag"] == "elliptic"
    assert dj["fixed_curve"]["real_components"] == 2


def test_cremona_playground():
    assert cremona.cremona_apply("1,2,3")["image"] == "[6:3:2]"
    assert cremona.cremona_apply("1,0,0")["base_point"] is True
    assert cremona.cremona_base_points()["base_points"] == [
        "[1:0:0]",
        "[0:1:0]",
        "[0:0:1]",
    ]
    check = cremona.cremona_self_check(samples=60, seed=5)
    assert check["involution_on_samples"] is True
    assert check["square_reduces_to_identity"] is True
