from pathlib import Path

import dp4aut

FIXTURES = str(Path(__file__).resolve().parents[2] / "fixtures")


def test_enumeration_counts():
    for basis in ("quadric", "plane"):
        assert len(dp4aut.enumerate_minus_one(basis)) == 16
        assert len(dp4aut.enumerate_conic_classes(basis)) == 10
        assert len(dp4aut.exceptional_pairs(basis)) == 5


def test_weyl_order():
    assert dp4aut.weyl_order() == 1920


def test_bounds():
    assert dp4aut.kernel_bound("q31-21")["order"] == 4
    assert dp4aut.kernel_bound("q22-40")["order"] == 16
    assert dp4aut.image_bound("q22-40")["name"] == "Sym5"
    assert dp4aut.image_bound("q31-02")["name"] == "Klein4"


def test_sigma_pair_action():
    act = dp4aut.sigma_pair_action("q31-02")
    assert act["perm"] == "(45)"
    assert act["swaps"] == "01100"


def test_predicates():
    assert dp4aut.predicate("unit_norm", ["3/5+4/5*w"], -1)
    assert not dp4aut.predicate("unit_norm", ["2+1*w"], -1)
    assert dp4aut.predicate("golden", ["1/2-1/2*w", "3/2-1/2*w"], 5)


def test_classify():
    res = dp4aut.classify("q22-02", -1, {"k1": "1/2", "k2": "4/5"})
    assert res["ok"]
    assert res["Aprime"]["name"] == "Z2"
    assert res["Aprime"]["generators"] == ["(12)(45)"]
    assert res["A0"]["order"] == 16
    golden = dp4aut.classify(
        "q22-40", 5, {"mu1": "1/2-1/2*w", "mu2": "3/2-1/2*w"}, mode="conditions"
    )
    assert golden["Aprime"]["name"] == "D5"
    assert golden["Aprime"]["order"] == 10


def test_quadric_model():
    model = dp4aut.quadric_model("2+1*w")
    assert model["degree"] == 4
    assert model["squarefree"]


def test_verify_paper_case():
    report = dp4aut.verify_paper(FIXTURES, 3)
    assert report["failed"] == 0
    assert report["passed"] > 0
