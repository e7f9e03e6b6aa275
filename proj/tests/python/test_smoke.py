import pytest

import tits


def test_cartan_convention():
    assert tits.alpha_in_omega("G2", 2) == [-3, 2]
    assert tits.cartan_matrix("A2") == [[2, -1], [-1, 2]]
    assert tits.cocenter_factors("D6") == [2, 2]


def test_admissibility_and_labels():
    assert tits.is_admissible("E7", [1, 6, 7])
    assert not tits.is_admissible("E7", [2])
    assert tits.label("E6", [2, 4], gamma=2) == "2E6_2_16b"


def test_catalog():
    cat = tits.catalog("F4")
    assert cat["provenance"] == "closed-form"
    assert len(cat["entries"]) == 5
    assert len(tits.catalog("F4", enumerated=True)["entries"]) == 6


def test_verdicts():
    g2 = tits.check("G2", [2])
    assert g2["verdict"] == "excluded"
    d7 = tits.check("D7", [2, 4])
    assert d7["conditions"] == ["2[A]=[E]"]
    survivors = [r["label"] for r in tits.verdicts("E7") if r["verdict"] == "conditions"]
    assert "E7_4_9" in survivors and len(survivors) == 8


def test_candim():
    assert tits.max_candim("E7_1_78", 2) == 3
    assert tits.max_candim("G2_0_14", 3) is None
    assert all(tits.distinguishes(t) for t in ["1E6", "E7", "E8", "F4", "G2"])


def test_errors():
    with pytest.raises(ValueError):
        tits.cartan_matrix("D3")
    with pytest.raises(ValueError):
        tits.label("A4", [1], gamma=2)
