import pytest

import distideal as di


def test_graph6_and_distances():
    assert di.from_edges(4, [(0, 1), (1, 2), (2, 3)]) == "Ch"
    assert di.edges("Cl") == [(0, 1), (0, 3), (1, 2), (2, 3)]
    assert di.distance_matrix("Bg") == [[0, 1, 2], [1, 0, 1], [2, 1, 0]]
    with pytest.raises(ValueError):
        di.edges("C")


def test_snf():
    assert di.snf([[0, 1, 2], [1, 0, 1], [2, 1, 0]]) == [1, 1, 4]
    assert di.snf([[2, 0], [0, 3]]) == [1, 6]
    big = 10**30
    assert di.snf([[big]]) == [big]
    assert di.determinant([[0, 1], [1, 0]]) == -1
    assert di.distance_snf("Ch") == [1, 1, 2, 6]


def test_phi_and_ideals():
    bull = dict(di.atlas())["bull"]
    assert di.phi(bull)["phi_ideals"] == 3
    assert di.phi("Cl")["phi_ideals"] == 1
    assert di.phi("Cl", rational=True)["phi_ideals"] >= 2
    c7 = di.from_edges(7, [(k, (k + 1) % 7) for k in range(7)])
    v = di.ideal(c7, 3)
    assert v["decision"] == "trivial"
    assert v["certificate_kind"] == "ConstantGcdOne"
    p3 = di.ideal("Bg", 3)
    assert p3["decision"] == "non-trivial"
    assert p3["certificate_data"]["gcd"] == 4


def test_enumeration_and_scan():
    assert [len(di.enumerate_connected(n)) for n in range(1, 7)] == [1, 1, 2, 6, 21, 112]
    assert [len(di.enumerate_trees(n)) for n in range(3, 9)] == [1, 2, 3, 6, 11, 23]
    assert len(di.forbidden_family()) == 16
    gem = dict(di.atlas())["gem"]
    r = di.scan(gem)
    assert [h["name"] for h in r["atlas_hits"]] == ["gem"]
    assert di.canonical_graph6(gem) == di.canonical_graph6(di.canonical_graph6(gem))


def test_conformance_report():
    assert "bull" in di.lemma_ids()
    r = di.run_lemma("bull")
    assert r["pass"] is True
    r = di.run_lemma("G_{6,7}", budget=1)
    assert r["pass"] is False
    assert any(c["inconclusive"] for c in r["checks"])
