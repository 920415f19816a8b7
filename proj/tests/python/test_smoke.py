import pytest

import gradstar


def test_ut2_codimensions():
    alg = gradstar.finest(2)
    assert [gradstar.codimension(alg, n)["total"] for n in range(1, 5)] == [3, 8, 20, 48]


def test_models_agree_on_ut3_z2():
    alg = gradstar.ut3_z2()
    for n in (1, 2, 3):
        free = gradstar.codimension(alg, n, model="free")["total"]
        assert free == gradstar.codimension(alg, n)["total"]


def test_report_shape():
    report = gradstar.codimension(gradstar.finest(3), 2)
    assert report["total"] == 28
    assert report["method"].startswith("rank-oracle")
    blocks = report["assignment-blocks"]
    assert sum(b["rank"] * int(b["multiplicity"]) for b in blocks) == 28


def test_identities():
    alg = gradstar.finest(3)
    assert gradstar.is_identity("[x[1,0], x[2,0]]", alg)
    assert not gradstar.is_identity("x[1,0] x[2,0]", alg)
    for name, m in (("finest-reflection", 3), ("finest-symplectic", 4), ("ut3-z2", 3)):
        results = gradstar.verify_identities(name, m)
        assert results and all(ok for _, ok in results)


def test_good_counts():
    assert gradstar.count_good(3, 2)[2] == 4
    assert gradstar.derived_count_top(3, 2) == 4
    assert gradstar.closed_count_top(3, 2) == 8


def test_errors():
    with pytest.raises(gradstar.ParseError):
        gradstar.is_identity("x[1", gradstar.finest(2))
    with pytest.raises(gradstar.BudgetExceeded):
        gradstar.codimension(gradstar.finest(3), 4, budget=10)
    with pytest.raises(gradstar.GradstarError):
        gradstar.finest(3, "symplectic")
