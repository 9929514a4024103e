from arcvol.monomial import MonomialIdeal
from arcvol.suites import SUITE_NAMES, SuiteResult, random_corpus, run_suites

A = MonomialIdeal(2, ((2, 0), (0, 3)))


def test_random_corpus_is_deterministic_and_primary():
    c1, c2 = random_corpus(3, 10, 5), random_corpus(3, 10, 5)
    assert c1 == c2
    assert all(a.pure_powers is not None and max(a.pure_powers) <= 8 for _, a in c1)
    assert random_corpus(3, 10, 6) != c1


def test_fixture_passes_every_suite():
    res = run_suites([("a", A)], "all")
    assert set(res) == set(SUITE_NAMES)
    assert all(r.ok and r.checks > 0 for r in res.values())
    assert res["vol-cont"].info["a"]["equality_orders"] == [6, 12]
    assert res["lct-jets"].info["a"]["equality_orders"] == [6, 12, 18, 24, 30]


def test_failures_carry_witnesses():
    r = SuiteResult("x")
    r.check("f", False, lhs=1, rhs=2)
    assert r.to_json()["failures"] == [{"fixture": "f", "lhs": "1", "rhs": "2"}]


def test_random_corpus_n2_all_suites():
    res = run_suites(random_corpus(2, 12, 7), "all")
    assert all(r.ok for r in res.values()), {k: r.failures[:3] for k, r in res.items()}
