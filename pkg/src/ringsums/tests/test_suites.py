"""
検証スイートの実行テスト

既定の指数上限で全部回すのは重いので、ここでは kmax を絞って実行する。
"""

import pytest

from ringsums.core.exceptions import RingSumsError
from ringsums.services import suites


def test_suite_names_have_jobs():
    for name in suites.SUITE_NAMES:
        assert suites.suite_jobs(name, kmax=2, degree=2)


def test_unknown_suite():
    with pytest.raises(RingSumsError):
        suites.suite_jobs("nope")


def test_overrides_reach_jobs():
    jobs = suites.suite_jobs("twitt", degree=4)
    spans = [args for function, args in jobs if function is suites.case_twitt_span]
    assert all(args[1] == 4 for args in spans)
    assert "Nil(Zmod(9),2)" in [args[0] for args in spans]
    erratum = suites.suite_jobs("erratum", kmax=5)
    assert erratum == [(suites.case_erratum, (5,))]


def test_record_comparison():
    ok = suites._record("t1", (2, 1, 0), "GF(2)", {"k": 1}, 1, 1, "same")
    bad = suites._record("t1", (2, 2, 0), "GF(2)", {"k": 2}, 1, 0, "different")
    assert ok.passed and not bad.passed
    assert bad.expected == "1" and bad.actual == "0"
    report = suites.SuiteReport("t1", [ok, bad])
    assert (report.passed, report.failed, report.ok) == (1, 1, False)


def test_erratum_suite():
    report = suites.run_suite("erratum")
    assert report.ok
    assert len(report.cases) == 16
    by_k = {c.params["k"]: c.actual for c in report.cases}
    assert by_k[3] == "[[0, 1], [0, 0]]"
    assert by_k[4] == "[[0, 0], [0, 0]]"
    assert by_k[1] == "[[0, 0], [0, 0]]"


@pytest.mark.parametrize(
    "name, kmax",
    [("t1", 10), ("tmain", 8), ("bcl", 8), ("negk", 3), ("waring", 4), ("vanishing", 4)],
)
def test_small_suites_pass(name, kmax):
    report = suites.run_suite(name, kmax=kmax)
    failures = [(c.ring, c.params, c.expected, c.actual) for c in report.cases if not c.passed]
    assert failures == []
    assert report.cases


def test_records_are_sorted():
    report = suites.run_suite("t1", kmax=3)
    keys = [suites._sort_key(c.key) for c in report.cases]
    assert keys == sorted(keys)
    assert report.cases[0].key == (2, 0, 0)


def test_parallel_matches_serial():
    serial = suites.run_suite("waring", kmax=3, jobs=1)
    parallel = suites.run_suite("waring", kmax=3, jobs=2)
    assert parallel.cases == serial.cases


def test_run_suites_expands_all(monkeypatch):
    seen = []
    monkeypatch.setattr(suites, "run_suite", lambda name, **options: seen.append((name, options)) or name)
    assert suites.run_suites(["erratum", "all"], kmax=2) == ["erratum", *suites.SUITE_NAMES]
    assert seen[0] == ("erratum", {"kmax": 2})


@pytest.mark.slow
@pytest.mark.parametrize("name, kmax", [("fgor", 7), ("tmain", None), ("bcl", None)])
def test_heavy_suites_pass(name, kmax):
    assert suites.run_suite(name, kmax=kmax).ok


@pytest.mark.slow
def test_twitt_suite_passes():
    assert suites.run_suite("twitt").ok


def test_twitt_non_field_coefficients():
    records = suites.case_twitt_span("Nil(Zmod(9),2)", 6)
    assert [r.passed for r in records] == [True, True, True]
