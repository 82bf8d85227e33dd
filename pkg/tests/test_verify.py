import json

import pytest

from rlah.verify import (
    SUITE_IDS,
    SUITES,
    Grid,
    GridError,
    VerifyConfig,
    all_passed,
    run_all,
    run_suite,
)


def test_eighteen_suites_registered():
    assert len(SUITE_IDS) == 18
    assert set(SUITE_IDS) == {
        "lemma1", "prop2", "thm3", "thm4", "thm5", "thm6_fwd", "thm6_inv", "lemma7",
        "thm8", "cor9_corrected", "cor9_literal", "thm10", "thm11_exact",
        "thm11_series", "thm11_mc", "eq40", "s1s2_inverse", "oracle_match",
    }  # fmt: skip


def test_lemma1_small_grid_case_count():
    rep = run_suite("lemma1", Grid(n_max=10, r_max=3))
    assert rep.verdict == "pass"
    assert rep.cases == 44


def test_literal_sign_form_fails_first_at_n2():
    rep = run_suite("cor9_literal", Grid(n_max=5, r_max=2))
    assert rep.verdict == "expected-fail"
    assert rep.failures[0].params["n"] == 2
    assert all(f.params["n"] >= 2 for f in rep.failures)
    assert rep.passed


def test_literal_sign_form_passes_below_n2():
    rep = run_suite("cor9_literal", Grid(n_max=1, r_max=2))
    assert rep.verdict == "pass"


def test_oracle_suite():
    rep = run_suite("oracle_match", Grid(n_max=8, r_max=8))
    assert rep.verdict == "pass"


def test_single_suite_filter():
    reports = run_all(VerifyConfig(suites=("s1s2_inverse",)))
    assert len(reports) == 1 and reports[0].verdict == "pass"


def test_empty_grid_rejected():
    with pytest.raises(GridError, match="empty grid"):
        run_all(VerifyConfig(suites=("lemma1",), n_max=-1))


def test_caps_rejected_with_flag_name():
    with pytest.raises(GridError) as info:
        run_all(VerifyConfig(suites=("oracle_match",), n_max=11))
    assert info.value.flag == "--n-max"
    with pytest.raises(GridError) as info:
        run_all(VerifyConfig(suites=("thm11_mc",), samples=10**8))
    assert info.value.flag == "--samples"


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_all(VerifyConfig(suites=("nope",)))


def test_reports_are_deterministic():
    cfg = VerifyConfig(suites=("thm11_mc", "cor9_literal", "thm5"), n_max=3, r_max=1, samples=20_000, seed=9)
    a = json.dumps([r.to_json() for r in run_all(cfg)])
    b = json.dumps([r.to_json() for r in run_all(cfg)])
    assert a == b


def test_every_suite_documents_two_distinct_paths():
    for suite in SUITES.values():
        lhs, rhs = suite.paths
        assert lhs and rhs and lhs != rhs


def test_verdict_matches_failures():
    reports = run_all(VerifyConfig(suites=("lemma1", "cor9_literal", "prop2"), n_max=6, r_max=2))
    for rep in reports:
        if rep.verdict == "pass":
            assert not rep.failures
        else:
            assert rep.failures
    assert all_passed(reports)


def test_report_json_schema():
    doc = run_suite("cor9_literal", Grid(n_max=3, r_max=0)).to_json()
    assert {"suite", "cases", "failures", "verdict"} <= set(doc)
    assert doc["failures"][0]["params"] == {"n": 2, "r": 0}
    assert doc["failures"][0]["lhs"] == ["0", "1", "1"]
    assert "elapsed_s" not in doc
