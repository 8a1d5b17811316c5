from shadow_states.common import BruteForceCapError
from shadow_states.verification import (
    CheckStatus,
    VerificationReport,
    check_geometry,
    check_single_flips,
    check_zero_moves,
    run_suite,
)


def test_report_records_failures():
    report = VerificationReport()
    report.run("passes", lambda: None)
    report.run("fails", lambda: "counterexample")
    assert not report.passed
    assert report.first_failure.name == "fails"
    assert report.first_failure.detail == "counterexample"


def test_report_turns_errors_into_failures():
    def broken():
        raise ValueError("bad word")

    report = VerificationReport()
    report.run("broken", broken)
    assert report.results[0].detail == "ValueError: bad word"


def capped():
    raise BruteForceCapError(30, 22)


def test_report_skips_capped_checks():
    report = VerificationReport()
    report.run("capped", capped)
    report.run("runs", lambda: None)
    assert [r.status for r in report.results] == [CheckStatus.SKIP, CheckStatus.PASS]
    assert report.skipped[0].name == "capped"
    assert "22" in report.skipped[0].detail
    assert report.first_failure is None
    assert not report.passed


def test_report_frame():
    report = VerificationReport()
    report.run("a", lambda: None)
    report.run("b", lambda: "x")
    report.run("c", capped)
    frame = report.to_frame()
    assert frame["status"].tolist() == ["PASS", "FAIL", "SKIP"]
    assert list(frame.columns) == ["check", "status", "detail"]


def test_zero_moves():
    report = VerificationReport()
    check_zero_moves(report)
    assert report.passed
    assert len(report.results) == 3


def test_single_flips():
    report = VerificationReport()
    check_single_flips(report, 4)
    assert report.passed
    assert report.results[-1].name == "single flips figure-eight"


def test_geometry():
    report = VerificationReport()
    check_geometry(report, 4)
    assert report.passed, report.first_failure


def test_suite_passes():
    report = run_suite(max_n=6)
    assert report.passed, report.first_failure
    names = [r.name for r in report.results]
    assert "bijection n=6" in names
    assert "base case twist-knot n=0" in names


def test_suite_under_a_small_cap():
    capped = run_suite(max_n=5, max_crossings=4)
    full = run_suite(max_n=5)
    assert not capped.failures
    assert capped.skipped
    assert not capped.passed
    assert [r.name for r in capped.results] == [r.name for r in full.results]
