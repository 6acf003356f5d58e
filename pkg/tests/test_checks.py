from nldirac.checks import ALL_CHECKS, run_checks


def test_full_suite_passes():
    results = run_checks()
    failures = [r for r in results if not r.passed]
    assert not failures, [f"{r.name}: {r.detail}" for r in failures]
    assert {r.name for r in results} == set(ALL_CHECKS)


def test_subset_selection():
    results = run_checks(["propagator-unitarity"])
    assert len(results) == 1
    assert results[0].passed


def test_unknown_name_reports_failure():
    results = run_checks(["no-such-check"])
    assert len(results) == 1
    assert not results[0].passed
