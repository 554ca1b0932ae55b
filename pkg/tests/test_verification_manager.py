import pytest

from config.run_config import ConfigPresets, RunConfig
from verification.verification_manager import CheckResult, VerificationManager


@pytest.mark.parametrize("n, q", [(1, 2), (2, 3), (3, 2)])
def test_all_suites_pass(n, q):
    manager = VerificationManager(RunConfig(n=n, q=q, homomorphism_samples=500))
    assert manager.run(), [str(r) for r in manager.failures]
    assert manager.suites_run == list(VerificationManager.SUITES)
    assert not manager.failures


@pytest.mark.slow
@pytest.mark.parametrize("n, q", [(3, 3), (4, 2)])
def test_all_suites_pass_on_acceptance_groups(n, q):
    config = ConfigPresets.acceptance()
    config.n, config.q = n, q
    manager = VerificationManager(config)
    assert manager.run(), [str(r) for r in manager.failures]


def test_single_suite_and_summary():
    manager = VerificationManager(RunConfig(n=2, q=2))
    assert manager.run("classes")
    summary = manager.get_verification_summary()
    assert summary["suites"] == ["classes"]
    assert summary["checks_run"] == len(manager.results) > 0
    assert summary["passed"] and summary["failures"] == []
    assert str(manager).startswith("Verification G_2(F_2)")


def test_oracle_checks_are_skipped_over_budget():
    manager = VerificationManager(RunConfig(n=2, q=3, max_oracle_operations=10))
    manager.run("orbits")
    assert any("skipped" in r.detail for r in manager.results)
    assert manager.passed


def test_recorded_failures_are_reported():
    manager = VerificationManager(RunConfig(n=1, q=2))
    manager.record("orbits", "forced failure", False, "detail")
    assert not manager.passed
    assert manager.failures[0].name == "forced failure"
    assert str(manager.failures[0]) == "[FAIL] orbits: forced failure (detail)"


def test_check_result_dict():
    result = CheckResult("model", "ok", True)
    assert result.to_dict() == {"suite": "model", "name": "ok", "passed": True, "detail": ""}
    assert str(result) == "[PASS] model: ok"
