import pytest

from superq.errors import TruncationError
from superq.verify import SUITE_NAMES, run_verify


class TestRunVerify:
    def test_all_suites_pass_at_default_settings(self):
        report = run_verify("all", dim=48, n_max=12)
        failed = [check.name for check in report.checks if not check.passed]
        assert failed == []
        assert report.all_passed
        assert report.passed == report.total

    @pytest.mark.parametrize("suite", SUITE_NAMES)
    def test_individual_suites(self, suite):
        report = run_verify(suite, dim=48, n_max=8)
        assert report.all_passed, [c.name for c in report.checks if not c.passed]
        assert report.suite == suite

    def test_unknown_suite_rejected(self):
        with pytest.raises(ValueError):
            run_verify("spectra")

    def test_guard_violation_propagates(self):
        # the eigen amplitudes need dim >= 36
        with pytest.raises(TruncationError):
            run_verify("eigen", dim=16)

    def test_deterministic_given_seed(self):
        first = run_verify("entangle", dim=32, seed=99)
        second = run_verify("entangle", dim=32, seed=99)
        assert first.checks == second.checks

    def test_impossible_tolerance_reports_failures(self):
        report = run_verify("uncertainty", dim=48, tol=1e-30)
        assert not report.all_passed
        assert report.passed < report.total
        # pinned structural identities are not affected by tol
        by_name = {check.name: check for check in report.checks}
        assert by_name["golden_point_variance"].tolerance == 1e-14

    def test_fibonacci_check_inventory(self):
        report = run_verify("fibonacci", n_max=20)
        names = [check.name for check in report.checks]
        assert names[:18] == [f"fibonacci_record[n={n}]" for n in range(3, 21)]
        assert "fibonacci_circle_sign_alternation" in names
        assert "fibonacci_dispersion_monotone_convergence" in names
        assert "golden_gap_at_n20" in names
        assert len(names) == 21

    def test_payload_is_consistent(self):
        report = run_verify("algebra", dim=32)
        payload = report.to_payload()
        assert payload["suite"] == "algebra"
        assert payload["summary"]["total"] == len(payload["checks"])
        assert payload["summary"]["passed"] == sum(
            1 for check in payload["checks"] if check["pass"]
        )
        for check in payload["checks"]:
            assert check["pass"] == (check["residual"] <= check["tolerance"])

    def test_invalid_parameters_rejected(self):
        with pytest.raises(ValueError):
            run_verify("all", tol=0.0)
        with pytest.raises(ValueError):
            run_verify("fibonacci", n_max=2)
