import numpy as np
import pytest

from simplexnet import reproduce as rp


def test_ratio_mismatch_ignores_scale_and_zero_entries():
    printed = [1.0, 2.0, 0.0, 4.0]
    assert rp.ratio_mismatch(np.array([3.0, 6.0, 5.0, 12.0]), printed) == pytest.approx(0, abs=1e-12)
    assert rp.ratio_mismatch([1.0, 2.0, 0.0, 4.4], printed) > 0.01


def test_check_line_format():
    assert rp.Check("x", rp.PASS, "ok").line() == "[PASS] x  (ok)"


def test_every_suite_runs_and_reports_statuses():
    for name in rp.SUITES:
        checks = rp.run_suite(name)
        assert checks
        assert {c.status for c in checks} <= {rp.PASS, rp.FAIL, rp.SKIP}


def test_congress_skips_only_graph_checks_without_edges():
    checks = rp.run_suite("congress-tables")
    skipped = [c.name for c in checks if c.status == rp.SKIP]
    assert len(skipped) == 9
    assert all(c.status == rp.PASS for c in checks if c.status != rp.SKIP)


def test_unknown_suite():
    with pytest.raises(KeyError):
        rp.run_suite("nope")
