"""
Settings and Report Tests - config layering, budgets, report serialization
"""
import json
import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from ecom_sdk import __version__
from ecom_sdk.errors import BudgetExceeded
from ecom_sdk.schema import Report
from ecom_sdk.settings import Budget, SharedSettings, checkpoint, current_budget, load_settings, reserve


class TestSettings:
    """config.yml < --config < ECOM_BUDGET_MB"""

    def test_packaged_defaults(self):
        settings = load_settings()
        assert settings.seed == 42
        assert settings.budget.max_group_order == 4096
        assert len(settings.primes) == 2

    def test_override_file(self, tmp_path):
        path = tmp_path / "override.yml"
        path.write_text("budgets:\n  max_cosets: 99\nverification:\n  seed: 7\n")
        settings = load_settings(str(path))
        assert settings.budget.max_cosets == 99
        assert settings.seed == 7
        assert settings.budget.max_simplices == 5000000

    def test_missing_override(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_settings(str(tmp_path / "absent.yml"))

    def test_memory_from_environment(self, monkeypatch):
        monkeypatch.setenv("ECOM_BUDGET_MB", "128")
        assert load_settings().budget.memory_mb == 128

    def test_bad_environment_value_ignored(self, monkeypatch):
        monkeypatch.setenv("ECOM_BUDGET_MB", "lots")
        assert load_settings().budget.memory_mb == 4096

    def test_with_budget_ignores_none(self):
        settings = load_settings()
        assert settings.with_budget(max_cosets=None) is settings
        assert settings.with_budget(max_cosets=5).budget.max_cosets == 5

    def test_shared_settings_singleton(self):
        assert SharedSettings.get() is SharedSettings.get()


class TestBudget:
    """Active budgets seen by checkpoint and reserve"""

    def test_active_budget_is_scoped(self):
        with Budget(max_cosets=3).active():
            assert current_budget().max_cosets == 3
        assert current_budget().max_cosets == SharedSettings.get().budget.max_cosets

    def test_reserve(self):
        with Budget(max_simplices=10).active():
            reserve("max_simplices", 10)
            with pytest.raises(BudgetExceeded) as info:
                reserve("max_simplices", 11)
        assert info.value.resource == "max_simplices"

    def test_memory_estimate(self):
        with Budget(memory_mb=1).active():
            with pytest.raises(BudgetExceeded) as info:
                reserve("max_simplices", 100000, bytes_each=1024)
        assert info.value.resource == "memory_mb"

    def test_checkpoint_time_limit(self):
        with Budget(time_limit_seconds=-1.0).active():
            with pytest.raises(BudgetExceeded):
                checkpoint("stage")

    def test_checkpoint_without_budget(self):
        checkpoint("idle")


class TestReport:
    """Report JSON"""

    def test_fields_and_order(self):
        report = Report(command="homology", result={"b": 1, "a": 2}, spec={"kind": "named"})
        document = json.loads(report.to_json())
        assert document["tool"] == "ecom"
        assert document["version"] == __version__
        assert list(document) == sorted(document)
        assert "timing" not in document
        assert "exit_code" not in document

    def test_pretty(self):
        report = Report(command="afcom", result={})
        assert "\n" in report.to_json(pretty=True)
        assert "\n" not in report.to_json()

    def test_timing(self):
        report = Report(command="afcom", result={}, timing={"seconds": 0.5})
        assert report.to_dict()["timing"] == {"seconds": 0.5}
