# tests/test_repro/test_runner.py
"""
Тесты для запуска наборов
"""

import pytest

from conekit.repro import runner
from conekit.repro.report import ReproReport


def fake_suite(name, passed=True):
    def run(seed=None):
        report = ReproReport(name, seed=seed)
        report.add("stub", True, passed, passed)
        return report
    return run


@pytest.fixture
def stub_suites(monkeypatch):
    suites = {
        "alpha": fake_suite("alpha"),
        "beta": fake_suite("beta", passed=False),
        "gamma": fake_suite("gamma"),
    }
    monkeypatch.setattr(runner, "SUITES", suites)
    return suites


class TestSuiteSeed:
    """Тестируем вывод зерна для каждого набора"""

    def test_deterministic(self):
        assert runner.suite_seed(7, "peres") == runner.suite_seed(7, "peres")

    def test_distinct(self):
        seeds = {runner.suite_seed(7, name) for name in runner.SUITES}
        assert len(seeds) == len(runner.SUITES)
        assert runner.suite_seed(7, "peres") != runner.suite_seed(8, "peres")

    def test_fits_in_32_bits(self):
        assert 0 <= runner.suite_seed(123, "nonassoc") < 2 ** 32


class TestRunSuite:
    """Тестируем запуск отдельных наборов"""

    def test_unknown_suite(self):
        with pytest.raises(ValueError):
            runner.run_suite("bogus", seed=0)

    def test_derived_seed(self, stub_suites):
        report = runner.run_suite("alpha", seed=3)
        assert report.seed == runner.suite_seed(3, "alpha")

    def test_fixed_order(self):
        assert list(runner.SUITES) == [
            "peres", "nonconvexity", "nonassoc", "square-cone", "psd-factorization", "lorentz-criteria",
        ]


class TestRunSuites:
    """Тестируем сохранение порядка при параллельном запуске"""

    @pytest.mark.asyncio
    async def test_order(self, stub_suites):
        reports = await runner.run_suites(["gamma", "alpha", "beta"], seed=0)
        assert [r.name for r in reports] == ["gamma", "alpha", "beta"]
        assert [r.overall for r in reports] == [True, True, False]

    @pytest.mark.asyncio
    async def test_run_all(self, stub_suites):
        reports = await runner.run_all(seed=1)
        assert [r.name for r in reports] == ["alpha", "beta", "gamma"]

    @pytest.mark.asyncio
    async def test_seed_independent_of_grouping(self, stub_suites):
        alone = await runner.run_suites(["beta"], seed=5)
        together = await runner.run_suites(["alpha", "beta"], seed=5)
        assert alone[0].to_json() == together[1].to_json()

    @pytest.mark.asyncio
    async def test_failures_are_logged(self, stub_suites, mocker):
        warning = mocker.patch.object(runner.logger, "warning")
        await runner.run_suites(["alpha", "beta"], seed=0)
        warning.assert_called_once()
        assert "beta" in warning.call_args.args[0]

    @pytest.mark.asyncio
    async def test_suites_run_in_worker_threads(self, stub_suites, mocker):
        spy = mocker.spy(runner.asyncio, "to_thread")
        await runner.run_suites(["alpha", "gamma"], seed=0)
        assert spy.call_count == 2
