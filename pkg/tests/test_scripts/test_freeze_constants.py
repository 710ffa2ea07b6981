# tests/test_scripts/test_freeze_constants.py
"""
Тесты для скрипта фиксации констант
"""

import json

import pytest
from click.testing import CliRunner

from conekit.repro.constants import frozen_constants
from scripts.freeze_constants import compute_constants, main


class TestFreezeConstants:
    """Тестируем совпадение пересчитанных констант с сохранённым файлом"""

    def test_values_match_stored(self):
        computed = compute_constants()
        stored = frozen_constants()
        for key in ("alpha_phi1", "alpha_phi2", "alpha_phi_sum", "peres_trace"):
            assert computed[key] == pytest.approx(stored[key], abs=1e-12)

    def test_write_then_check(self, tmp_path):
        out = tmp_path / "frozen.json"
        runner = CliRunner()
        written = runner.invoke(main, ['--out', str(out)])
        assert written.exit_code == 0
        assert "sha256" in written.output
        data = json.loads(out.read_text())
        assert data['alpha_phi_sum'] > data['alpha_phi1'] + data['alpha_phi2']

        checked = runner.invoke(main, ['--check', '--out', str(out)])
        assert checked.exit_code == 0
        assert "up to date" in checked.output

    def test_check_reports_drift(self, tmp_path):
        out = tmp_path / "frozen.json"
        stale = dict(compute_constants(), alpha_phi1=0.0)
        out.write_text(json.dumps(stale))
        result = CliRunner().invoke(main, ['--check', '--out', str(out)])
        assert result.exit_code == 1
        assert "alpha_phi1" in result.output
