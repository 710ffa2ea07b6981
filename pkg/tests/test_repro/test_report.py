# tests/test_repro/test_report.py
"""
Тесты для отчётов воспроизведения
"""

import json

import numpy as np

from conekit import __version__
from conekit.repro.report import ReproReport, to_plain


class TestReproReport:
    """Тестируем проверки и сериализацию"""

    def test_close_and_at_least(self):
        report = ReproReport("demo", seed=3)
        assert report.close("near", 1.0, 1.0 + 1e-9, 1e-6).passed
        assert not report.at_least("above", 2.0, 1.5).passed
        assert not report.overall
        assert [c.label for c in report.failures()] == ["above"]

    def test_empty_report_passes(self):
        assert ReproReport("empty").overall

    def test_dict_layout(self):
        report = ReproReport("demo", seed=3, inputs={'n': np.int64(2)})
        report.add("flag", True, np.bool_(True), True, anchor="anchor text")
        data = report.to_dict()
        assert data['command'] == "reproduce"
        assert data['version'] == __version__
        assert data['inputs'] == {'n': 2}
        assert data['results'][0] == {
            'label': "flag", 'threshold': True, 'value': True,
            'tolerance': None, 'pass': True, 'paper_anchor': "anchor text",
        }

    def test_json_is_stable(self):
        report = ReproReport("demo", seed=1, inputs={'b': 1, 'a': [1.5, 2.5]})
        report.close("x", 0.0, 0.0, 0.0)
        text = report.to_json()
        assert text == report.to_json()
        assert json.loads(text)['overall'] is True
        assert text.index('"inputs"') < text.index('"name"')


def test_to_plain():
    assert to_plain(np.array([[1.0, 2.0]])) == [[1.0, 2.0]]
    assert to_plain({'x': (np.float64(1.5), float('inf'))}) == {'x': [1.5, 'inf']}


def test_reports_validate_under_the_cli_schema():
    from conekit.cli.io import validate_report

    report = ReproReport("demo", seed=2)
    report.close("x", 1.0, 1.0, 1e-9, anchor="identity")
    report.at_least("y", 0.0, 0.5)
    data = json.loads(report.to_json())
    assert validate_report(data) == data
    assert data['results'][1]['threshold'] == ">= 0"
