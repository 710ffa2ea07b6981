# tests/test_cli/conftest.py
import json

import pytest
from click.testing import CliRunner


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


@pytest.fixture
def matrix_file(tmp_path):
    """Записывает матричный файл и возвращает путь к нему"""
    def write(matrix, dom, cod, lam=None, name="matrix.json", **overrides):
        data = {
            'rows': len(matrix),
            'cols': len(matrix[0]),
            'data': [x for row in matrix for x in row],
            'dom': {'family': dom[0], 'dim': dom[1]},
            'cod': {'family': cod[0], 'dim': cod[1]},
        }
        if lam is not None:
            data['lambda'] = lam
        data.update(overrides)
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return str(path)
    return write
