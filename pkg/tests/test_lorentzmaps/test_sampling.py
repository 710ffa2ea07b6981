# tests/test_lorentzmaps/test_sampling.py
"""
Тесты для случайных отображений Лоренца
"""

import numpy as np
import pytest

from conekit.lorentzmaps.sampling import (
    dressed_central, random_central_lorentz, random_diagonal_contraction,
)
from conekit.lorentzmaps.sinkhorn import central_matrix


def test_contraction_bounds():
    rng = np.random.default_rng(0)
    for _ in range(20):
        v = random_diagonal_contraction(4, 3, rng, trace_bound=0.9)
        assert v.shape == (3,)
        assert np.sum(np.abs(v)) <= 0.9 + 1e-12
        v = random_diagonal_contraction(3, 3, rng, hs_bound=0.5)
        assert np.linalg.norm(v) <= 0.5 + 1e-12


def test_dressed_matrix():
    rng = np.random.default_rng(1)
    dressed = dressed_central([0.3, 0.1], 2, 3, rng, eps=0.01)
    expected = dressed.b @ central_matrix([0.3, 0.1], 3, 2) @ dressed.a
    expected[0, 0] += 0.01
    assert np.allclose(dressed.matrix, expected)


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_central_operator_norm(t):
    p = random_central_lorentz(3, 2, np.random.default_rng(2), t=t)
    assert p[0, 0] == t
    assert np.linalg.norm(p[1:, 1:], 2) <= t + 1e-12
