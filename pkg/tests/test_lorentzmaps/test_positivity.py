# tests/test_lorentzmaps/test_positivity.py
"""
Тесты для положительности между конусами Лоренца
"""

import numpy as np
import pytest

from conekit.cones.core import ConeDescriptor, ConeMap, lorentz_map
from conekit.cones.tensors import j_matrix
from conekit.errors import DimensionMismatch
from conekit.lorentzmaps import positivity
from conekit.lorentzmaps.positivity import (
    is_interior_positive, is_lorentz_positive, lorentz_margin, s_procedure_margin, sample_boundary_rays,
)
from conekit.lorentzmaps.sampling import random_positive_lorentz
from conekit.spaces.core import SpaceDescriptor


@pytest.fixture
def rng():
    return np.random.default_rng(11)


class TestPositivity:
    """Тестируем решения о положительности через S-процедуру"""

    def test_identity_and_reflection(self):
        assert is_lorentz_positive(np.eye(4))
        assert is_lorentz_positive(j_matrix(3))
        assert not is_interior_positive(np.eye(4))

    def test_expanding_map(self):
        """Тест: (1, 1) -> (1, 2) выходит из конуса"""
        assert not is_lorentz_positive(np.diag([1.0, 2.0]))

    def test_negative_map(self):
        assert not is_lorentz_positive(-np.eye(3))

    def test_random_maps_are_interior(self, rng):
        for _ in range(20):
            n, m = (int(x) for x in rng.integers(1, 5, size=2))
            p = random_positive_lorentz(n, m, rng)
            assert is_lorentz_positive(p)
            assert is_interior_positive(p)
            assert lorentz_margin(p, sample_boundary_rays(n, 200, rng)) >= -1e-9

    def test_rectangular(self):
        """Тест: проекция на меньшее число пространственных координат положительна"""
        p = np.zeros((2, 4))
        p[0, 0] = p[1, 1] = 1.0
        assert is_lorentz_positive(p)

    def test_cone_map_input(self):
        assert is_lorentz_positive(lorentz_map(np.eye(3)))
        p = ConeMap(np.eye(3), ConeDescriptor.over(SpaceDescriptor.l1(2)), ConeDescriptor.lorentz(2))
        with pytest.raises(DimensionMismatch):
            is_lorentz_positive(p)


class TestSProcedureMargin:
    """Тестируем максимум минимального собственного значения P^T J P - lambda J"""

    @pytest.mark.parametrize("p", [np.eye(3), j_matrix(2)])
    def test_boundary_maps_reach_zero(self, p):
        """Тест: -|1 - lambda| достигает максимума 0 при lambda = 1"""
        margin, lam = s_procedure_margin(p)
        assert margin == pytest.approx(0.0, abs=1e-12)
        assert lam == pytest.approx(1.0, abs=1e-11)

    @pytest.mark.parametrize("scale", [1.0, 10.0, 300.0])
    def test_central_map(self, scale):
        """Тест: diag(s, s/2) даёт min(s^2 - lambda, lambda - s^2/4) с максимумом в 5s^2/8"""
        margin, lam = s_procedure_margin(np.diag([scale, scale / 2]))
        assert lam == pytest.approx(0.625 * scale ** 2, rel=1e-12)
        assert margin == pytest.approx(0.375 * scale ** 2, rel=1e-12)

    def test_endpoint_at_zero(self):
        """Тест: у нулевого отображения максимум на конце lambda = 0"""
        margin, lam = s_procedure_margin(np.zeros((3, 3)))
        assert margin == pytest.approx(0.0, abs=1e-15)
        assert lam == 0.0

    def test_uses_scipy_search(self, mocker):
        spy = mocker.spy(positivity, "minimize_scalar")
        s_procedure_margin(np.diag([1.0, 0.5]))
        assert spy.call_count == 2
        assert all(call.kwargs['method'] == "bounded" for call in spy.call_args_list)


def test_boundary_rays(rng):
    rays = sample_boundary_rays(3, 50, rng)
    assert rays.shape == (50, 4)
    assert np.allclose(np.linalg.norm(rays[:, 1:], axis=1), 1.0)
