# tests/test_lorentzmaps/test_retract.py
"""
Тесты для ретрактов сечений конуса Лоренца
"""

import numpy as np
import pytest

from conekit.cones.core import ConeDescriptor, member
from conekit.errors import DegenerateIntersection
from conekit.lorentzmaps.retract import retract_maps


class TestRetract:
    """Тестируем alpha, beta с beta alpha = id на S"""

    def test_coordinate_section(self):
        """Тест: span(e0, e1) является копией L_1"""
        basis = np.eye(4)[:, :2]
        retract = retract_maps(basis)
        assert retract.kind == "interior"
        assert retract.dim == 2
        assert retract.radius == pytest.approx(1.0)
        assert retract.roundtrip_error(basis) < 1e-12

    def test_cone_to_cone(self):
        rng = np.random.default_rng(0)
        basis = np.column_stack([[1.0, 0.2, -0.1, 0.0], rng.standard_normal(4), rng.standard_normal(4)])
        retract = retract_maps(basis)
        assert retract.roundtrip_error(basis) < 1e-10
        lorentz_small = ConeDescriptor.lorentz(retract.dim - 1)
        lorentz_big = ConeDescriptor.lorentz(3)
        for _ in range(200):
            x = basis @ rng.standard_normal(3)
            x *= 1.0 if x[0] >= 0 else -1.0
            if member(x, lorentz_big, tol=0.0):
                assert member(retract.alpha @ x, lorentz_small, tol=1e-9)
            u = rng.standard_normal(retract.dim - 1)
            y = np.concatenate([[1.0], u / np.linalg.norm(u)])
            assert member(retract.beta @ y, lorentz_big, tol=1e-9)

    def test_boundary_ray(self):
        """Тест: касательная прямая пересекает L_n по одному лучу"""
        retract = retract_maps(np.array([[1.0], [1.0], [0.0]]))
        assert retract.kind == "ray"
        assert retract.dim == 1
        assert retract.roundtrip_error(np.array([[1.0], [1.0], [0.0]])) < 1e-12

    @pytest.mark.parametrize("basis", [
        np.array([[0.0], [1.0], [0.0]]),
        np.array([[1.0], [2.0], [0.0]]),
    ])
    def test_degenerate(self, basis):
        with pytest.raises(DegenerateIntersection):
            retract_maps(basis)

    def test_to_dict(self):
        data = retract_maps(np.eye(3)).to_dict()
        assert data['kind'] == "interior" and data['dim'] == 3
