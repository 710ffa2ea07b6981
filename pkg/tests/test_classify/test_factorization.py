# tests/test_classify/test_factorization.py
"""
Тесты для конструктивных факторизаций Пича
"""

import numpy as np
import pytest

from conekit.classify.factorization import (
    central_factorization, clifford_generators, pietsch_factorization, random_pietsch_factors,
    two_summing_factorization,
)
from conekit.classify.falsify import sample_legs_into
from conekit.cones.core import ConeDescriptor
from conekit.errors import UnsupportedError
from conekit.idealnorms.core import pi2
from conekit.lorentzmaps.criteria import max_ea_criterion
from conekit.spaces.core import OperatorMatrix, SpaceDescriptor, dual_space, vec_norm


@pytest.fixture
def rng():
    return np.random.default_rng(21)


class TestPietschFactorization:
    """Тестируем v = u2 Delta u1"""

    def test_euclidean(self, rng):
        v = OperatorMatrix(rng.standard_normal((2, 3)), SpaceDescriptor.l2(3), SpaceDescriptor.l2(2))
        f = pietsch_factorization(v)
        assert np.allclose(f.product(), v.entries)

    @pytest.mark.parametrize("dom", [SpaceDescriptor.linf(3), SpaceDescriptor.l1(3)])
    def test_polytope_domain(self, rng, dom):
        v = OperatorMatrix(rng.standard_normal((2, 3)), dom, SpaceDescriptor.l2(2))
        f = pietsch_factorization(v)
        assert np.allclose(f.product(), v.entries, atol=1e-6)
        assert f.delta_norm == pytest.approx(pi2(v), rel=1e-5)

    def test_needs_euclidean_codomain(self):
        v = OperatorMatrix(np.eye(2), SpaceDescriptor.linf(2), SpaceDescriptor.l1(2))
        with pytest.raises(UnsupportedError):
            pietsch_factorization(v)

    def test_random_factors(self, rng):
        dom = SpaceDescriptor.l1(3)
        f = random_pietsch_factors(3, 2, 4, rng, dom=dom)
        assert f.width == 4
        assert all(vec_norm(row, dual_space(dom)) == pytest.approx(1.0) for row in f.u1)
        assert 0.2 - 1e-12 <= f.delta_norm <= 1.0 + 1e-12
        assert f.u2_norm() == pytest.approx(1.0)


class TestFactorizations:
    """Тестируем факторизации P Q центральных отображений"""

    def test_central(self, rng):
        for _ in range(10):
            f = random_pietsch_factors(3, 2, 3, rng)
            p, q = central_factorization(1.0, f)
            target = np.zeros((3, 4))
            target[0, 0] = 1.0
            target[1:, 1:] = f.product()
            assert np.allclose(p @ q, target)
            assert max_ea_criterion(q)[0]

    def test_two_summing(self, rng):
        dom = SpaceDescriptor.linf(2)
        f = random_pietsch_factors(2, 3, 3, rng, dom=dom)
        s = sample_legs_into(ConeDescriptor.over(dom), 2, rng).matrix
        p, q = two_summing_factorization(1.0, f, s)
        target = np.zeros((4, 3))
        target[0, 0] = 1.0
        target[1:, 1:] = f.product()
        assert np.allclose(p @ q, target @ s)


class TestClifford:
    """Тестируем антикоммутирующие эрмитовы унитарные матрицы"""

    @pytest.mark.parametrize("count", [1, 2, 3, 5])
    def test_relations(self, count):
        gens = clifford_generators(count)
        assert len(gens) == count
        d = gens[0].shape[0]
        assert d == 2 ** ((count + 1) // 2)
        for i, a in enumerate(gens):
            assert np.allclose(a, a.conj().T)
            assert np.allclose(a @ a, np.eye(d))
            for b in gens[i + 1:]:
                assert np.allclose(a @ b + b @ a, 0.0)

    def test_empty(self):
        with pytest.raises(ValueError):
            clifford_generators(0)
