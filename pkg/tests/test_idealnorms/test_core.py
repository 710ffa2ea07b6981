# tests/test_idealnorms/test_core.py
"""
Тесты для норм операторных идеалов
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from conekit.errors import DimensionTooLarge, UnsupportedError
from conekit.idealnorms.core import (
    gamma2, gamma2_factorization, gamma2_star, gamma2_star_certificate, hs, nuclear, nuclear_lp,
    pi2, pietsch_measure,
)
from conekit.numerics.linalg import min_eig
from conekit.spaces.core import (
    Family, OperatorMatrix, SpaceDescriptor, dual_space, op_norm, symmetric_extreme_points,
)

finite = st.floats(min_value=-3, max_value=3, allow_nan=False, allow_infinity=False)
POLYTOPES = [Family.L1, Family.LINF]


def operator(a, dom, cod):
    a = np.asarray(a, dtype=float)
    return OperatorMatrix(a, SpaceDescriptor(dom, a.shape[1]), SpaceDescriptor(cod, a.shape[0]))


@pytest.fixture
def rng():
    return np.random.default_rng(7)


class TestHilbertSchmidtAndNuclear:
    """Тестируем нормы в замкнутой форме"""

    def test_hs(self):
        assert hs(operator([[3.0, 0.0], [0.0, 4.0]], Family.L2, Family.L2)) == pytest.approx(5.0)

    def test_hs_needs_euclidean(self):
        with pytest.raises(UnsupportedError):
            hs(operator(np.eye(2), Family.L1, Family.L2))

    def test_nuclear_euclidean_is_trace_norm(self, rng):
        a = rng.standard_normal((5, 5))
        expected = np.sum(np.linalg.svd(a, compute_uv=False))
        assert nuclear(operator(a, Family.L2, Family.L2)) == pytest.approx(expected)

    def test_nuclear_mixed_unsupported(self):
        with pytest.raises(UnsupportedError):
            nuclear(operator(np.eye(2), Family.L1, Family.L2))

    @pytest.mark.parametrize("dom,cod", [
        (Family.LINF, Family.L1), (Family.LINF, Family.LINF), (Family.L1, Family.L1),
    ])
    def test_closed_forms_match_lp(self, rng, dom, cod):
        """Тест: замкнутые формы совпадают с двойственной по следу LP"""
        for _ in range(3):
            u = operator(rng.standard_normal((3, 3)), dom, cod)
            assert nuclear(u) == pytest.approx(nuclear_lp(u), rel=1e-5, abs=1e-6)

    def test_lp_dominates_operator_norm(self, rng):
        u = operator(rng.standard_normal((3, 3)), Family.L1, Family.LINF)
        assert nuclear(u) >= op_norm(u) - 1e-6

    def test_zero(self):
        assert nuclear_lp(operator(np.zeros((2, 2)), Family.L1, Family.LINF)) == 0.0

    @given(arrays(np.float64, (2, 3), elements=finite), st.sampled_from(POLYTOPES),
           st.floats(min_value=0.1, max_value=5))
    @settings(max_examples=40, deadline=None)
    def test_closed_form_homogeneous(self, a, cod, c):
        """Тест: Nuc(c u) = c Nuc(u) для области linf"""
        u = operator(a, Family.LINF, cod)
        assert nuclear(u.scaled(c)) == pytest.approx(c * nuclear(u), rel=1e-9, abs=1e-9)


class TestTwoSumming:
    """Тестируем pi2 и меру Пича"""

    def test_diagonal_from_linf(self):
        """Тест: pi2(D: linf -> l2) равна евклидовой норме диагонали"""
        u = operator(np.diag([0.6, 0.8]), Family.LINF, Family.L2)
        assert pi2(u) == pytest.approx(1.0, abs=1e-5)

    def test_identity_from_l1(self):
        """Тест: равномерная мера на знаковых векторах показывает pi2(id: l1 -> l2) = 1"""
        u = operator(np.eye(3), Family.L1, Family.L2)
        assert pi2(u) == pytest.approx(1.0, abs=1e-5)

    def test_euclidean_domain_is_hs(self, rng):
        a = rng.standard_normal((3, 2))
        assert pi2(operator(a, Family.L2, Family.L2)) == pytest.approx(np.linalg.norm(a))

    def test_needs_euclidean_codomain(self):
        with pytest.raises(UnsupportedError):
            pi2(operator(np.eye(2), Family.LINF, Family.L1))

    def test_l1_cap(self):
        with pytest.raises(DimensionTooLarge):
            pi2(operator(np.ones((2, 13)), Family.L1, Family.L2))

    def test_measure_dominates_gram(self, rng):
        """Тест: sum mu f f^T - u^T u PSD, масса равна квадрату pi2"""
        u = operator(rng.standard_normal((2, 3)), Family.LINF, Family.L2)
        measure = pietsch_measure(u)
        weighted = measure.points.T @ np.diag(measure.weights) @ measure.points
        assert min_eig(weighted - u.entries.T @ u.entries) >= -1e-6
        assert math.sqrt(measure.mass) == pytest.approx(pi2(u), rel=1e-6)

    def test_between_operator_norm_and_hs_bound(self, rng):
        """Тест: ||u|| <= pi2(u)"""
        for _ in range(3):
            u = operator(rng.standard_normal((2, 3)), Family.LINF, Family.L2)
            assert op_norm(u) <= pi2(u) + 1e-6


class TestGamma2:
    """Тестируем норму факторизации через гильбертово пространство и её двойственную"""

    @pytest.mark.parametrize("n", [2, 3])
    def test_identity_on_l1(self, n):
        """Тест: gamma2(id: l1n -> l1n) = sqrt(n)"""
        assert gamma2(operator(np.eye(n), Family.L1, Family.L1)) == pytest.approx(math.sqrt(n), abs=1e-6)

    def test_euclidean_endpoint_is_operator_norm(self, rng):
        u = operator(rng.standard_normal((3, 3)), Family.L1, Family.L2)
        assert gamma2(u) == pytest.approx(op_norm(u))

    def test_factorization_reproduces_matrix(self, rng):
        """Тест: векторы Грама воспроизводят <f, u x> и имеют нормы не больше gamma2"""
        u = operator(rng.standard_normal((2, 2)), Family.L1, Family.LINF)
        factorization = gamma2_factorization(u)
        functionals = symmetric_extreme_points(dual_space(u.cod))
        points = symmetric_extreme_points(u.dom)
        reduced = functionals @ u.entries @ points.T
        gram = factorization.functional_vectors @ factorization.point_vectors.T
        assert np.allclose(gram, reduced, atol=1e-5)
        norms = np.concatenate([
            np.sum(factorization.functional_vectors ** 2, axis=1),
            np.sum(factorization.point_vectors ** 2, axis=1),
        ])
        assert norms.max() <= factorization.value + 1e-5

    def test_star_identity_l2(self):
        """Тест: gamma2*(id на l2(3)) равна следовой норме 3"""
        assert gamma2_star(operator(np.eye(3), Family.L2, Family.L2)) == pytest.approx(3.0, abs=1e-5)

    def test_star_zero(self):
        assert gamma2_star(operator(np.zeros((2, 2)), Family.LINF, Family.L1)) == 0.0

    def test_star_between_operator_and_nuclear(self, rng):
        """Тест: ||v|| <= gamma2*(v) <= Nuc(v)"""
        for dom, cod in ((Family.LINF, Family.L1), (Family.L1, Family.LINF)):
            v = operator(rng.standard_normal((2, 3)), dom, cod)
            value = gamma2_star(v)
            assert op_norm(v) <= value + 1e-5
            assert value <= nuclear(v) + 1e-5

    def test_certificate_is_feasible(self, rng):
        """Тест: оптимальное w имеет gamma2(w) <= 1 и достигает значения"""
        v = operator(rng.standard_normal((2, 2)), Family.LINF, Family.L1)
        certificate = gamma2_star_certificate(v)
        w = OperatorMatrix(certificate.w, v.cod, v.dom)
        assert gamma2(w) <= 1.0 + 1e-5
        assert np.trace(v.entries @ certificate.w) == pytest.approx(certificate.value, abs=1e-5)

    @pytest.mark.slow
    def test_trace_duality_inequality(self, rng):
        """Тест: Tr(v w) <= gamma2*(v) gamma2(w) на случайных парах"""
        for _ in range(5):
            v = operator(rng.standard_normal((2, 3)), Family.LINF, Family.L1)
            w = OperatorMatrix(rng.standard_normal((3, 2)), v.cod, v.dom)
            assert np.trace(v.entries @ w.entries) <= gamma2_star(v) * gamma2(w) + 1e-5
