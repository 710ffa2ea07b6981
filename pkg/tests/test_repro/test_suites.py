# tests/test_repro/test_suites.py
"""
Тесты для наборов воспроизведения, с уменьшенным числом испытаний
"""

import inspect

import numpy as np
import pytest
import sympy as sp

from conekit.numerics.linalg import min_eig
from conekit.repro.constants import PERES_WEIGHTS, frozen_constants, peres_observables
from conekit.repro.lorentz_criteria import lorentz_criteria_check
from conekit.repro.nonassoc import (
    diagonal_reduction, nonassociativity_check, nonassociativity_suite, right_associated_member, z_tensor,
)
from conekit.repro.nonconvexity import nonconvexity_check
from conekit.repro.peres import exact_trace, peres_maps, peres_pipeline
from conekit.repro.psd_factorization import (
    PsdFactorizationDraw, clifford_draw, maximally_entangled_value, psd_factorization_check,
    random_operator_family,
)
from conekit.repro.square_cone import mixed_extreme_decomposition, square_cone_check, two_summing_gap


def assert_passes(report):
    failures = [(c.label, c.value) for c in report.failures()]
    assert report.overall, failures


class TestPeres:
    """Тестируем конвейер с точными константами"""

    def test_weights_are_exact(self):
        assert sum(PERES_WEIGHTS, sp.Integer(0)) == 1

    def test_trace_is_negative(self):
        value = float(exact_trace().evalf(30))
        assert value < -1e-6
        assert value == pytest.approx(frozen_constants()['peres_trace'], abs=1e-9)

    def test_observables_are_reflections(self):
        for obs in peres_observables()[1:]:
            assert sp.simplify(obs * obs - sp.eye(3)).is_zero_matrix

    def test_maps_shapes(self):
        t, a, b = peres_maps()
        assert t.shape == (9, 9) and a.shape == (9, 4) and b.shape == (4, 9)

    def test_pipeline(self):
        report = peres_pipeline(seed=0, trials=3)
        assert_passes(report)
        assert report.name == "peres"


class TestNonConvexity:
    """Тестируем отсутствие субаддитивности alpha"""

    def test_check(self):
        report = nonconvexity_check(seed=0, trials=2)
        assert_passes(report)
        assert 'convexity_search' in report.inputs


class TestNonAssociativity:
    """Тестируем неассоциативность лоренцева тензорного произведения"""

    def test_z_tensor(self):
        z = z_tensor(2.0, 3)
        assert z.shape == (4, 4, 4)
        assert z[0, 0, 0] == 2.0 and z[2, 2, 2] == 1.0 and z[1, 2, 2] == 0.0

    def test_membership_threshold(self):
        assert right_associated_member(1.0 + 1e-6, 3, tol=1e-7)
        assert not right_associated_member(1.0 - 1e-6, 3, tol=1e-7)

    def test_reduction(self):
        assert np.allclose(diagonal_reduction(z_tensor(0.5, 2)), np.diag([0.5, 1.0, 1.0]))

    @pytest.mark.parametrize("n", [2, 3])
    def test_check(self, n):
        assert_passes(nonassociativity_check(n))

    def test_range(self):
        with pytest.raises(ValueError):
            nonassociativity_check(1)

    def test_suite_merges_dimensions(self):
        report = nonassociativity_suite(dims=[2, 3], seed=5)
        assert report.inputs['dims'] == [2, 3]
        assert len(report.checks) == 2 * 5
        assert_passes(report)


class TestSquareCone:
    """Тестируем 2-суммирующее поведение linf(2)"""

    def test_gap(self):
        assert two_summing_gap(10, np.random.default_rng(0)) <= 1e-6

    def test_decomposition(self):
        lhs, rhs, x, y = mixed_extreme_decomposition(3, np.random.default_rng(1))
        assert np.allclose(lhs, rhs, atol=1e-12)

    def test_check(self):
        assert_passes(square_cone_check(trials=10, seed=0, map_trials=2))


class TestPsdFactorization:
    """Тестируем порог gamma2* для вполне положительных композиций"""

    def test_operator_family(self):
        family = random_operator_family(3, 2, np.random.default_rng(0))
        a0 = family[0]
        assert np.trace(a0).real == pytest.approx(1.0)
        for a in family[1:]:
            assert min_eig(a0 + a) >= -1e-10
            assert min_eig(a0 - a) >= -1e-10

    def test_zero_middle_map(self):
        rng = np.random.default_rng(1)
        draw = PsdFactorizationDraw(
            a=random_operator_family(2, 1, rng), b=random_operator_family(2, 1, rng), v=np.zeros((1, 1)),
        )
        assert draw.min_eig() >= -1e-12

    def test_clifford_value(self):
        """Тест: <Phi|C|Phi> = 1 - gamma2*(v)"""
        draw = clifford_draw(np.random.default_rng(2), 1.5)
        assert maximally_entangled_value(draw) == pytest.approx(-0.5, abs=1e-5)

    def test_check(self):
        assert_passes(psd_factorization_check(trials=10, seed=0, active_trials=11))


@pytest.mark.slow
class TestLorentzCriteria:
    """Тестируем перекрёстную проверку критериев Лоренца"""

    def test_check(self):
        report = lorentz_criteria_check(trials=20, seed=0, rays=50)
        assert_passes(report)
        assert report.inputs['trials'] == 20



def default_of(function, name):
    return inspect.signature(function).parameters[name].default


def test_production_trial_counts():
    """Тест: наборы выполняют полное число испытаний, если вызывающий его не уменьшил"""
    assert default_of(peres_pipeline, 'trials') == 10_000
    assert default_of(psd_factorization_check, 'trials') == 200
    assert default_of(psd_factorization_check, 'active_trials') == 1000
