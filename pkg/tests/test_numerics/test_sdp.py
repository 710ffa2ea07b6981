# tests/test_numerics/test_sdp.py
"""
Тесты для слоя SDP
"""

import cvxpy as cp
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conekit.config import get_config
from conekit.errors import DimensionTooLarge, SolverError
from conekit.numerics.sdp import (
    SdpBlock, SdpProblem, SdpSolution, SdpStatus, check_block_size, psd_slack, sdp_solve, solve_model,
)


class TestSdpSolve:
    """Тестируем задачи в стандартной форме"""

    def test_two_by_two(self):
        """Тест: min y при [[y, 1], [1, y]] >= 0 равен 1"""
        block = SdpBlock(np.array([[0.0, 1.0], [1.0, 0.0]]), (np.eye(2),))
        solution = sdp_solve(SdpProblem(np.array([1.0]), (block,)))
        assert solution.optimal
        assert solution.value == pytest.approx(1.0, abs=1e-6)
        assert solution.point[0] == pytest.approx(1.0, abs=1e-6)
        assert solution.psd_slack >= -1e-6

    def test_two_blocks(self):
        """Тест: побеждает более жёсткая из двух нижних границ"""
        blocks = (
            SdpBlock(np.array([[-2.0]]), (np.array([[1.0]]),)),
            SdpBlock(np.array([[-3.0]]), (np.array([[1.0]]),)),
        )
        solution = sdp_solve(SdpProblem(np.array([1.0]), blocks))
        assert solution.value == pytest.approx(3.0, abs=1e-6)

    def test_infeasible(self):
        """Тест: -I >= 0 никогда не оптимально"""
        block = SdpBlock(-np.eye(2), (np.diag([1.0, 0.0]),))
        solution = sdp_solve(SdpProblem(np.array([1.0]), (block,)))
        assert solution.status is not SdpStatus.OPTIMAL
        with pytest.raises(SolverError):
            solution.require_optimal("test")


def random_problem(seed: int):
    """Строго допустимая пара: y = 0 внутри прямой области, Z внутри двойственной"""
    rng = np.random.default_rng(seed)
    n, m = 3, 2
    noise = rng.standard_normal((n, n))
    f0 = np.eye(n) + 0.2 * (noise + noise.T) / np.linalg.norm(noise + noise.T, 2)
    fs = []
    for _ in range(m):
        g = rng.standard_normal((n, n))
        fs.append(g + g.T)
    h = rng.standard_normal((n, n))
    z = h @ h.T + 0.1 * np.eye(n)
    c = np.array([np.trace(f @ z) for f in fs])
    return SdpProblem(c, (SdpBlock(f0, tuple(fs)),)), z


class TestSolutionInvariants:
    """Тестируем оптимальные решения и двойственность"""

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=15, deadline=None)
    def test_weak_duality_and_slack(self, seed):
        """Тест: c^T y >= -Tr(F0 Z) для допустимой двойственной Z, запас PSD в оптимуме соблюдён"""
        problem, z = random_problem(seed)
        solution = sdp_solve(problem)
        assert solution.optimal
        assert solution.psd_slack >= -get_config().tol_psd
        dual_value = -np.trace(problem.blocks[0].f0 @ z)
        assert solution.value >= dual_value - 1e-7

    def test_slack_violation_is_not_optimal(self):
        """Тест: точка вне конуса PSD никогда не считается оптимальной"""
        z = cp.Variable((2, 2), symmetric=True)
        problem = cp.Problem(cp.Minimize(cp.trace(z)), [z == np.diag([1.0, -1.0])])
        solution = solve_model(problem, [z], [z])
        assert solution.status is SdpStatus.MAX_ITERATIONS
        assert solution.psd_slack == pytest.approx(-0.5, abs=1e-6)
        with pytest.raises(SolverError):
            solution.require_optimal("test")

    def test_psd_slack_is_scaled(self):
        assert psd_slack([]) == 0.0
        assert psd_slack([np.diag([3.0, 0.0])]) == pytest.approx(0.0)
        assert psd_slack([np.eye(2), np.diag([1.0, -2.0])]) == pytest.approx(-2.0 / 3.0)

    def test_optimal_solution_checks_its_slack(self):
        with pytest.raises(ValueError):
            SdpSolution(SdpStatus.OPTIMAL, 1.0, np.zeros(1), -1e-3)
        SdpSolution(SdpStatus.MAX_ITERATIONS, float('nan'), np.zeros(0), -1e-3)


class TestValidation:
    """Тестируем проверку аргументов"""

    def test_asymmetric_block(self):
        with pytest.raises(ValueError):
            SdpBlock(np.array([[0.0, 1.0], [0.0, 0.0]]), ())

    def test_coefficient_count(self):
        block = SdpBlock(np.eye(2), (np.eye(2), np.eye(2)))
        with pytest.raises(ValueError):
            SdpProblem(np.array([1.0]), (block,))

    def test_block_cap(self):
        """Тест: блоки больше настроенного предела отклоняются"""
        block = SdpBlock(np.eye(65), (np.eye(65),))
        with pytest.raises(DimensionTooLarge):
            SdpProblem(np.array([1.0]), (block,))
        with pytest.raises(DimensionTooLarge):
            check_block_size(65, "test")
        check_block_size(64, "test")
