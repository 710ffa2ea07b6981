# tests/test_numerics/test_linalg.py
"""
Тесты для плотной линейной алгебры
"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from conekit.numerics.linalg import (
    HermMatrix, SymMatrix, herm_eig, is_psd, min_eig, orthogonal_with_first_column,
    random_orthogonal, svd, sym_eig, trace_norm,
)

finite = st.floats(min_value=-10, max_value=10, allow_nan=False, allow_infinity=False)


class TestMatrixTypes:
    """Тестируем симметричные и эрмитовы обёртки"""

    def test_sym_matrix_symmetrizes(self):
        """Тест: хранится симметричная часть"""
        m = SymMatrix([[1.0, 2.0], [0.0, 1.0]])
        assert np.allclose(m.entries, [[1.0, 1.0], [1.0, 1.0]])
        assert m.dim == 2

    def test_non_square_rejected(self):
        """Тест: неквадратный вход вызывает ValueError"""
        with pytest.raises(ValueError):
            SymMatrix(np.zeros((2, 3)))
        with pytest.raises(ValueError):
            HermMatrix(np.zeros(3))

    def test_entries_are_read_only(self):
        """Тест: сохранённые элементы нельзя изменить"""
        m = SymMatrix(np.eye(2))
        with pytest.raises(ValueError):
            m.entries[0, 0] = 5.0


class TestDecompositions:
    """Тестируем спектральное и сингулярное разложения"""

    def test_sym_eig_descending(self):
        """Тест: собственные значения идут по убыванию"""
        rng = np.random.default_rng(0)
        g = rng.standard_normal((4, 4))
        a = g + g.T
        w, v = sym_eig(a)
        assert np.all(np.diff(w) <= 1e-12)
        assert np.allclose(v @ np.diag(w) @ v.T, a, atol=1e-10)

    def test_herm_eig_reconstructs(self):
        """Тест: эрмитова матрица восстанавливается по собственным парам"""
        rng = np.random.default_rng(1)
        g = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        a = g + g.conj().T
        w, v = herm_eig(a)
        assert np.allclose(v @ np.diag(w) @ v.conj().T, a, atol=1e-10)

    def test_reconstruction_residual_on_many_matrices(self):
        """Тест: ||V diag(w) V* - M|| <= 1e-12 ||M|| на 1000 случайных симметричных и эрмитовых матрицах"""
        rng = np.random.default_rng(3)
        for i in range(1000):
            d = int(rng.integers(1, 17))
            g = rng.standard_normal((d, d)) * 10.0 ** rng.uniform(-3, 3)
            if i % 2:
                g = g + 1j * rng.standard_normal((d, d)) * np.abs(g).max()
                a = g + g.conj().T
                w, v = herm_eig(a)
            else:
                a = g + g.T
                w, v = sym_eig(a)
            residual = np.linalg.norm(v @ np.diag(w) @ v.conj().T - a, 2)
            assert residual <= 1e-12 * np.linalg.norm(a, 2)

    def test_svd_returns_v_not_vt(self):
        """Тест: M = U diag(s) V^T"""
        rng = np.random.default_rng(2)
        a = rng.standard_normal((3, 5))
        u, s, v = svd(a)
        assert v.shape == (5, 3)
        assert np.allclose(u @ np.diag(s) @ v.T, a, atol=1e-10)

    def test_min_eig(self):
        assert min_eig(np.diag([3.0, -1.0, 2.0])) == pytest.approx(-1.0)
        assert min_eig(np.zeros((0, 0))) == 0.0

    def test_is_psd(self):
        assert is_psd(np.eye(3))
        assert not is_psd(np.diag([1.0, -1.0]))
        assert is_psd(np.diag([1.0, -1e-12]))

    def test_trace_norm(self):
        assert trace_norm(np.diag([3.0, -4.0])) == pytest.approx(7.0)

    @given(arrays(np.float64, (3, 4), elements=finite))
    @settings(max_examples=50, deadline=None)
    def test_trace_norm_dominates_spectral_norm(self, a):
        """Тест: ||a||_1 >= ||a||_op"""
        assert trace_norm(a) >= np.linalg.norm(a, 2) - 1e-9


class TestOrthogonal:
    """Тестируем ортогональные построения"""

    def test_first_column(self):
        """Тест: отражение переводит e1 в a"""
        a = np.array([0.6, 0.0, 0.8])
        h = orthogonal_with_first_column(a)
        assert np.allclose(h[:, 0], a)
        assert np.allclose(h.T @ h, np.eye(3))

    def test_first_column_identity(self):
        assert np.allclose(orthogonal_with_first_column(np.array([1.0, 0.0])), np.eye(2))

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_random_orthogonal(self, n):
        q = random_orthogonal(n, np.random.default_rng(n))
        assert np.allclose(q.T @ q, np.eye(n), atol=1e-10)
