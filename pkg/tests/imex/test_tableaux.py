import numpy as np
import pytest

from jaxkin.errors import ConfigurationError, TableauClassificationError
from jaxkin.imex import TABLEAUX, DoubleButcherTableau, SchemeKind, classify, get_tableau

TOL = 1e-14


@pytest.mark.parametrize(
    "name, kind, nu",
    [("euler", SchemeKind.TYPE_A, 2), ("ars222", SchemeKind.TYPE_CK, 3), ("bpr353", SchemeKind.TYPE_CK, 5)],
)
def test_classification(name, kind, nu):
    tableau = get_tableau(name)
    result = classify(tableau)

    assert tableau.nu == nu
    assert result.kind is kind
    assert result.isa and result.gsa


@pytest.mark.parametrize("name", sorted(TABLEAUX))
def test_first_and_second_order_conditions(name):
    tableau = get_tableau(name)

    assert np.isclose(tableau.w_ex.sum(), 1.0, atol=TOL)
    assert np.isclose(tableau.w_im.sum(), 1.0, atol=TOL)
    if name != "euler":
        assert np.isclose(tableau.w_ex @ tableau.c_ex, 0.5, atol=TOL)
        assert np.isclose(tableau.w_im @ tableau.c_im, 0.5, atol=TOL)


def test_third_order_conditions():
    tableau = get_tableau("bpr353")

    assert np.isclose(tableau.w_ex @ tableau.c_ex**2, 1.0 / 3.0, atol=TOL)
    assert np.isclose(tableau.w_im @ tableau.c_im**2, 1.0 / 3.0, atol=TOL)
    assert np.allclose(tableau.c_ex, tableau.c_im, atol=TOL)


def test_ars222_coefficients():
    tableau = get_tableau("ars222")
    gamma = 1.0 - np.sqrt(2.0) / 2.0

    assert np.isclose(tableau.a_im[1, 1], gamma, atol=TOL)
    assert np.isclose(tableau.a_ex[2, 0], 1.0 - 1.0 / (2.0 * gamma), atol=TOL)


class TestInvalidTableaux:
    def test_shapes(self):
        with pytest.raises(ValueError):
            DoubleButcherTableau("bad", [[0.0]], [[1.0, 0.0], [0.0, 1.0]], [1.0], [1.0])

    def test_explicit_diagonal(self):
        with pytest.raises(ValueError):
            DoubleButcherTableau("bad", [[1.0]], [[1.0]], [1.0], [1.0])

    def test_upper_implicit_entry(self):
        with pytest.raises(ValueError):
            DoubleButcherTableau("bad", [[0.0, 0.0], [1.0, 0.0]], [[0.5, 0.5], [0.0, 1.0]], [1.0, 0.0], [0.0, 1.0])

    def test_weights(self):
        with pytest.raises(ValueError):
            DoubleButcherTableau("bad", [[0.0]], [[1.0]], [0.5], [1.0])

    def test_neither_type(self):
        a_ex, a_im = [[0.0, 0.0], [1.0, 0.0]], [[1.0, 0.0], [0.0, 0.0]]
        tableau = DoubleButcherTableau("odd", a_ex, a_im, [0.5, 0.5], [0.5, 0.5])
        with pytest.raises(TableauClassificationError):
            classify(tableau)

    def test_unknown_name(self):
        with pytest.raises(ConfigurationError):
            get_tableau("rk4")
