"""
Double Butcher tableaux of the IMEX Runge-Kutta schemes.

A scheme pairs a strictly lower-triangular explicit matrix Ã with a
lower-triangular (DIRK) implicit matrix A. It is of type A when A is invertible and
of type CK when the first implicit row vanishes and the trailing block is
invertible. It is globally stiffly accurate (GSA) when the last rows of both
matrices equal the corresponding weights, so the step result is the last stage.
"""
import math
from enum import Enum
from typing import Callable, Dict, NamedTuple, Sequence

import numpy as np

from ..errors import ConfigurationError, TableauClassificationError

CLASSIFICATION_TOL = 1e-14


class SchemeKind(str, Enum):
    """IMEX family by the structure of the implicit matrix"""

    TYPE_A = "A"
    TYPE_CK = "CK"


class SchemeClassification(NamedTuple):
    """Result of ``classify``"""

    kind: SchemeKind
    isa: bool
    gsa: bool


class DoubleButcherTableau:
    """
    Paired explicit/implicit Butcher tableau

    Coefficients are kept as float64 numpy arrays: they drive host-side stage
    bookkeeping and are never traced.

    # Example usage:
    tableau = tableau_ars222()
    print(tableau.nu, tableau.c_ex)
    """

    def __init__(
        self,
        name: str,
        a_ex: Sequence[Sequence[float]],
        a_im: Sequence[Sequence[float]],
        w_ex: Sequence[float],
        w_im: Sequence[float],
    ):
        """Tableau constructor

        Args:
            name (str): Identifier
            a_ex (Sequence[Sequence[float]]): Explicit matrix Ã, ν x ν
            a_im (Sequence[Sequence[float]]): Implicit matrix A, ν x ν
            w_ex (Sequence[float]): Explicit weights w̃
            w_im (Sequence[float]): Implicit weights w

        Raises:
            ValueError: When the shapes disagree
            ValueError: When Ã is not strictly lower triangular or A not lower triangular
            ValueError: When a weight vector does not sum to one
        """
        a_ex = np.asarray(a_ex, dtype=np.float64)
        a_im = np.asarray(a_im, dtype=np.float64)
        w_ex = np.asarray(w_ex, dtype=np.float64)
        w_im = np.asarray(w_im, dtype=np.float64)
        nu = a_ex.shape[0]

        if a_ex.shape != (nu, nu) or a_im.shape != (nu, nu) or w_ex.shape != (nu,) or w_im.shape != (nu,):
            raise ValueError(f"Tableau {name!r} has inconsistent shapes")
        if np.any(np.triu(a_ex) != 0.0):
            raise ValueError(f"Explicit matrix of {name!r} must be strictly lower triangular")
        if np.any(np.triu(a_im, 1) != 0.0):
            raise ValueError(f"Implicit matrix of {name!r} must be lower triangular")
        if abs(w_ex.sum() - 1.0) > 1e-12 or abs(w_im.sum() - 1.0) > 1e-12:
            raise ValueError(f"Weights of {name!r} must sum to one")

        self._name = name
        self._a_ex = a_ex
        self._a_im = a_im
        self._w_ex = w_ex
        self._w_im = w_im

    @property
    def name(self) -> str:
        """
        :return: Scheme identifier
        """
        return self._name

    @property
    def nu(self) -> int:
        """
        :return: Number of stages
        """
        return self._a_ex.shape[0]

    @property
    def a_ex(self) -> np.ndarray:
        """
        :return: Explicit matrix Ã
        """
        return self._a_ex

    @property
    def a_im(self) -> np.ndarray:
        """
        :return: Implicit matrix A
        """
        return self._a_im

    @property
    def w_ex(self) -> np.ndarray:
        """
        :return: Explicit weights w̃
        """
        return self._w_ex

    @property
    def w_im(self) -> np.ndarray:
        """
        :return: Implicit weights w
        """
        return self._w_im

    @property
    def c_ex(self) -> np.ndarray:
        """
        :return: Explicit abscissae c̃_i = Σ_j ã_ij
        """
        return self._a_ex.sum(axis=1)

    @property
    def c_im(self) -> np.ndarray:
        """
        :return: Implicit abscissae c_i = Σ_j a_ij
        """
        return self._a_im.sum(axis=1)


def classify(tableau: DoubleButcherTableau, tol: float = CLASSIFICATION_TOL) -> SchemeClassification:
    """
    Type A / type CK classification with the ISA and GSA flags

    :param tableau: Tableau to classify
    :param tol: Tolerance of the zero and row-equals-weights tests
    :return: SchemeClassification
    :raises TableauClassificationError: When the tableau is neither type A nor type CK
    """
    diag = np.diag(tableau.a_im)
    if np.all(np.abs(diag) > tol):
        kind = SchemeKind.TYPE_A
    elif np.all(np.abs(tableau.a_im[0]) <= tol) and np.all(np.abs(diag[1:]) > tol):
        kind = SchemeKind.TYPE_CK
    else:
        raise TableauClassificationError(f"Tableau {tableau.name!r} is neither of type A nor of type CK")

    isa = bool(np.all(np.abs(tableau.a_im[-1] - tableau.w_im) <= tol))
    gsa = isa and bool(np.all(np.abs(tableau.a_ex[-1] - tableau.w_ex) <= tol))
    return SchemeClassification(kind, isa, gsa)


def tableau_euler() -> DoubleButcherTableau:
    """
    Forward/backward Euler written as a two-stage GSA pair: the second stage
    repeats the implicit solve with the explicit term of the first one, which is
    the first-order IMEX Euler update with its last stage as the result.
    """
    return DoubleButcherTableau(
        "euler",
        [[0.0, 0.0], [1.0, 0.0]],
        [[1.0, 0.0], [0.0, 1.0]],
        [1.0, 0.0],
        [0.0, 1.0],
    )


def tableau_ars222() -> DoubleButcherTableau:
    """Second-order ARS(2,2,2), γ = 1 - √2/2 and δ = 1 - 1/(2γ)"""
    gamma = 1.0 - math.sqrt(2.0) / 2.0
    delta = 1.0 - 1.0 / (2.0 * gamma)
    return DoubleButcherTableau(
        "ars222",
        [[0.0, 0.0, 0.0], [gamma, 0.0, 0.0], [delta, 1.0 - delta, 0.0]],
        [[0.0, 0.0, 0.0], [0.0, gamma, 0.0], [0.0, 1.0 - gamma, gamma]],
        [delta, 1.0 - delta, 0.0],
        [0.0, 1.0 - gamma, gamma],
    )


def tableau_bpr353() -> DoubleButcherTableau:
    """Third-order BPR(3,5,3)"""
    return DoubleButcherTableau(
        "bpr353",
        [
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [1.0, 0.0, 0.0, 0.0, 0.0],
            [4.0 / 9.0, 2.0 / 9.0, 0.0, 0.0, 0.0],
            [1.0 / 4.0, 0.0, 3.0 / 4.0, 0.0, 0.0],
            [1.0 / 4.0, 0.0, 3.0 / 4.0, 0.0, 0.0],
        ],
        [
            [0.0, 0.0, 0.0, 0.0, 0.0],
            [1.0 / 2.0, 1.0 / 2.0, 0.0, 0.0, 0.0],
            [5.0 / 18.0, -1.0 / 9.0, 1.0 / 2.0, 0.0, 0.0],
            [1.0 / 2.0, 0.0, 0.0, 1.0 / 2.0, 0.0],
            [1.0 / 4.0, 0.0, 3.0 / 4.0, -1.0 / 2.0, 1.0 / 2.0],
        ],
        [1.0 / 4.0, 0.0, 3.0 / 4.0, 0.0, 0.0],
        [1.0 / 4.0, 0.0, 3.0 / 4.0, -1.0 / 2.0, 1.0 / 2.0],
    )


TABLEAUX: Dict[str, Callable[[], DoubleButcherTableau]] = {
    "euler": tableau_euler,
    "ars222": tableau_ars222,
    "bpr353": tableau_bpr353,
}

SCHEME_ORDER = {"euler": 1, "ars222": 2, "bpr353": 3}


def get_tableau(name: str) -> DoubleButcherTableau:
    """
    :param name: "euler", "ars222" or "bpr353"
    :return: The named tableau
    :raises ConfigurationError: For unknown names
    """
    try:
        return TABLEAUX[name]()
    except KeyError as err:
        raise ConfigurationError(f"Unknown scheme {name!r}, expected one of {sorted(TABLEAUX)}") from err
