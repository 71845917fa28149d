"""Maximum of the QFI over the acceleration as a function of time"""
from typing import Optional, Sequence, Tuple, Union
import logging
import math

import numpy as np
import pandas as pd

from ..errors import ValidationError
from ..physics import FieldModel, asymptotic_qfi, qfi_array
from ..record import Record
from .golden import golden_section_maximize
from .grid import ScanGrid
from .peaks import check_refine_tol
from .scan import evaluate

DEFAULT_A_RANGE = (1e-3, 6.0)
MIN_COARSE_POINTS = 400


def stationary_fmax(tol: float = 1e-10) -> Tuple[float, float]:
    """Maximum over a of the long-time QFI (pi^2 / a^4) sech^2(pi / a)

    :param tol: location tolerance
    :return: tuple (a_star, F_star), about (1.5211, 0.114801)
    """
    return golden_section_maximize(asymptotic_qfi, 0.5, 5.0, tol)


def _check_inputs(taus: np.ndarray, theta: float, a_range: Tuple[float, float], n_coarse: int) -> None:
    """Validate the arguments of :func:`fmax_curve`"""
    if taus.size == 0:
        raise ValidationError('tau grid is empty')
    if not np.all(np.isfinite(taus)) or np.any(taus < 0) or np.any(taus > ScanGrid.TAU_MAX):
        raise ValidationError(f'tau values must lie in [0, {ScanGrid.TAU_MAX:g}]')
    lower, upper = a_range
    if not 0.0 < lower < upper <= ScanGrid.A_MAX:
        raise ValidationError(f'a range must lie in (0, {ScanGrid.A_MAX:g}] with min < max, got {a_range}')
    if not (math.isfinite(theta) and 0.0 <= theta <= math.pi):
        raise ValidationError(f'theta must lie in [0, pi], got {theta}')
    if n_coarse < MIN_COARSE_POINTS:
        raise ValidationError(f'the coarse acceleration grid needs at least {MIN_COARSE_POINTS} points')


def fmax_curve(tau_grid: Sequence[float],
               theta: float,
               field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
               a_range: Tuple[float, float] = DEFAULT_A_RANGE,
               n_coarse: int = 601,
               refine_tol: float = 1e-8,
               threads: int = 0) -> pd.DataFrame:
    """F_max(tau) = max over a of F(a, tau, theta)

    For each time the best point of a coarse acceleration grid is refined by
    golden-section search between its two neighbours. The refined value
    replaces the coarse one only when it is larger.

    :param tau_grid: times
    :param theta: polar angle of the initial state
    :param field: field model
    :param a_range: bounds of the acceleration search
    :param n_coarse: number of points of the coarse grid, at least 400
    :param refine_tol: location tolerance of the refinement
    :param threads: number of worker threads for the coarse grid
    :return: DataFrame with columns tau, F_max and a_argmax
    """
    taus = np.atleast_1d(np.asarray(tau_grid, dtype=float))
    _check_inputs(taus, theta, a_range, n_coarse)
    check_refine_tol(refine_tol)
    field = FieldModel.parse(field)

    a_values = np.linspace(a_range[0], a_range[1], n_coarse)
    coarse = evaluate(a_values[np.newaxis, :], taus[:, np.newaxis], theta, field, threads)

    f_max = np.empty(taus.size)
    a_argmax = np.empty(taus.size)
    for k, tau in enumerate(taus):
        i = int(np.argmax(coarse[k]))
        best_a, best_f = a_values[i], coarse[k, i]
        lower = a_values[max(i - 1, 0)]
        upper = a_values[min(i + 1, n_coarse - 1)]
        location, value = golden_section_maximize(lambda a: float(qfi_array(a, tau, theta, field)),
                                                  lower, upper, refine_tol)
        if value > best_f:
            best_a, best_f = location, value
        f_max[k] = best_f
        a_argmax[k] = best_a

    return pd.DataFrame({'tau': taus, 'F_max': f_max, 'a_argmax': a_argmax})


class FmaxCurve(Record):
    """F_max(tau) curve as a dataset

    :ivar tau_grid: times
    :ivar theta: polar angle of the initial state
    :ivar a_range: bounds of the acceleration search

    :Example:

    >>> import numpy as np
    >>> from qfiunruh.analysis import FmaxCurve
    >>> curve = FmaxCurve(np.linspace(0, 30, 301), theta=0.0, field='scalar')
    >>> curve.save()
    """
    kind = 'fmax'

    def __init__(self,
                 tau_grid: Sequence[float],
                 theta: float,
                 field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                 a_range: Tuple[float, float] = DEFAULT_A_RANGE,
                 refine_tol: float = 1e-8,
                 threads: int = 0,
                 data: Optional[pd.DataFrame] = None) -> None:
        """Constructor of `FmaxCurve`, the data is computed when first read
        """
        super().__init__(field, data)
        self.tau_grid = np.atleast_1d(np.asarray(tau_grid, dtype=float))
        self.theta = theta
        self.a_range = tuple(a_range)
        self.refine_tol = refine_tol
        self.threads = threads

    def _compute_data(self) -> pd.DataFrame:
        data = fmax_curve(self.tau_grid, self.theta, self.field, self.a_range,
                          refine_tol=self.refine_tol, threads=self.threads)
        logging.info(f'{repr(self)}: F_max computed for {len(data)} times')
        return data

    @property
    def label(self) -> str:
        return f'theta{self.theta:.4g}_{self.field.value}'

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(theta={self.theta:.6g}, {self.tau_grid.size} times, " \
               f"field='{self.field.value}')"


if __name__ == "__main__":
    pass
