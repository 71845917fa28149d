"""Local extrema of one-dimensional QFI curves

Candidates are the sign changes of the discrete differences of a scan. Pairs
of adjacent extrema whose values differ by less than the prominence
threshold are floating-point ripple and are removed. Each remaining extremum
is refined by golden-section search on the continuous QFI inside the bracket
formed by its grid neighbours.
"""
from dataclasses import dataclass, field as dataclass_field
from enum import Enum
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union
import logging
import math

import numpy as np
import pandas as pd

from ..errors import ValidationError
from ..physics import FieldModel
from ..record import JsonData, Record
from .golden import golden_section_maximize, golden_section_minimize
from .grid import Axis, ScanGrid
from .scan import Scan

MIN_POINTS = 50
RELATIVE_PROMINENCE = 1e-9
REFINE_TOL_RANGE = (1e-10, 1e-4)


class ExtremumKind(str, Enum):
    """Kind of a local extremum"""
    MAX = 'max'
    MIN = 'min'


class Extremum(NamedTuple):
    """Refined local extremum of a curve"""
    location: float
    value: float
    kind: ExtremumKind


@dataclass
class PeakReport:
    """Extrema of a curve ordered along the axis

    :ivar axis: name of the scanned coordinate
    :ivar extrema: list of :class:`Extremum`, alternating in kind
    :ivar global_max: tuple (location, value) of the largest value of the curve
    """
    axis: str
    extrema: List[Extremum] = dataclass_field(default_factory=list)
    global_max: Tuple[float, float] = (math.nan, math.nan)

    @property
    def n_local_maxima(self) -> int:
        """Number of interior local maxima"""
        return sum(1 for e in self.extrema if e.kind is ExtremumKind.MAX)

    @property
    def maxima(self) -> List[Extremum]:
        """Local maxima only"""
        return [e for e in self.extrema if e.kind is ExtremumKind.MAX]

    @property
    def minima(self) -> List[Extremum]:
        """Local minima only"""
        return [e for e in self.extrema if e.kind is ExtremumKind.MIN]

    def to_frame(self) -> pd.DataFrame:
        """Extrema as a DataFrame with columns location, value and kind"""
        return pd.DataFrame({'location': [e.location for e in self.extrema],
                             'value': [e.value for e in self.extrema],
                             'kind': [e.kind.value for e in self.extrema]},
                            columns=['location', 'value', 'kind'])

    def to_dict(self) -> dict:
        """Flat json representation"""
        return {'axis': self.axis,
                'extrema': [{'location': e.location, 'value': e.value, 'kind': e.kind.value}
                            for e in self.extrema],
                'n_local_maxima': self.n_local_maxima,
                'global_max_location': self.global_max[0],
                'global_max_value': self.global_max[1]}


def _difference_signs(values: np.ndarray) -> np.ndarray:
    """Signs of the discrete differences, zeros replaced by the neighbouring sign

    Zeros take the previous non-zero sign. Leading zeros take the first
    non-zero sign.
    """
    signs = np.sign(np.diff(values))
    nonzero = np.flatnonzero(signs)
    if nonzero.size == 0:
        return signs
    signs[:nonzero[0]] = signs[nonzero[0]]
    for i in range(nonzero[0] + 1, signs.size):
        if signs[i] == 0:
            signs[i] = signs[i - 1]
    return signs


def _candidates(values: np.ndarray) -> List[Tuple[int, ExtremumKind]]:
    """Interior grid indices where the difference sign changes"""
    signs = _difference_signs(values)
    candidates = []
    for i in range(1, signs.size):
        if signs[i - 1] > 0 > signs[i]:
            candidates.append((i, ExtremumKind.MAX))
        elif signs[i - 1] < 0 < signs[i]:
            candidates.append((i, ExtremumKind.MIN))
    return candidates


def _remove_ripple(values: np.ndarray,
                   candidates: List[Tuple[int, ExtremumKind]],
                   threshold: float) -> List[Tuple[int, ExtremumKind]]:
    """Remove extrema whose prominence is below the threshold

    The adjacent pair with the smallest value difference is removed first.
    An extremum next to an end of the curve is removed alone when it differs
    from the end value by less than the threshold. Alternation is kept.
    """
    kept = list(candidates)
    while kept:
        gaps = [abs(values[kept[k + 1][0]] - values[kept[k][0]]) for k in range(len(kept) - 1)]
        if gaps and min(gaps) < threshold:
            k = int(np.argmin(gaps))
            del kept[k:k + 2]
            continue
        if abs(values[kept[0][0]] - values[0]) < threshold:
            del kept[0]
            continue
        if abs(values[kept[-1][0]] - values[-1]) < threshold:
            del kept[-1]
            continue
        break
    return kept


def check_refine_tol(refine_tol: float) -> None:
    """Check that the refinement tolerance lies in [1e-10, 1e-4]"""
    lower, upper = REFINE_TOL_RANGE
    if not lower <= refine_tol <= upper:
        raise ValidationError(f'refine_tol must lie in [{lower:g}, {upper:g}], got {refine_tol}')


def find_extrema(curve: Scan, refine_tol: float = 1e-8) -> PeakReport:
    """Local extrema of a one-axis scan

    :param curve: :class:`qfiunruh.analysis.Scan` with one axis and at least 50 points
    :param refine_tol: location tolerance of the refinement, in [1e-10, 1e-4]
    :return: :class:`qfiunruh.analysis.PeakReport`
    :raise: ValidationError for 2-axis scans, short scans or invalid tolerance

    :Example:

    >>> from qfiunruh.analysis import Scan, find_extrema, scan_grid
    >>> report = find_extrema(Scan(scan_grid(['a:0.001:6:601'], tau=4.0, theta=3.141592653589793)))
    >>> report.n_local_maxima
    1
    """
    check_refine_tol(refine_tol)
    grid = curve.grid
    if len(grid.axes) != 1:
        raise ValidationError(f'extrema are searched on 1-axis scans, got {len(grid.axes)} axes')
    if grid.axes[0].n_points < MIN_POINTS:
        raise ValidationError(f'extrema search needs at least {MIN_POINTS} points, got {grid.axes[0].n_points}')
    if curve.data is None:
        raise ValidationError(f'{repr(curve)}: no data available: {curve.error_msg}')

    x = curve.axis
    y = curve.values
    fn = grid.function()

    i_max = int(np.argmax(y))
    threshold = RELATIVE_PROMINENCE * float(y[i_max])
    kept = _remove_ripple(y, _candidates(y), threshold)

    extrema = []
    for i, kind in kept:
        if kind is ExtremumKind.MAX:
            location, value = golden_section_maximize(fn, x[i - 1], x[i + 1], refine_tol)
            if value < y[i]:
                location, value = x[i], y[i]
        else:
            location, value = golden_section_minimize(fn, x[i - 1], x[i + 1], refine_tol)
            if value > y[i]:
                location, value = x[i], y[i]
        extrema.append(Extremum(float(location), float(value), kind))

    global_max = (float(x[i_max]), float(y[i_max]))
    for e in extrema:
        if e.kind is ExtremumKind.MAX and e.value >= global_max[1]:
            global_max = (e.location, e.value)

    report = PeakReport(axis=grid.axes[0].name, extrema=extrema, global_max=global_max)
    logging.info(f'{repr(curve)}: {len(extrema)} extrema found, {report.n_local_maxima} local maxima')
    return report


def optimal_detection_time(a: float,
                           theta: float,
                           field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                           tau_max: float = 15.0,
                           n_points: int = 601,
                           refine_tol: float = 1e-8) -> Tuple[float, float]:
    """Time at which F(tau) reaches its first maximum

    When F(tau) has no interior maximum on [0, tau_max], the location of the
    largest value of the window is returned.

    :param a: dimensionless acceleration
    :param theta: polar angle of the initial state
    :param field: field model
    :param tau_max: end of the time window
    :param n_points: number of points of the coarse scan
    :param refine_tol: location tolerance of the refinement
    :return: tuple (tau, F)
    """
    grid = ScanGrid(axes=(Axis('tau', 0.0, tau_max, n_points),), a=a, theta=theta, field=field)
    report = find_extrema(Scan(grid, threads=1), refine_tol)
    if report.maxima:
        first = report.maxima[0]
        return first.location, first.value
    return report.global_max


def peak_track(taus: Sequence[float],
               theta: float,
               field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
               a_range: Tuple[float, float] = (1e-3, 6.0),
               n_points: int = 601,
               refine_tol: float = 1e-8) -> pd.DataFrame:
    """Local maxima of F(a) for each time

    :param taus: times at which F(a) is scanned
    :param theta: polar angle of the initial state
    :param field: field model
    :param a_range: bounds of the acceleration axis
    :param n_points: number of points of each scan
    :param refine_tol: location tolerance of the refinement
    :return: DataFrame with columns tau, peak, a_peak and F_peak, one row per maximum
    """
    rows = []
    for tau in taus:
        grid = ScanGrid(axes=(Axis('a', a_range[0], a_range[1], n_points),), tau=tau, theta=theta, field=field)
        report = find_extrema(Scan(grid, threads=1), refine_tol)
        for k, peak in enumerate(report.maxima):
            rows.append({'tau': float(tau), 'peak': k, 'a_peak': peak.location, 'F_peak': peak.value})
    return pd.DataFrame(rows, columns=['tau', 'peak', 'a_peak', 'F_peak'])


class PeakSearch(Record):
    """Extrema of a one-axis scan as a dataset

    :ivar curve: :class:`qfiunruh.analysis.Scan`
    :ivar refine_tol: location tolerance of the refinement
    :ivar report: :class:`PeakReport` once the data is computed
    """
    kind = 'peaks'

    def __init__(self, curve: Scan, refine_tol: float = 1e-8) -> None:
        """Constructor of `PeakSearch`"""
        super().__init__(curve.field)
        self.curve = curve
        self.refine_tol = refine_tol
        self.report: Optional[PeakReport] = None

    def _compute_data(self) -> pd.DataFrame:
        self.report = find_extrema(self.curve, self.refine_tol)
        return self.report.to_frame()

    @property
    def label(self) -> str:
        return self.curve.label

    def to_json(self) -> str:
        """Return the report as json text"""
        if self.data is None:
            return ''
        return str(JsonData(self.report.to_dict())) + '\n'

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({repr(self.curve)})'


if __name__ == "__main__":
    pass
