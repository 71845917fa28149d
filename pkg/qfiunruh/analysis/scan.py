"""Dense evaluation of the QFI over scan grids"""
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Union
import logging
import os

import numpy as np
import pandas as pd

from ..errors import ValidationError
from ..physics import FieldModel, qfi, qfi_array
from ..physics.dynamics import DEFAULT_OMEGA_RATIO
from ..record import JsonData, Record
from .grid import ScanGrid

# Below this size a scan is evaluated in the calling thread
MIN_PARALLEL_POINTS = 4096


def worker_count(threads: int = 0) -> int:
    """Number of worker threads, 0 means one per CPU

    :param threads: requested number of threads, >= 0
    :return: number of workers, at least 1
    """
    if threads < 0:
        raise ValidationError(f"threads must be >= 0, got {threads}")
    if threads == 0:
        return os.cpu_count() or 1
    return threads


def evaluate(a: np.ndarray,
             tau: np.ndarray,
             theta: np.ndarray,
             field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
             threads: int = 0) -> np.ndarray:
    """QFI on flat coordinate arrays, split in chunks over a thread pool

    Chunks are reassembled in index order, so the result does not depend on
    the number of workers.

    :param a: accelerations
    :param tau: times
    :param theta: polar angles
    :param field: field model
    :param threads: number of worker threads, 0 means one per CPU
    :return: array of QFI values with the shape of the inputs
    """
    a, tau, theta = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (a, tau, theta)))
    shape = a.shape
    a, tau, theta = a.ravel(), tau.ravel(), theta.ravel()
    workers = worker_count(threads)

    if workers == 1 or a.size < MIN_PARALLEL_POINTS:
        return qfi_array(a, tau, theta, field).reshape(shape)

    bounds = np.linspace(0, a.size, workers + 1).astype(int)
    chunks = [slice(lower, upper) for lower, upper in zip(bounds[:-1], bounds[1:]) if upper > lower]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        parts = list(executor.map(lambda s: qfi_array(a[s], tau[s], theta[s], field), chunks))

    return np.concatenate(parts).reshape(shape)


def scan(grid: ScanGrid, threads: int = 0) -> pd.DataFrame:
    """Evaluate the QFI on every point of the grid

    Rows follow the row-major order of the axes: the last axis varies fastest.

    :param grid: :class:`qfiunruh.analysis.ScanGrid`
    :param threads: number of worker threads, 0 means one per CPU
    :return: DataFrame with one column per axis and a column 'F'

    :Example:

    >>> from qfiunruh.analysis import scan, scan_grid
    >>> table = scan(scan_grid(['tau:0:15:601'], a=1.0, theta=0.0))
    >>> table.columns.tolist()
    ['tau', 'F']
    """
    coords = grid.coordinates()
    values = evaluate(coords['a'], coords['tau'], coords['theta'], grid.field, threads)

    table = {name: coords[name].ravel() for name in grid.names}
    table['F'] = values.ravel()
    return pd.DataFrame(table)


class Scan(Record):
    """Scan of the QFI over a grid

    :ivar grid: :class:`qfiunruh.analysis.ScanGrid`
    :ivar threads: number of worker threads, 0 means one per CPU

    :Example:

    >>> from qfiunruh.analysis import Scan, scan_grid
    >>> s = Scan(scan_grid(['theta:0:3.141592653589793:401'], a=1.0, tau=0.5))
    >>> s.save()

    Will compute the scan and store it in `records/scan/`.
    """
    kind = 'scan'

    def __init__(self, grid: ScanGrid, threads: int = 0, data: Optional[pd.DataFrame] = None) -> None:
        """Constructor of `Scan`, the data is computed when first read
        """
        super().__init__(grid.field, data)
        self.grid = grid
        self.threads = threads

    def _compute_data(self) -> pd.DataFrame:
        data = scan(self.grid, self.threads)
        logging.info(f'{repr(self)}: {len(data)} points evaluated')
        return data

    @property
    def label(self) -> str:
        return '_'.join(self.grid.names) + f'_{self.field.value}'

    @property
    def axis(self) -> np.ndarray:
        """Values of the first axis"""
        return self.grid.axes[0].values()

    @property
    def values(self) -> Optional[np.ndarray]:
        """QFI values with the shape of the grid"""
        if self.data is None:
            return None
        return self.data['F'].to_numpy().reshape(self.grid.shape)

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({', '.join(str(axis) for axis in self.grid.axes)}, " \
               f"field='{self.field.value}')"


class Evaluation(Record):
    """QFI at a single point with its diagnostics

    :ivar a: dimensionless acceleration
    :ivar tau: time in units of 1 / gamma_0
    :ivar theta: polar angle of the initial state
    :ivar phi: azimuth of the initial state
    :ivar omega_ratio: Omega / gamma_0
    """
    kind = 'eval'

    def __init__(self,
                 a: float,
                 tau: float,
                 theta: float,
                 field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                 phi: float = 0.0,
                 omega_ratio: float = DEFAULT_OMEGA_RATIO) -> None:
        """Constructor of `Evaluation`"""
        super().__init__(field)
        self.a = a
        self.tau = tau
        self.theta = theta
        self.phi = phi
        self.omega_ratio = omega_ratio

    def _compute_data(self) -> JsonData:
        result = qfi(self.a, self.tau, self.theta, self.field, self.phi, self.omega_ratio)
        return JsonData({'a': float(self.a),
                         'tau': float(self.tau),
                         'theta': float(self.theta),
                         'field': self.field.value,
                         'F': result.value,
                         'branch': result.branch.value,
                         'bloch_norm': result.bloch_norm,
                         'near_singular': result.near_singular})

    @property
    def label(self) -> str:
        return f'a{self.a:g}_tau{self.tau:g}_theta{self.theta:.4g}_{self.field.value}'

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(a={self.a:g}, tau={self.tau:g}, theta={self.theta:.6g}, " \
               f"field='{self.field.value}')"


if __name__ == "__main__":
    pass
