"""Preset datasets of the QFI figures

fig1  F(tau, a) surfaces for theta in {0, pi/2, pi}
fig2  F(tau) for a in {0.5, 1, 1.5, 2.5}
fig3  F(a, theta) surfaces for tau in {0.5, 4}
fig4  F(theta) for tau in {0.1, 0.5, 1, 4} and a in {0.1, 1, 3}
fig5  F(a) for tau in {0.5, 1, 4, 9}
fig6  F_max(tau) for both field models
"""
from typing import Dict, Union
import math

import numpy as np

from ..errors import ValidationError
from ..physics import FieldModel
from ..record import Record
from .fmax import FmaxCurve
from .grid import Axis, ScanGrid
from .scan import Scan

THETAS = {'theta0': 0.0, 'theta_pi2': math.pi / 2, 'theta_pi': math.pi}

TAU_AXIS = Axis('tau', 0.0, 15.0, 601)
A_AXIS = Axis('a', 1e-3, 6.0, 601)
THETA_AXIS = Axis('theta', 0.0, math.pi, 401)

FIGURES = ('fig1', 'fig2', 'fig3', 'fig4', 'fig5', 'fig6')


def figure_scans(name: str, field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC) -> Dict[str, ScanGrid]:
    """Scan grids of a figure, indexed by curve label

    :param name: 'fig1' to 'fig5'
    :param field: field model
    :return: dict label -> :class:`qfiunruh.analysis.ScanGrid`
    :raise: ValidationError for unknown names
    """
    grids = {}
    if name == 'fig1':
        for tag, theta in THETAS.items():
            grids[tag] = ScanGrid(axes=(Axis('tau', 0.0, 15.0, 151), Axis('a', 1e-3, 6.0, 121)),
                                  theta=theta, field=field)
    elif name == 'fig2':
        for tag, theta in THETAS.items():
            for a in (0.5, 1.0, 1.5, 2.5):
                grids[f'{tag}_a{a:g}'] = ScanGrid(axes=(TAU_AXIS,), a=a, theta=theta, field=field)
    elif name == 'fig3':
        for tau in (0.5, 4.0):
            grids[f'tau{tau:g}'] = ScanGrid(axes=(Axis('a', 1e-3, 6.0, 121), Axis('theta', 0.0, math.pi, 101)),
                                            tau=tau, field=field)
    elif name == 'fig4':
        for a in (0.1, 1.0, 3.0):
            for tau in (0.1, 0.5, 1.0, 4.0):
                grids[f'a{a:g}_tau{tau:g}'] = ScanGrid(axes=(THETA_AXIS,), a=a, tau=tau, field=field)
    elif name == 'fig5':
        for tag, theta in THETAS.items():
            for tau in (0.5, 1.0, 4.0, 9.0):
                grids[f'{tag}_tau{tau:g}'] = ScanGrid(axes=(A_AXIS,), tau=tau, theta=theta, field=field)
    else:
        raise ValidationError(f'unknown figure "{name}", expected one of fig1 to fig5')
    return grids


def figure_records(name: str,
                   field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                   threads: int = 0) -> Dict[str, Record]:
    """Datasets of a figure, indexed by curve label

    fig6 contains the F_max curves of both field models whatever `field` is.

    :param name: 'fig1' to 'fig6'
    :param field: field model of fig1 to fig5
    :param threads: number of worker threads
    :return: dict label -> :class:`qfiunruh.record.Record`
    """
    if name == 'fig6':
        taus = np.linspace(0.0, 30.0, 301)
        return {f'{model.value}_{tag}': FmaxCurve(taus, theta, model, threads=threads)
                for model in FieldModel for tag, theta in THETAS.items()}
    return {label: Scan(grid, threads) for label, grid in figure_scans(name, field).items()}


if __name__ == "__main__":
    pass
