"""Scan grids over (tau, a, theta)"""
from dataclasses import dataclass
from typing import Callable, ClassVar, Dict, List, Tuple, Union
import math

import numpy as np

from ..errors import ValidationError, QfiUnruhError
from ..physics import FieldModel, qfi_array

AXIS_NAMES = ('tau', 'a', 'theta')


@dataclass(frozen=True)
class Axis:
    """Linear axis of a scan

    :ivar name: 'tau', 'a' or 'theta'
    :ivar min: first value
    :ivar max: last value
    :ivar n_points: number of points, at least 2
    """
    name: str
    min: float
    max: float
    n_points: int

    def __post_init__(self) -> None:
        if self.name not in AXIS_NAMES:
            raise ValidationError(f'unknown axis "{self.name}", expected one of {", ".join(AXIS_NAMES)}')
        if self.n_points < 2:
            raise ValidationError(f'axis {self.name} needs at least 2 points, got {self.n_points}')
        if not (math.isfinite(self.min) and math.isfinite(self.max)) or self.min >= self.max:
            raise ValidationError(f'axis {self.name} needs min < max, got {self.min} and {self.max}')

    @classmethod
    def parse(cls, spec: str) -> 'Axis':
        """Build an axis from 'name:min:max:n_points'

        :param spec: axis definition, for example 'tau:0:15:601'
        :return: :class:`qfiunruh.analysis.Axis`
        :raise: ValidationError for malformed definitions
        """
        parts = spec.split(':')
        if len(parts) != 4:
            raise ValidationError(f'axis must be given as name:min:max:npoints, got "{spec}"')
        try:
            return cls(parts[0], float(parts[1]), float(parts[2]), int(parts[3]))
        except ValueError as err:
            if isinstance(err, QfiUnruhError):
                raise
            raise ValidationError(f'invalid number in axis "{spec}"') from None

    def values(self) -> np.ndarray:
        """Grid values, both ends included"""
        return np.linspace(self.min, self.max, self.n_points)

    def __str__(self) -> str:
        return f'{self.name}:{self.min:g}:{self.max:g}:{self.n_points}'


@dataclass(frozen=True)
class ScanGrid:
    """Axes of a scan and the values of the remaining coordinates

    :ivar axes: one or two :class:`qfiunruh.analysis.Axis`
    :ivar a: acceleration when 'a' is not an axis
    :ivar tau: time when 'tau' is not an axis
    :ivar theta: polar angle when 'theta' is not an axis
    :ivar field: field model
    """
    A_MAX: ClassVar[float] = 50.0
    TAU_MAX: ClassVar[float] = 1000.0

    axes: Tuple[Axis, ...]
    a: float = 1.0
    tau: float = 1.0
    theta: float = 0.0
    field: FieldModel = FieldModel.ELECTROMAGNETIC

    def __post_init__(self) -> None:
        object.__setattr__(self, 'axes', tuple(self.axes))
        try:
            object.__setattr__(self, 'field', FieldModel.parse(self.field))
        except QfiUnruhError as err:
            raise ValidationError(str(err)) from None

        if not 1 <= len(self.axes) <= 2:
            raise ValidationError(f'a scan needs one or two axes, got {len(self.axes)}')
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise ValidationError(f'axes must be distinct, got {", ".join(names)}')

        for axis in self.axes:
            self._check_range(axis.name, axis.min, axis.max)
        for name in AXIS_NAMES:
            if name not in names:
                value = getattr(self, name)
                self._check_range(name, value, value)

    def _check_range(self, name: str, lower: float, upper: float) -> None:
        """Check that [lower, upper] lies in the domain of the coordinate"""
        if name == 'theta' and not (0.0 <= lower and upper <= math.pi):
            raise ValidationError(f'theta must lie in [0, pi], got [{lower}, {upper}]')
        if name == 'a' and not (0.0 < lower and upper <= self.A_MAX):
            raise ValidationError(f'a must lie in (0, {self.A_MAX:g}], got [{lower}, {upper}]')
        if name == 'tau' and not (0.0 <= lower and upper <= self.TAU_MAX):
            raise ValidationError(f'tau must lie in [0, {self.TAU_MAX:g}], got [{lower}, {upper}]')

    @property
    def names(self) -> List[str]:
        """Names of the axes"""
        return [axis.name for axis in self.axes]

    @property
    def shape(self) -> Tuple[int, ...]:
        """Number of points along each axis"""
        return tuple(axis.n_points for axis in self.axes)

    @property
    def fixed(self) -> Dict[str, float]:
        """Values of the coordinates that are not axes"""
        return {name: float(getattr(self, name)) for name in AXIS_NAMES if name not in self.names}

    def coordinates(self) -> Dict[str, np.ndarray]:
        """Broadcast coordinate arrays, axes in 'ij' order

        :return: dict with 'tau', 'a' and 'theta' arrays of shape :attr:`shape`
        """
        mesh = np.meshgrid(*(axis.values() for axis in self.axes), indexing='ij')
        coords = {axis.name: values for axis, values in zip(self.axes, mesh)}
        for name, value in self.fixed.items():
            coords[name] = np.full(self.shape, value)
        return coords

    def function(self) -> Callable[[float], float]:
        """F as a function of the single axis, the other coordinates fixed

        :return: callable of one real variable
        :raise: ValidationError for 2-axis grids
        """
        if len(self.axes) != 1:
            raise ValidationError('a continuous function is only defined for 1-axis grids')
        name = self.axes[0].name
        fixed = self.fixed

        def fn(x: float) -> float:
            args = dict(fixed, **{name: x})
            return float(qfi_array(args['a'], args['tau'], args['theta'], self.field))

        return fn

    def __str__(self) -> str:
        fixed = ', '.join(f'{name}={value:g}' for name, value in self.fixed.items())
        return f'{", ".join(str(axis) for axis in self.axes)}, {fixed}, field={self.field.value!r}'


def scan_grid(axes: List[Union[Axis, str]], **fixed) -> ScanGrid:
    """Build a :class:`ScanGrid` from axis definitions

    :param axes: list of axes or of 'name:min:max:n' strings
    :param fixed: values of a, tau, theta and field
    :return: :class:`qfiunruh.analysis.ScanGrid`
    """
    return ScanGrid(axes=tuple(axis if isinstance(axis, Axis) else Axis.parse(axis) for axis in axes),
                    **fixed)


if __name__ == "__main__":
    pass
