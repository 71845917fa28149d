import json
import math
import os
from dataclasses import dataclass, fields, asdict
from typing import Any, Dict, Optional, Tuple

from .errors import ValidationError, QfiUnruhError
from .physics import FieldModel

SUBCOMMANDS = ('eval', 'scan', 'peaks', 'fmax', 'crlb', 'figure')
FORMATS = ('csv', 'json')

CONFIG_ENV = 'QFIUNRUH_CONFIG'
THREADS_ENV = 'QFIUNRUH_THREADS'

INT_FIELDS = ('seed', 'shots', 'trials', 'threads')
FLOAT_FIELDS = ('a', 'tau', 'theta', 'phi', 'omega_ratio', 'refine_tol')
STR_FIELDS = ('output', 'format', 'figure', 'output_dir')


@dataclass(frozen=True)
class RunConfig:
    """Validated configuration of a command line run

    Values come from three layers, each one overriding the previous:
    the defaults below, a json configuration file and the command line.

    .. note:: The json file can be given with `--config` or with the path in
        the `QFIUNRUH_CONFIG` environment variable. Its keys are the field
        names of this class, without `subcommand`.

    :Example:

    >>> from qfiunruh import RunConfig
    >>> config = RunConfig.build('scan', {'field': 'scalar'}, {'axes': ['tau:0:15:601'], 'a': 1.0})
    >>> config.field
    <FieldModel.SCALAR: 'scalar'>

    :ivar subcommand: one of eval, scan, peaks, fmax, crlb, figure
    :ivar field: field model
    :ivar axes: axis definitions 'name:min:max:npoints', at most two
    :ivar a: acceleration
    :ivar tau: time
    :ivar theta: polar angle of the initial state
    :ivar phi: azimuth of the initial state
    :ivar omega_ratio: Omega / gamma_0
    :ivar a_range: bounds of the acceleration search of fmax
    :ivar output: output file, None for the standard output
    :ivar format: csv or json, default json for crlb and csv otherwise
    :ivar seed: seed of crlb
    :ivar shots: measured copies per trial of crlb
    :ivar trials: trials of crlb
    :ivar threads: worker threads, 0 means one per CPU
    :ivar refine_tol: location tolerance of the extremum refinement
    :ivar figure: name of the figure preset
    :ivar output_dir: folder of the figure datasets
    """
    subcommand: str
    field: FieldModel = FieldModel.ELECTROMAGNETIC
    axes: Tuple[str, ...] = ()
    a: float = 1.0
    tau: float = 1.0
    theta: float = 0.0
    phi: float = 0.0
    omega_ratio: float = 100.0
    a_range: Tuple[float, float] = (1e-3, 6.0)
    output: Optional[str] = None
    format: Optional[str] = None
    seed: int = 0
    shots: int = 100000
    trials: int = 200
    threads: int = 0
    refine_tol: float = 1e-8
    figure: Optional[str] = None
    output_dir: str = '.'

    def __post_init__(self) -> None:
        if self.subcommand not in SUBCOMMANDS:
            raise ValidationError(f'unknown subcommand "{self.subcommand}"')
        self._check_types()
        try:
            object.__setattr__(self, 'field', FieldModel.parse(self.field))
        except QfiUnruhError as err:
            raise ValidationError(str(err)) from None
        object.__setattr__(self, 'axes', tuple(self.axes))
        object.__setattr__(self, 'a_range', tuple(float(v) for v in self.a_range))
        for name in FLOAT_FIELDS:
            object.__setattr__(self, name, float(getattr(self, name)))
        if self.format is None:
            # the estimation report is a single json object
            object.__setattr__(self, 'format', 'json' if self.subcommand == 'crlb' else 'csv')

        if len(self.axes) > 2:
            raise ValidationError(f'at most two axes are accepted, got {len(self.axes)}')
        if self.format not in FORMATS:
            raise ValidationError(f'format must be csv or json, got "{self.format}"')
        for name in ('a', 'tau', 'theta', 'phi', 'omega_ratio', 'refine_tol'):
            if not math.isfinite(getattr(self, name)):
                raise ValidationError(f'{name} must be finite, got {getattr(self, name)}')
        if self.a < 0:
            raise ValidationError(f'a must be non-negative, got {self.a}')
        if self.tau < 0:
            raise ValidationError(f'tau must be non-negative, got {self.tau}')
        if not 0.0 <= self.theta <= math.pi:
            raise ValidationError(f'theta must lie in [0, pi], got {self.theta}')
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValidationError(f'phi must lie in [0, 2 pi), got {self.phi}')
        if self.omega_ratio <= 0:
            raise ValidationError(f'omega_ratio must be positive, got {self.omega_ratio}')
        if len(self.a_range) != 2 or not 0.0 < self.a_range[0] < self.a_range[1]:
            raise ValidationError(f'a_range must satisfy 0 < min < max, got {self.a_range}')
        if not 0 <= self.seed < 2 ** 64:
            raise ValidationError(f'seed must be a 64-bit unsigned integer, got {self.seed}')
        if self.shots <= 0 or self.trials <= 0:
            raise ValidationError('shots and trials must be positive')
        if self.threads < 0:
            raise ValidationError(f'threads must be >= 0, got {self.threads}')

    def _check_types(self) -> None:
        """Check the json types of the values, bool is neither an integer nor a number here"""
        def is_int(value: Any) -> bool:
            return isinstance(value, int) and not isinstance(value, bool)

        def is_number(value: Any) -> bool:
            return isinstance(value, (int, float)) and not isinstance(value, bool)

        for name in INT_FIELDS:
            if not is_int(getattr(self, name)):
                raise ValidationError(f'{name} must be an integer, got {getattr(self, name)!r}')
        for name in FLOAT_FIELDS:
            if not is_number(getattr(self, name)):
                raise ValidationError(f'{name} must be a number, got {getattr(self, name)!r}')
        for name in STR_FIELDS:
            value = getattr(self, name)
            if value is not None and not isinstance(value, str):
                raise ValidationError(f'{name} must be a string, got {value!r}')
        if not isinstance(self.field, str):
            raise ValidationError(f'field must be a string, got {self.field!r}')
        if isinstance(self.axes, str) or not isinstance(self.axes, (list, tuple)) \
                or not all(isinstance(axis, str) for axis in self.axes):
            raise ValidationError(f'axes must be a list of strings, got {self.axes!r}')
        if not isinstance(self.a_range, (list, tuple)) or len(self.a_range) != 2 \
                or not all(is_number(v) for v in self.a_range):
            raise ValidationError(f'a_range must be a pair of numbers, got {self.a_range!r}')

    @classmethod
    def build(cls,
              subcommand: str,
              file_values: Optional[Dict[str, Any]] = None,
              cli_values: Optional[Dict[str, Any]] = None) -> 'RunConfig':
        """Merge the configuration layers

        None values of the command line layer are ignored. When no layer
        gives the number of threads, `QFIUNRUH_THREADS` is used.

        :param subcommand: name of the subcommand
        :param file_values: values read from the json configuration file
        :param cli_values: values given on the command line
        :return: :class:`qfiunruh.RunConfig`
        :raise: ValidationError for unknown keys or invalid values
        """
        values: Dict[str, Any] = {}
        for layer in (file_values or {}, cli_values or {}):
            unknown = set(layer) - cls.keys()
            if unknown:
                raise ValidationError(f'unknown configuration keys: {", ".join(sorted(unknown))}')
            values.update({key: value for key, value in layer.items() if value is not None})

        if 'threads' not in values:
            values['threads'] = threads_from_env()

        try:
            return cls(subcommand=subcommand, **values)
        except TypeError as err:
            raise ValidationError(f'invalid configuration: {err}') from None

    @classmethod
    def keys(cls) -> set:
        """Accepted configuration keys"""
        return {f.name for f in fields(cls)} - {'subcommand'}

    def to_dict(self) -> Dict[str, Any]:
        """Flat dict of the configuration"""
        data = asdict(self)
        data['field'] = self.field.value
        return data


def threads_from_env() -> int:
    """Number of threads given by `QFIUNRUH_THREADS`, 0 when unset

    :return: number of threads
    :raise: ValidationError when the variable is not a non-negative integer
    """
    value = os.getenv(THREADS_ENV)
    if value is None or value.strip() == '':
        return 0
    try:
        threads = int(value)
    except ValueError:
        raise ValidationError(f'{THREADS_ENV} must be an integer, got "{value}"') from None
    if threads < 0:
        raise ValidationError(f'{THREADS_ENV} must be >= 0, got {threads}')
    return threads


def read_config_file(filepath: Optional[str] = None) -> Dict[str, Any]:
    """Read the json configuration file

    Without path, the path in the `QFIUNRUH_CONFIG` environment variable is
    used. Without both, the configuration is empty.

    :param filepath: path to the json file
    :return: configuration values
    :raise: ValidationError when the file is unreadable or is not a json object
    """
    if filepath is None:
        filepath = os.getenv(CONFIG_ENV)
    if filepath is None:
        return {}

    try:
        with open(filepath) as f:
            data = json.load(f)
    except OSError as err:
        raise ValidationError(f'unable to read configuration file {filepath}: {err.strerror}') from None
    except ValueError:
        raise ValidationError(f'configuration file {filepath} is not valid json') from None

    if not isinstance(data, dict):
        raise ValidationError(f'configuration file {filepath} must contain a json object')
    return data


if __name__ == "__main__":
    pass
