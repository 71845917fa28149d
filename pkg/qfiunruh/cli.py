"""Command line interface

Datasets are written to the output file, or to the standard output when no
file is given. Logs go to the error stream.

Exit codes: 0 on success, 2 on invalid input, 3 when the output cannot be
written.

:Example:

.. code-block:: bash

    qfiunruh eval --a 1 --tau 50 --theta 1.5707963 --field em
    qfiunruh scan --axis tau:0:15:601 --a 1 --theta 0 --field em -o fig2.csv
    qfiunruh crlb --a 1 --tau 4 --theta 0 --shots 100000 --trials 200 --seed 42
"""
from typing import List, Optional, Tuple
import argparse
import logging
import os
import sys

from .analysis import Axis, Evaluation, FmaxCurve, PeakSearch, Scan, ScanGrid, figure_records
from .analysis.figures import FIGURES
from .configlog import config_log
from .errors import QfiUnruhError, ValidationError
from .estimation import Estimation
from .record import Record
from .runconfig import RunConfig, read_config_file
from .version import __version__

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_OUTPUT = 3

DEFAULT_FMAX_AXIS = 'tau:0:30:301'


class ArgumentParser(argparse.ArgumentParser):
    """Argument parser raising ValidationError instead of exiting"""

    def error(self, message: str) -> None:
        raise ValidationError(message)


def _a_range(value: str) -> Tuple[float, float]:
    """Parse 'min:max'"""
    try:
        lower, upper = (float(v) for v in value.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected min:max, got "{value}"') from None
    return lower, upper


def build_parser() -> ArgumentParser:
    """Parser of the `qfiunruh` command

    :return: :class:`ArgumentParser`
    """
    common = ArgumentParser(add_help=False)
    common.add_argument('--field', choices=['em', 'scalar'], help='field model, default em')
    common.add_argument('--a', type=float, help='dimensionless acceleration')
    common.add_argument('--tau', type=float, help='time in units of 1/gamma_0')
    common.add_argument('--theta', type=float, help='polar angle of the initial state')
    common.add_argument('--phi', type=float, help='azimuth of the initial state')
    common.add_argument('--omega-ratio', dest='omega_ratio', type=float, help='Omega / gamma_0')
    common.add_argument('--axis', dest='axes', action='append', metavar='NAME:MIN:MAX:N',
                        help='scan axis, repeatable up to twice')
    common.add_argument('-o', '--output', help='output file, standard output by default')
    common.add_argument('--format', choices=['csv', 'json'], help='dataset format, default json for crlb and csv otherwise')
    common.add_argument('--threads', type=int, help='worker threads, 0 means one per CPU')
    common.add_argument('--refine-tol', dest='refine_tol', type=float, help='extremum location tolerance')
    common.add_argument('--config', help='json configuration file')
    common.add_argument('--log-file', dest='log_file', help='name of the log file in ./log')
    common.add_argument('--log-json', dest='log_json', action='store_true', help='json log file')
    common.add_argument('-v', '--verbose', action='store_true', help='log progress messages')

    parser = ArgumentParser(prog='qfiunruh',
                            description='Quantum Fisher information of the acceleration of a '
                                        'uniformly accelerated two-level atom.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='subcommand', metavar='SUBCOMMAND')
    subparsers.required = True

    subparsers.add_parser('eval', parents=[common], help='QFI at a single point')
    subparsers.add_parser('scan', parents=[common], help='QFI over one or two axes')
    subparsers.add_parser('peaks', parents=[common], help='local extrema of a one-axis scan')

    fmax = subparsers.add_parser('fmax', parents=[common], help='maximum over a as a function of tau')
    fmax.add_argument('--a-range', dest='a_range', type=_a_range, metavar='MIN:MAX',
                      help='acceleration search interval, default 0.001:6')

    crlb = subparsers.add_parser('crlb', parents=[common], help='Monte Carlo Cramer-Rao check')
    crlb.add_argument('--seed', type=int, help='seed of the random generator')
    crlb.add_argument('--shots', type=int, help='measured copies per trial')
    crlb.add_argument('--trials', type=int, help='number of trials')

    figure = subparsers.add_parser('figure', parents=[common], help='datasets of a figure preset')
    figure.add_argument('figure', choices=FIGURES)
    figure.add_argument('--output-dir', dest='output_dir', help='folder of the datasets')

    return parser


def parse_config(argv: Optional[List[str]] = None) -> Tuple[RunConfig, argparse.Namespace]:
    """Parse the command line and merge it with the configuration file

    :param argv: arguments without the program name
    :return: tuple (:class:`qfiunruh.RunConfig`, parsed namespace)
    :raise: ValidationError for invalid arguments
    """
    args = build_parser().parse_args(argv)
    cli_values = {key: value for key, value in vars(args).items() if key in RunConfig.keys()}
    return RunConfig.build(args.subcommand, read_config_file(args.config), cli_values), args


def _grid(config: RunConfig) -> ScanGrid:
    """Scan grid of the scan and peaks subcommands"""
    if len(config.axes) == 0:
        raise ValidationError('at least one --axis is required')
    return ScanGrid(axes=tuple(Axis.parse(spec) for spec in config.axes),
                    a=config.a, tau=config.tau, theta=config.theta, field=config.field)


def make_record(config: RunConfig) -> Record:
    """Dataset requested by the configuration

    :param config: :class:`qfiunruh.RunConfig`
    :return: :class:`qfiunruh.record.Record`, not yet computed
    """
    if config.subcommand == 'eval':
        return Evaluation(config.a, config.tau, config.theta, config.field, config.phi, config.omega_ratio)

    if config.subcommand == 'scan':
        return Scan(_grid(config), config.threads)

    if config.subcommand == 'peaks':
        grid = _grid(config)
        if len(grid.axes) != 1:
            raise ValidationError('peaks needs exactly one --axis')
        return PeakSearch(Scan(grid, config.threads), config.refine_tol)

    if config.subcommand == 'fmax':
        axes = config.axes or (DEFAULT_FMAX_AXIS,)
        axis = Axis.parse(axes[0])
        if len(axes) != 1 or axis.name != 'tau':
            raise ValidationError('fmax needs a single tau --axis')
        return FmaxCurve(axis.values(), config.theta, config.field, config.a_range,
                         config.refine_tol, config.threads)

    if config.subcommand == 'crlb':
        return Estimation(config.a, config.tau, config.theta, config.field,
                          config.shots, config.trials, config.seed, config.threads)

    raise ValidationError(f'subcommand "{config.subcommand}" does not produce a single dataset')


def _emit(rec: Record, config: RunConfig, path: Optional[str]) -> None:
    """Write the dataset to the path or to the standard output

    :raise: QfiUnruhError when the record is in error, OSError when writing fails
    """
    text = rec.to_csv() if config.format == 'csv' else rec.to_json()
    if rec.error is True:
        raise ValidationError(rec.error_msg)
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        rec.write(path, config.format)


def _run_figure(config: RunConfig) -> None:
    """Write one dataset per curve of a figure preset"""
    os.makedirs(config.output_dir, exist_ok=True)
    records = figure_records(config.figure, config.field, config.threads)
    for label, rec in records.items():
        path = os.path.join(config.output_dir, f'{config.figure}_{label}.{config.format}')
        _emit(rec, config, path)


def run(argv: Optional[List[str]] = None) -> int:
    """Execute the command line

    :param argv: arguments without the program name, defaults to sys.argv[1:]
    :return: exit code
    """
    try:
        config, args = parse_config(argv)
    except SystemExit as err:
        # --help and --version
        return int(err.code or 0)
    except QfiUnruhError as err:
        _diagnostic(err)
        return EXIT_INVALID

    # without -v the diagnostic line is the only output on the error stream
    config_log(args.log_file, level=logging.INFO if args.verbose else logging.WARNING,
               json_format=args.log_json, stream_level=None if args.verbose else logging.CRITICAL + 1)
    logging.info(f'qfiunruh {__version__}: {config.subcommand} with {config.to_dict()}')

    try:
        if config.subcommand == 'figure':
            _run_figure(config)
        else:
            _emit(make_record(config), config, config.output)
    except QfiUnruhError as err:
        _diagnostic(err)
        return EXIT_INVALID
    except OSError as err:
        _diagnostic(err)
        return EXIT_OUTPUT

    return EXIT_OK


def _diagnostic(err: Exception) -> None:
    """Single line error message on the error stream"""
    message = ' '.join(str(err).split())
    sys.stderr.write(f'qfiunruh: error: {message}\n')


def main() -> None:
    """Entry point of the console script"""
    sys.exit(run())


if __name__ == "__main__":
    main()
