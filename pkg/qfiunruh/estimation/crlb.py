"""Monte Carlo check of the Cramer-Rao bound for the acceleration

Each trial measures n_shots copies of the evolved qubit in the eigenbasis of
the symmetric logarithmic derivative at the true acceleration and estimates
the acceleration by maximum likelihood. The variance of the estimates over
the trials is compared with 1 / (n_shots F).
"""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, asdict
from typing import Callable, Optional, Tuple, Union
import logging
import math

import numpy as np

from ..errors import IllConditionedError, PreconditionError, ValidationError
from ..physics import (BlochState, EvolutionParams, FieldModel, InitialState, bloch_arrays, evolve, qfi,
                       sld)
from ..physics.dynamics import PAULI
from ..record import JsonData, Record
from ..analysis.golden import golden_section_maximize
from ..analysis.scan import worker_count

MIN_QFI = 1e-6
MIN_SHOTS = 1000
MIN_TRIALS = 100
SEED_LIMIT = 2 ** 64

# Accuracy of the projector identities
PROJECTOR_TOLERANCE = 1e-12

# Points of the grid used to find the monotone branch of the outcome probability
BRANCH_POINTS = 4001


@dataclass(frozen=True)
class MeasurementPlan:
    """Projective measurement repeated on n_shots copies

    :ivar projectors: tuple (minus, plus) of orthogonal projectors, ascending SLD eigenvalue
    :ivar n_shots: number of measured copies per trial
    :ivar seed: seed of the random generator
    """
    projectors: Tuple[np.ndarray, np.ndarray]
    n_shots: int = MIN_SHOTS
    seed: int = 0

    def __post_init__(self) -> None:
        if self.n_shots <= 0:
            raise ValidationError(f'n_shots must be positive, got {self.n_shots}')
        if not 0 <= self.seed < SEED_LIMIT:
            raise ValidationError(f'seed must be a 64-bit unsigned integer, got {self.seed}')
        if len(self.projectors) != 2:
            raise ValidationError('a qubit measurement needs two projectors')
        for p in self.projectors:
            if np.max(np.abs(p - p.conj().T)) > PROJECTOR_TOLERANCE:
                raise ValidationError('projector is not Hermitian')
            if np.max(np.abs(p @ p - p)) > PROJECTOR_TOLERANCE:
                raise ValidationError('projector is not idempotent')
        if np.max(np.abs(self.projectors[0] + self.projectors[1] - np.eye(2))) > PROJECTOR_TOLERANCE:
            raise ValidationError('projectors do not sum to the identity')

    @property
    def direction(self) -> np.ndarray:
        """Unit Bloch vector n of the plus projector (I + n . sigma) / 2"""
        return np.real(np.einsum('ij,kji->k', self.projectors[1], PAULI))

    def probability(self, omega: np.ndarray) -> np.ndarray:
        """Probability of the plus outcome: (1 + omega . n) / 2

        :param omega: Bloch vector, or array of Bloch vectors on the last axis
        :return: probability
        """
        return 0.5 * (1.0 + np.asarray(omega) @ self.direction)


@dataclass(frozen=True)
class EstimationReport:
    """Statistics of the estimates over the trials

    :ivar a_true: acceleration used to simulate the outcomes
    :ivar a_hat_mean: mean of the estimates
    :ivar a_hat_var: unbiased variance of the estimates
    :ivar n_shots: measured copies per trial
    :ivar n_trials: number of trials
    :ivar qfi: QFI at the true acceleration
    :ivar crb_product: n_shots * qfi * a_hat_var, at least 1 up to statistical noise
    :ivar boundary_hits: number of estimates on a boundary of the search interval
    :ivar seed: seed of the random generator
    """
    a_true: float
    a_hat_mean: float
    a_hat_var: float
    n_shots: int
    n_trials: int
    qfi: float
    crb_product: float
    boundary_hits: int
    seed: int

    def to_dict(self) -> dict:
        """Flat dict with snake_case keys"""
        return asdict(self)


def measurement_plan(state: BlochState, n_shots: int = MIN_SHOTS, seed: int = 0) -> MeasurementPlan:
    """Measurement in the eigenbasis of the SLD of the state

    :param state: mixed :class:`qfiunruh.physics.BlochState` with its acceleration derivative
    :param n_shots: number of measured copies per trial
    :param seed: seed of the random generator
    :return: :class:`qfiunruh.estimation.MeasurementPlan`
    """
    minus, plus = sld(state).projectors()
    return MeasurementPlan(projectors=(minus, plus), n_shots=n_shots, seed=seed)


def _monotone_branch(probability: Callable[[np.ndarray], np.ndarray],
                     a_true: float,
                     lower: float,
                     upper: float) -> Tuple[float, float]:
    """Largest interval around a_true inside [lower, upper] on which the probability is monotone"""
    grid = np.linspace(lower, upper, BRANCH_POINTS)
    signs = np.sign(np.diff(probability(grid)))
    i = int(np.clip(np.searchsorted(grid, a_true) - 1, 0, signs.size - 1))
    direction = signs[i]

    left = i
    while left > 0 and signs[left - 1] == direction:
        left -= 1
    right = i
    while right < signs.size - 1 and signs[right + 1] == direction:
        right += 1
    return float(grid[left]), float(grid[right + 1])


def simulate_estimation(a_true: float,
                        tau: float,
                        theta: float,
                        field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                        n_shots: int = 100000,
                        n_trials: int = 200,
                        seed: int = 0,
                        threads: int = 1) -> EstimationReport:
    """Simulate maximum likelihood estimation of the acceleration

    The trial k draws its outcomes from the k-th child of
    ``numpy.random.SeedSequence(seed)``, so serial and threaded runs give the
    same report.

    :param a_true: acceleration used to simulate the outcomes
    :param tau: time in units of 1 / gamma_0
    :param theta: polar angle of the initial state
    :param field: field model
    :param n_shots: measured copies per trial, at least 1000
    :param n_trials: number of trials, at least 100
    :param seed: seed, 64-bit unsigned integer
    :param threads: number of worker threads, 0 means one per CPU
    :return: :class:`qfiunruh.estimation.EstimationReport`
    :raise: PreconditionError for uninformative configurations or too few shots or trials

    :Example:

    >>> from qfiunruh.estimation import simulate_estimation
    >>> report = simulate_estimation(1.0, 4.0, 0.0, n_shots=100000, n_trials=200, seed=42)
    >>> 0.8 <= report.crb_product <= 1.5
    True
    """
    if n_shots < MIN_SHOTS:
        raise PreconditionError(f'at least {MIN_SHOTS} shots per trial are required, got {n_shots}')
    if n_trials < MIN_TRIALS:
        raise PreconditionError(f'at least {MIN_TRIALS} trials are required, got {n_trials}')
    if a_true <= 0:
        raise PreconditionError(f'the acceleration must be positive, got {a_true}')

    info = qfi(a_true, tau, theta, field)
    if info.value <= MIN_QFI:
        raise PreconditionError(f'QFI {info.value:.3g} is below {MIN_QFI:g}, the measurement is uninformative')

    init = InitialState(theta)
    params = EvolutionParams(tau, a_true, field)
    try:
        plan = measurement_plan(evolve(init, params), n_shots, seed)
    except IllConditionedError as err:
        raise PreconditionError(f'no SLD measurement for this configuration: {err}') from None

    def probability(a):
        """Probability of the plus outcome as a function of the acceleration"""
        omega, _ = bloch_arrays(a, tau, theta, init.phi, params.field, params.omega_ratio)
        return np.clip(plan.probability(omega), 1e-300, 1.0 - 1e-16)

    def probability_at(a: float) -> float:
        state = evolve(init, EvolutionParams(tau, a, params.field, params.omega_ratio))
        return float(np.clip(plan.probability(state.omega), 1e-300, 1.0 - 1e-16))

    lower, upper = _monotone_branch(probability, a_true, a_true / 4.0, 4.0 * a_true)
    tol = 1e-10 * a_true
    p_true = probability_at(a_true)
    children = np.random.SeedSequence(seed).spawn(n_trials)

    def run_trial(k: int) -> float:
        rng = np.random.default_rng(children[k])
        hits = rng.binomial(n_shots, p_true)

        def log_likelihood(a: float) -> float:
            p = probability_at(a)
            return hits * math.log(p) + (n_shots - hits) * math.log1p(-p)

        a_hat, _ = golden_section_maximize(log_likelihood, lower, upper, tol)
        return a_hat

    workers = worker_count(threads)
    if workers == 1:
        estimates = np.array([run_trial(k) for k in range(n_trials)])
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            estimates = np.array(list(executor.map(run_trial, range(n_trials))))

    margin = 10.0 * tol
    boundary_hits = int(np.sum((estimates - lower < margin) | (upper - estimates < margin)))
    if boundary_hits > 0:
        logging.warning(f'{boundary_hits} estimates on the boundary of [{lower:.6g}, {upper:.6g}]')

    a_hat_var = float(np.var(estimates, ddof=1))
    return EstimationReport(a_true=float(a_true),
                            a_hat_mean=float(np.mean(estimates)),
                            a_hat_var=a_hat_var,
                            n_shots=int(n_shots),
                            n_trials=int(n_trials),
                            qfi=info.value,
                            crb_product=n_shots * info.value * a_hat_var,
                            boundary_hits=boundary_hits,
                            seed=int(seed))


class Estimation(Record):
    """Estimation experiment as a dataset

    :ivar a_true: acceleration used to simulate the outcomes
    :ivar tau: time in units of 1 / gamma_0
    :ivar theta: polar angle of the initial state
    :ivar n_shots: measured copies per trial
    :ivar n_trials: number of trials
    :ivar seed: seed of the random generator
    :ivar threads: number of worker threads
    """
    kind = 'crlb'

    def __init__(self,
                 a_true: float,
                 tau: float,
                 theta: float,
                 field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                 n_shots: int = 100000,
                 n_trials: int = 200,
                 seed: int = 0,
                 threads: int = 1) -> None:
        """Constructor of `Estimation`, the trials are simulated when the data is first read
        """
        super().__init__(field)
        self.a_true = a_true
        self.tau = tau
        self.theta = theta
        self.n_shots = n_shots
        self.n_trials = n_trials
        self.seed = seed
        self.threads = threads
        self.report: Optional[EstimationReport] = None

    def _compute_data(self) -> JsonData:
        self.report = simulate_estimation(self.a_true, self.tau, self.theta, self.field,
                                          self.n_shots, self.n_trials, self.seed, self.threads)
        logging.info(f'{repr(self)}: crb_product = {self.report.crb_product:.4f}')
        return JsonData(self.report.to_dict())

    @property
    def label(self) -> str:
        return f'a{self.a_true:g}_tau{self.tau:g}_seed{self.seed}'

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(a={self.a_true:g}, tau={self.tau:g}, theta={self.theta:.6g}, " \
               f"field='{self.field.value}')"


if __name__ == "__main__":
    pass
