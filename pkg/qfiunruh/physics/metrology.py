"""Quantum Fisher information of the acceleration

For a qubit rho = (I + omega . sigma) / 2 the QFI with respect to a reads

    F = |d omega|^2 + (omega . d omega)^2 / (1 - |omega|^2)    if |omega| < 1
    F = |d omega|^2                                            if |omega| = 1

The values are reported with respect to the dimensionless acceleration.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Union
import math

import numpy as np
import scipy.linalg

from ..errors import DomainError, IllConditionedError, InvalidStateError
from .dynamics import (BlochState, EvolutionParams, InitialState, DEFAULT_OMEGA_RATIO, evolve,
                       reduced_bloch_arrays)
from .spectral import FieldModel, check_acceleration

# |omega|^2 above this limit is treated as a pure state
PURE_LIMIT = 1.0 - 1e-12
NORM_TOLERANCE = 1e-12
NEAR_SINGULAR_GAP = 1e-9
SLD_PURITY_LIMIT = 1.0 - 1e-10


class Branch(str, Enum):
    """Branch of the QFI formula"""
    MIXED = 'mixed'
    PURE = 'pure'


@dataclass(frozen=True)
class QfiResult:
    """QFI value with diagnostic data

    :ivar value: QFI with respect to the dimensionless acceleration
    :ivar branch: :class:`qfiunruh.physics.Branch` used for the evaluation
    :ivar bloch_norm: length of the Bloch vector
    :ivar near_singular: True when 1 - |omega|^2 lies in (1e-12, 1e-9)
    """
    value: float
    branch: Branch
    bloch_norm: float
    near_singular: bool = False


@dataclass(frozen=True)
class SldOperator:
    """Symmetric logarithmic derivative in the basis {|+>, |->}

    :ivar matrix: 2x2 Hermitian matrix L with d rho = (rho L + L rho) / 2
    """
    matrix: np.ndarray

    def expectation(self, rho: np.ndarray) -> complex:
        """Tr(rho L)"""
        return complex(np.trace(rho @ self.matrix))

    def second_moment(self, rho: np.ndarray) -> float:
        """Tr(rho L^2), equal to the QFI"""
        return float(np.real(np.trace(rho @ self.matrix @ self.matrix)))

    def projectors(self):
        """Eigenprojectors of L, sorted by increasing eigenvalue

        :return: list of two 2x2 projectors summing to identity
        """
        _, vectors = scipy.linalg.eigh(self.matrix)
        return [np.outer(vectors[:, k], vectors[:, k].conj()) for k in range(2)]


def _qfi_from_invariants(norm2, dot, dnorm2):
    """Vectorised QFI from |omega|^2, omega . d omega and |d omega|^2"""
    gap = 1.0 - norm2
    pure = norm2 > PURE_LIMIT
    with np.errstate(divide='ignore', invalid='ignore'):
        mixed_term = np.where(pure, 0.0, dot ** 2 / np.where(pure, 1.0, gap))
    return dnorm2 + mixed_term, pure


def qfi_from_bloch(state: BlochState) -> QfiResult:
    """QFI of the acceleration from the Bloch vector and its derivative

    :param state: :class:`qfiunruh.physics.BlochState`
    :return: :class:`qfiunruh.physics.QfiResult`
    :raise: InvalidStateError when |omega| > 1 + 1e-12
    """
    omega, d_omega = state.omega, state.d_omega
    norm2 = float(omega @ omega)
    norm = math.sqrt(norm2)
    if norm > 1.0 + NORM_TOLERANCE:
        raise InvalidStateError(f'Bloch vector outside the Bloch ball: |omega| = {norm!r}')

    value, pure = _qfi_from_invariants(norm2, float(omega @ d_omega), float(d_omega @ d_omega))
    gap = 1.0 - norm2
    return QfiResult(value=max(float(value), 0.0),
                     branch=Branch.PURE if pure else Branch.MIXED,
                     bloch_norm=norm,
                     near_singular=bool(NORM_TOLERANCE < gap < NEAR_SINGULAR_GAP))


def qfi_array(a, tau, theta, field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC) -> np.ndarray:
    """Vectorised QFI over broadcast arrays of (a, tau, theta)

    Only rotation-invariant quantities enter, so the result does not depend on
    phi or Omega.

    :param a: dimensionless acceleration
    :param tau: time in units of 1 / gamma_0
    :param theta: polar angle of the initial state
    :param field: field model
    :return: array of QFI values
    """
    transverse, w3, d_transverse, dw3 = reduced_bloch_arrays(a, tau, theta, field)
    norm2 = transverse ** 2 + w3 ** 2
    dot = transverse * d_transverse + w3 * dw3
    dnorm2 = d_transverse ** 2 + dw3 ** 2
    value, _ = _qfi_from_invariants(norm2, dot, dnorm2)
    return np.maximum(value, 0.0)


def qfi(a: float, tau: float, theta: float,
        field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
        phi: float = 0.0,
        omega_ratio: float = DEFAULT_OMEGA_RATIO) -> QfiResult:
    """QFI of the acceleration at time tau for the initial polar angle theta

    phi and omega_ratio are accepted for completeness, the result does not depend on them.

    :param a: dimensionless acceleration
    :param tau: time in units of 1 / gamma_0
    :param theta: polar angle of the initial state
    :param field: field model
    :param phi: azimuth of the initial state
    :param omega_ratio: Omega / gamma_0
    :return: :class:`qfiunruh.physics.QfiResult`
    :raise: DomainError for arguments outside their domains

    :Example:

    >>> from qfiunruh.physics import qfi
    >>> round(qfi(1.0, 50.0, 1.5707963).value, 6)
    0.073449
    """
    # Domain checks
    InitialState(theta, phi)
    EvolutionParams(tau, a, field, omega_ratio)

    transverse, w3, d_transverse, dw3 = (float(v) for v in reduced_bloch_arrays(a, tau, theta, field))
    norm2 = transverse ** 2 + w3 ** 2
    norm = math.sqrt(norm2)
    if norm > 1.0 + NORM_TOLERANCE:
        raise InvalidStateError(f'Bloch vector outside the Bloch ball: |omega| = {norm!r}')

    value, pure = _qfi_from_invariants(norm2,
                                       transverse * d_transverse + w3 * dw3,
                                       d_transverse ** 2 + dw3 ** 2)
    gap = 1.0 - norm2
    return QfiResult(value=max(float(value), 0.0),
                     branch=Branch.PURE if pure else Branch.MIXED,
                     bloch_norm=norm,
                     near_singular=bool(NORM_TOLERANCE < gap < NEAR_SINGULAR_GAP))


def asymptotic_qfi(a: float, field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC) -> float:
    """QFI in the long-time limit: (pi^2 / a^4) sech^2(pi / a)

    The stationary Bloch vector (0, 0, -tanh(pi / a)) is the same for both
    field models, so is the limit.

    :param a: dimensionless acceleration, a > 0
    :param field: field model, accepted for symmetry with :func:`qfi`
    :return: stationary QFI
    :raise: DomainError for a <= 0
    """
    FieldModel.parse(field)
    a = float(check_acceleration(a))
    if a == 0:
        raise DomainError('asymptotic QFI requires a > 0, the limit at a = 0 is 0')
    x = math.pi / a
    q = math.exp(-2.0 * x)
    if q == 0.0:
        return 0.0
    # sech^2(x) = 4 q / (1 + q)^2
    return (x ** 4 / math.pi ** 2) * 4.0 * q / (1.0 + q) ** 2


def sld(state: BlochState) -> SldOperator:
    """Symmetric logarithmic derivative of a mixed state

    The defining relation d rho = (rho L + L rho) / 2 is vectorised into the
    4x4 linear system (I x rho + rho^T x I) vec(L) / 2 = vec(d rho).

    :param state: mixed :class:`qfiunruh.physics.BlochState`
    :return: :class:`qfiunruh.physics.SldOperator`
    :raise: IllConditionedError when |omega| >= 1 - 1e-10
    """
    norm = state.norm
    if norm >= SLD_PURITY_LIMIT:
        raise IllConditionedError(f'SLD of a near-pure state is ill-conditioned: |omega| = {norm!r}')

    rho = state.density_matrix()
    d_rho = state.density_matrix_derivative()
    identity = np.eye(2, dtype=complex)
    # column-major vec: vec(rho L) = (I x rho) vec(L), vec(L rho) = (rho^T x I) vec(L)
    system = 0.5 * (np.kron(identity, rho) + np.kron(rho.T, identity))
    solution = scipy.linalg.solve(system, d_rho.reshape(-1, order='F'))
    matrix = solution.reshape(2, 2, order='F')
    return SldOperator(matrix=0.5 * (matrix + matrix.conj().T))


def qfi_fd_oracle(a: float, tau: float, theta: float,
                  field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                  h: float = 1e-5) -> float:
    """QFI with d omega replaced by finite differences of :func:`evolve`

    Central differences are used when a >= h, second order forward
    differences otherwise.

    :param a: dimensionless acceleration, a >= 0
    :param tau: time in units of 1 / gamma_0
    :param theta: polar angle of the initial state
    :param field: field model
    :param h: finite difference step in [1e-7, 1e-3]
    :return: QFI value
    """
    if not 1e-7 <= h <= 1e-3:
        raise DomainError(f'finite difference step must lie in [1e-7, 1e-3], got {h}')
    init = InitialState(theta)
    centre = evolve(init, EvolutionParams(tau, a, field))
    upper = evolve(init, EvolutionParams(tau, a + h, field))
    if a >= h:
        lower = evolve(init, EvolutionParams(tau, a - h, field))
        d_omega = (upper.omega - lower.omega) / (2.0 * h)
    else:
        far = evolve(init, EvolutionParams(tau, a + 2.0 * h, field))
        d_omega = (-3.0 * centre.omega + 4.0 * upper.omega - far.omega) / (2.0 * h)
    return qfi_from_bloch(BlochState(omega=centre.omega, d_omega=d_omega)).value


if __name__ == "__main__":
    pass
