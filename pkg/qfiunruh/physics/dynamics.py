"""Bloch-vector dynamics of the uniformly accelerated atom

The closed form of the Bloch vector and its derivative with respect to the
acceleration are evaluated with numpy broadcasting, so that the same code
serves single evaluations and dense parameter scans. The renormalised
frequency Omega does not depend on the acceleration.
"""
from dataclasses import dataclass, field as dataclass_field
from typing import Tuple, Union
import math

import numpy as np
from scipy.integrate import solve_ivp

from ..errors import DomainError, IntegrationError
from .spectral import FieldModel, coefficient_arrays, tanh_ratio, tanh_ratio_derivative

DEFAULT_OMEGA_RATIO = 100.0


@dataclass(frozen=True)
class InitialState:
    """Initial pure state cos(theta/2)|+> + exp(i phi) sin(theta/2)|->

    :ivar theta: polar angle in [0, pi]
    :ivar phi: azimuth in [0, 2 pi)
    """
    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not (math.isfinite(self.theta) and 0.0 <= self.theta <= math.pi):
            raise DomainError(f'theta must lie in [0, pi], got {self.theta}')
        if not (math.isfinite(self.phi) and 0.0 <= self.phi < 2 * math.pi):
            raise DomainError(f'phi must lie in [0, 2 pi), got {self.phi}')

    def bloch_vector(self) -> np.ndarray:
        """Unit Bloch vector of the initial state

        :return: array (sin theta cos phi, sin theta sin phi, cos theta)
        """
        s = 0.0 if self.theta == math.pi else math.sin(self.theta)
        return np.array([s * math.cos(self.phi), s * math.sin(self.phi), math.cos(self.theta)])


@dataclass(frozen=True)
class EvolutionParams:
    """Parameters of the evolution

    :ivar tau: proper time in units of 1 / gamma_0
    :ivar a: dimensionless acceleration
    :ivar field: field model
    :ivar omega_ratio: renormalised frequency Omega / gamma_0, only rotates omega_1 and omega_2
    """
    tau: float
    a: float
    field: FieldModel = FieldModel.ELECTROMAGNETIC
    omega_ratio: float = DEFAULT_OMEGA_RATIO

    def __post_init__(self) -> None:
        if not (math.isfinite(self.tau) and self.tau >= 0):
            raise DomainError(f'tau must be finite and non-negative, got {self.tau}')
        if not (math.isfinite(self.a) and self.a >= 0):
            raise DomainError(f'acceleration must be finite and non-negative, got {self.a}')
        if not (math.isfinite(self.omega_ratio) and self.omega_ratio > 0):
            raise DomainError(f'omega_ratio must be positive, got {self.omega_ratio}')
        object.__setattr__(self, 'field', FieldModel.parse(self.field))


@dataclass
class BlochState:
    """Bloch vector and its derivative with respect to the acceleration

    :ivar omega: Bloch vector (omega_1, omega_2, omega_3)
    :ivar d_omega: derivative of the Bloch vector with respect to a
    """
    omega: np.ndarray
    d_omega: np.ndarray = dataclass_field(default_factory=lambda: np.zeros(3))

    def __post_init__(self) -> None:
        self.omega = np.asarray(self.omega, dtype=float)
        self.d_omega = np.asarray(self.d_omega, dtype=float)

    @property
    def norm(self) -> float:
        """Length of the Bloch vector"""
        return float(np.linalg.norm(self.omega))

    def density_matrix(self) -> np.ndarray:
        """rho = (I + omega . sigma) / 2 in the basis {|+>, |->}"""
        return 0.5 * (np.eye(2, dtype=complex) + pauli_dot(self.omega))

    def density_matrix_derivative(self) -> np.ndarray:
        """Derivative of rho with respect to a: (d_omega . sigma) / 2"""
        return 0.5 * pauli_dot(self.d_omega)


PAULI = np.array([[[0, 1], [1, 0]],
                  [[0, -1j], [1j, 0]],
                  [[1, 0], [0, -1]]], dtype=complex)


def pauli_dot(vector: np.ndarray) -> np.ndarray:
    """v . sigma for a real 3-vector v"""
    return np.tensordot(np.asarray(vector, dtype=float), PAULI, axes=1)


def reduced_bloch_arrays(a, tau, theta,
                         field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC) -> Tuple[np.ndarray, ...]:
    """Rotation-invariant part of the closed-form dynamics

    The transverse length sin(theta) exp(-2 A tau) and the longitudinal
    component omega_3 do not depend on phi or Omega, nor do their derivatives.

    :param a: dimensionless acceleration
    :param tau: time in units of 1 / gamma_0
    :param theta: polar angle of the initial state
    :param field: field model
    :return: tuple (transverse, omega_3, d_transverse, d_omega_3) of broadcast arrays
    """
    a, tau, theta = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (a, tau, theta)))
    A, _, dA, _ = coefficient_arrays(a, field)
    ratio = tanh_ratio(a)
    d_ratio = tanh_ratio_derivative(a)

    decay_4 = np.exp(-4.0 * A * tau)
    growth_4 = -np.expm1(-4.0 * A * tau)
    # the ground state has no transverse component
    sin_theta = np.where(theta == math.pi, 0.0, np.sin(theta))

    transverse = sin_theta * np.exp(-2.0 * A * tau)
    w3 = np.cos(theta) * decay_4 - ratio * growth_4

    d_transverse = -2.0 * tau * dA * transverse
    dw3 = -4.0 * tau * dA * decay_4 * np.cos(theta) - d_ratio * growth_4 - ratio * 4.0 * tau * dA * decay_4

    return transverse, w3, d_transverse, dw3


def bloch_arrays(a, tau, theta, phi=0.0,
                 field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC,
                 omega_ratio: float = DEFAULT_OMEGA_RATIO) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised closed-form Bloch vector and its acceleration derivative

    Arguments are broadcast against each other. Only the acceleration domain
    is checked here, callers validate their grids.

    :param a: dimensionless acceleration
    :param tau: time in units of 1 / gamma_0
    :param theta: polar angle of the initial state
    :param phi: azimuth of the initial state
    :param field: field model
    :param omega_ratio: Omega / gamma_0
    :return: tuple (omega, d_omega) of arrays with a trailing axis of length 3
    """
    transverse, w3, d_transverse, dw3 = reduced_bloch_arrays(a, tau, theta, field)
    phase = omega_ratio * np.asarray(tau, dtype=float) + np.asarray(phi, dtype=float)
    cos_phase = np.broadcast_to(np.cos(phase), transverse.shape)
    sin_phase = np.broadcast_to(np.sin(phase), transverse.shape)

    omega = np.stack([transverse * cos_phase, transverse * sin_phase, w3], axis=-1)
    d_omega = np.stack([d_transverse * cos_phase, d_transverse * sin_phase, dw3], axis=-1)
    return omega, d_omega


def evolve(init: InitialState, p: EvolutionParams) -> BlochState:
    """Bloch vector at time tau and its derivative with respect to the acceleration

    omega_1 = sin(theta) cos(Omega tau + phi) exp(-2 A tau)
    omega_2 = sin(theta) sin(Omega tau + phi) exp(-2 A tau)
    omega_3 = cos(theta) exp(-4 A tau) - (B / A) (1 - exp(-4 A tau))

    :param init: :class:`qfiunruh.physics.InitialState`
    :param p: :class:`qfiunruh.physics.EvolutionParams`
    :return: :class:`qfiunruh.physics.BlochState`
    """
    omega, d_omega = bloch_arrays(p.a, p.tau, init.theta, init.phi, p.field, p.omega_ratio)
    return BlochState(omega=omega, d_omega=d_omega)


def bloch_ode_oracle(init: InitialState, p: EvolutionParams, rtol: float = 1e-10) -> BlochState:
    """Integrate the Bloch equations numerically

    d omega_1 / d tau = -2 A omega_1 - Omega omega_2
    d omega_2 / d tau = -2 A omega_2 + Omega omega_1
    d omega_3 / d tau = -4 A omega_3 - 4 B

    Only the Bloch vector is returned, the derivative is left at zero.

    :param init: initial state
    :param p: evolution parameters
    :param rtol: relative tolerance of the integrator, in [1e-12, 1e-6]
    :return: :class:`qfiunruh.physics.BlochState`
    :raise: DomainError for rtol out of range, IntegrationError if the integrator fails
    """
    if not 1e-12 <= rtol <= 1e-6:
        raise DomainError(f'rtol must lie in [1e-12, 1e-6], got {rtol}')

    omega_0 = init.bloch_vector()
    if p.tau == 0:
        return BlochState(omega=omega_0)

    A, B, _, _ = (float(v) for v in coefficient_arrays(p.a, p.field))
    rotation = p.omega_ratio
    generator = np.array([[-2.0 * A, -rotation, 0.0],
                          [rotation, -2.0 * A, 0.0],
                          [0.0, 0.0, -4.0 * A]])
    drift = np.array([0.0, 0.0, -4.0 * B])

    def rhs(_tau: float, w: np.ndarray) -> np.ndarray:
        return generator @ w + drift

    sol = solve_ivp(rhs, (0.0, p.tau), omega_0, method='DOP853',
                    rtol=rtol, atol=rtol * 1e-2)
    if sol.success is False:
        raise IntegrationError(f'Bloch equations integration failed at tau={p.tau}: {sol.message}')

    return BlochState(omega=sol.y[:, -1])


if __name__ == "__main__":
    pass
