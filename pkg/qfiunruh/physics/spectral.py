"""Spectral function of the vacuum bath and Kossakowski coefficients

All quantities are dimensionless: rates in units of the spontaneous emission
rate gamma_0, acceleration in units of c * omega_0 and frequencies in units of
omega_0.

Every hyperbolic function of pi / a is evaluated from ``q = exp(-2 pi / a)``,
which never overflows. The zero acceleration case is an exact limit branch.
"""
from dataclasses import dataclass
from enum import Enum
from typing import Union
import math

import numpy as np

from ..errors import DomainError

ArrayLike = Union[float, np.ndarray]


class FieldModel(str, Enum):
    """Vacuum bath coupled to the atom

    The value is the identifier used on the command line.
    """
    ELECTROMAGNETIC = 'em'
    SCALAR = 'scalar'

    @classmethod
    def parse(cls, value: Union[str, 'FieldModel']) -> 'FieldModel':
        """Return the field model for 'em' or 'scalar'

        :param value: string identifier or field model
        :return: :class:`qfiunruh.physics.FieldModel`
        """
        if isinstance(value, FieldModel):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise DomainError(f'unknown field model "{value}", expected "em" or "scalar"') from None


@dataclass(frozen=True)
class Coefficients:
    """Kossakowski coefficients and their derivatives with respect to acceleration

    :ivar a: dimensionless acceleration
    :ivar field: field model
    :ivar A: coefficient A in units of gamma_0
    :ivar B: coefficient B in units of gamma_0
    :ivar dA: derivative of A with respect to a
    :ivar dB: derivative of B with respect to a
    """
    a: float
    field: FieldModel
    A: float
    B: float
    dA: float
    dB: float

    @property
    def ratio(self) -> float:
        """B / A, equal to tanh(pi / a) for both field models"""
        return float(tanh_ratio(self.a))

    @property
    def d_ratio(self) -> float:
        """Derivative of B / A with respect to a"""
        return float(tanh_ratio_derivative(self.a))


def check_acceleration(a: ArrayLike) -> np.ndarray:
    """Check that the acceleration is finite and non-negative

    :param a: acceleration, scalar or array
    :return: acceleration as float array
    :raise: DomainError for negative or non-finite values
    """
    a = np.asarray(a, dtype=float)
    if not np.all(np.isfinite(a)):
        raise DomainError(f'acceleration must be finite, got {a}')
    if np.any(a < 0):
        raise DomainError(f'acceleration must be non-negative, got {a}')
    return a


def _reduced_argument(a: np.ndarray) -> np.ndarray:
    """x = pi / a, infinite at a = 0"""
    with np.errstate(divide='ignore'):
        return np.where(a > 0, math.pi / np.where(a > 0, a, 1.0), np.inf)


def _boltzmann(a: np.ndarray) -> np.ndarray:
    """q = exp(-2 pi / a), 0 at a = 0"""
    return np.exp(-2.0 * _reduced_argument(a))


def _one_minus_boltzmann(a: np.ndarray) -> np.ndarray:
    """1 - q without cancellation at large a"""
    return -np.expm1(-2.0 * _reduced_argument(a))


def _coth(a: np.ndarray) -> np.ndarray:
    """coth(pi / a) = (1 + q) / (1 - q), equal to 1 at a = 0"""
    return (1.0 + _boltzmann(a)) / _one_minus_boltzmann(a)


def _csch2_term(a: np.ndarray) -> np.ndarray:
    """(pi / a^2) csch^2(pi / a), the derivative of coth(pi / a), 0 at a = 0"""
    x = _reduced_argument(a)
    q = np.exp(-2.0 * x)
    with np.errstate(over='ignore', invalid='ignore'):
        term = (x * x / math.pi) * 4.0 * q / np.expm1(-2.0 * x) ** 2
    return np.where(q > 0, term, 0.0)


def tanh_ratio(a: ArrayLike) -> ArrayLike:
    """B / A = tanh(pi / a), equal to 1 at a = 0

    :param a: dimensionless acceleration
    :return: tanh(pi / a)
    """
    a = check_acceleration(a)
    value = _one_minus_boltzmann(a) / (1.0 + _boltzmann(a))
    return value if value.ndim > 0 else float(value)


def tanh_ratio_derivative(a: ArrayLike) -> ArrayLike:
    """Derivative of B / A: -(pi / a^2) sech^2(pi / a), 0 at a = 0

    :param a: dimensionless acceleration
    :return: d/da tanh(pi / a)
    """
    a = check_acceleration(a)
    x = _reduced_argument(a)
    q = np.exp(-2.0 * x)
    with np.errstate(over='ignore', invalid='ignore'):
        term = -(x * x / math.pi) * 4.0 * q / (1.0 + q) ** 2
    value = np.where(q > 0, term, 0.0)
    return value if value.ndim > 0 else float(value)


def coefficient_arrays(a: ArrayLike, field: FieldModel):
    """Vectorised Kossakowski coefficients

    :param a: dimensionless acceleration, scalar or array
    :param field: :class:`qfiunruh.physics.FieldModel`
    :return: tuple of arrays (A, B, dA, dB)
    """
    a = check_acceleration(a)
    field = FieldModel.parse(field)
    coth = _coth(a)
    dcoth = _csch2_term(a)

    if field is FieldModel.ELECTROMAGNETIC:
        prefactor = (1.0 + a ** 2) / 4.0
        A = prefactor * coth
        B = prefactor
        dA = (a / 2.0) * coth + prefactor * dcoth
        dB = a / 2.0
    else:
        A = coth / 4.0
        B = np.full_like(a, 0.25)
        dA = dcoth / 4.0
        dB = np.zeros_like(a)

    return A, B, dA, dB


def coefficients(a: float, field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC) -> Coefficients:
    """Kossakowski coefficients A, B and their derivatives with respect to a

    Electromagnetic field: A = (1 + a^2) coth(pi / a) / 4 and B = (1 + a^2) / 4.
    Scalar field: the same expressions without the factor (1 + a^2).

    :param a: dimensionless acceleration, a >= 0
    :param field: field model, default is the electromagnetic field
    :return: :class:`qfiunruh.physics.Coefficients`
    :raise: DomainError for negative or non-finite acceleration

    :Example:

    >>> from qfiunruh.physics import coefficients, FieldModel
    >>> c = coefficients(1.0, FieldModel.ELECTROMAGNETIC)
    >>> round(c.A, 6), c.B
    (0.501871, 0.5)
    """
    field = FieldModel.parse(field)
    A, B, dA, dB = coefficient_arrays(float(a), field)
    return Coefficients(a=float(a), field=field, A=float(A), B=float(B), dA=float(dA), dB=float(dB))


def spectral_function(lam: ArrayLike, a: ArrayLike,
                      field: Union[FieldModel, str] = FieldModel.ELECTROMAGNETIC) -> ArrayLike:
    """Fourier transform of the field correlation function along the world line, in units of gamma_0

    Electromagnetic field: G(lam) = lam^3 (1 + a^2 / lam^2) (1 + coth(pi lam / a)) / 2.
    Scalar field: G(lam) = lam (1 + coth(pi lam / a)) / 2.

    Both satisfy A = [G(1) + G(-1)] / 4 and B = [G(1) - G(-1)] / 4 and the detailed
    balance relation G(-lam) = exp(-2 pi lam / a) G(lam).

    :param lam: frequency in units of omega_0, lam != 0
    :param a: dimensionless acceleration, a >= 0
    :param field: field model
    :return: G(lam) / gamma_0
    :raise: DomainError when lam = 0 or inputs are not finite
    """
    field = FieldModel.parse(field)
    lam = np.asarray(lam, dtype=float)
    if not np.all(np.isfinite(lam)):
        raise DomainError(f'frequency must be finite, got {lam}')
    if np.any(lam == 0):
        raise DomainError('frequency lam = 0 is a pole of coth(pi lam / a)')
    a = check_acceleration(a)
    lam, a = np.broadcast_arrays(lam, a)

    # 1 + coth(pi lam / a) from q = exp(-2 pi |lam| / a)
    with np.errstate(divide='ignore'):
        safe = np.where(a > 0, a, 1.0)
        x = np.where(a > 0, math.pi * np.abs(lam) / safe, np.inf)
    q = np.exp(-2.0 * x)
    one_minus_q = -np.expm1(-2.0 * x)
    thermal = np.where(lam > 0, 2.0 / one_minus_q, -2.0 * q / one_minus_q)

    if field is FieldModel.ELECTROMAGNETIC:
        density = lam * (lam ** 2 + a ** 2)
    else:
        density = lam

    value = 0.5 * density * thermal
    return value if value.ndim > 0 else float(value)


if __name__ == "__main__":
    pass
