"""Exceptions raised by the qfiunruh library

All exceptions derive from :class:`QfiUnruhError`. Records catch them while
computing their data and store the message in ``error_msg``.
"""


class QfiUnruhError(Exception):
    """Base class of all the errors of the package"""


class DomainError(QfiUnruhError, ValueError):
    """An argument is outside the mathematical domain of the function"""


class InvalidStateError(QfiUnruhError, ValueError):
    """The Bloch vector lies outside the Bloch ball"""


class IllConditionedError(QfiUnruhError):
    """Linear system too close to singular, typically near-pure states"""


class IntegrationError(QfiUnruhError):
    """The ODE integrator failed to reach the requested time"""


class PreconditionError(QfiUnruhError, ValueError):
    """Configuration for which the requested computation is meaningless"""


class ValidationError(QfiUnruhError, ValueError):
    """Invalid grid, configuration or command line"""
