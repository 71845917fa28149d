"""Golden-section search on a bracketed unimodal function"""
from typing import Callable, Tuple
import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_maximize(fn: Callable[[float], float],
                            lower: float,
                            upper: float,
                            tol: float = 1e-8) -> Tuple[float, float]:
    """Locate the maximum of fn inside [lower, upper]

    The number of iterations is fixed in advance from the bracket width, so
    the search is deterministic for a given bracket.

    :param fn: function of one real variable, unimodal in the bracket
    :param lower: lower end of the bracket
    :param upper: upper end of the bracket
    :param tol: width of the final bracket
    :return: tuple (location, value)

    .. note:: Near a quadratic extremum fn changes by about the square of the
        distance, so the location is only resolved to about 1e-8 times the
        scale of fn, whatever tol is.
    """
    a, b = float(min(lower, upper)), float(max(lower, upper))
    dist = b - a
    if dist <= tol:
        x = 0.5 * (a + b)
        return x, fn(x)

    n = int(math.ceil(math.log(tol / dist) / math.log(INV_PHI)))

    c = a + INV_PHI_SQ * dist
    d = a + INV_PHI * dist
    yc = fn(c)
    yd = fn(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d = c
            yd = yc
            dist *= INV_PHI
            c = a + INV_PHI_SQ * dist
            yc = fn(c)
        else:
            a = c
            c = d
            yc = yd
            dist *= INV_PHI
            d = a + INV_PHI * dist
            yd = fn(d)

    x = 0.5 * (a + d) if yc > yd else 0.5 * (c + b)
    return x, fn(x)


def golden_section_minimize(fn: Callable[[float], float],
                            lower: float,
                            upper: float,
                            tol: float = 1e-8) -> Tuple[float, float]:
    """Locate the minimum of fn inside [lower, upper]

    :param fn: function of one real variable, unimodal in the bracket
    :param lower: lower end of the bracket
    :param upper: upper end of the bracket
    :param tol: width of the final bracket
    :return: tuple (location, value)
    """
    x, value = golden_section_maximize(lambda v: -fn(v), lower, upper, tol)
    return x, -value


if __name__ == "__main__":
    pass
