"""Second-order central finite differences for the first boundary value problem."""

import logging
import typing

import numpy as np
import scipy.linalg

from . import bvp

__all__ = ['DEFAULT_POINTS',
           'FiniteDifferenceSolution',
           'finite_difference_solve']

DEFAULT_POINTS = 2001

log = logging.getLogger(__name__)


class FiniteDifferenceSolution(typing.NamedTuple):
    """Grid values ``u`` at the uniform points ``x``, linearly interpolated."""

    x: np.ndarray

    u: np.ndarray

    def __call__(self, x):
        result = np.interp(x, self.x, self.u)
        return float(result) if np.ndim(result) == 0 else result


def finite_difference_solve(problem: bvp.BvpProblem,
                            n_points: int = DEFAULT_POINTS) -> FiniteDifferenceSolution:
    """Solve ``problem`` with the three-point scheme on ``n_points`` uniform points.

    Example:
        >>> zero = lambda x: np.zeros_like(x)
        >>> fd = finite_difference_solve(bvp.BvpProblem(zero, zero, zero, 0, 1, 1, 3), 5)
        >>> [round(v, 12) for v in fd.u.tolist()]
        [1.0, 1.5, 2.0, 2.5, 3.0]
    """
    problem = problem.validate()
    if n_points < 3:
        raise ValueError(f'n_points must be at least 3: {n_points!r}')

    x = np.linspace(problem.a, problem.b, n_points)
    x[-1] = problem.b
    h = (problem.b - problem.a) / (n_points - 1)
    inner = x[1:-1]
    p1 = bvp.function_values(problem.p1, inner, 'p1')
    p2 = bvp.function_values(problem.p2, inner, 'p2')
    rhs = bvp.function_values(problem.f, inner, 'f')

    lower = 1 / h ** 2 - p1 / (2 * h)
    upper = 1 / h ** 2 + p1 / (2 * h)
    rhs[0] -= lower[0] * problem.u_a
    rhs[-1] -= upper[-1] * problem.u_b

    # solve_banded storage: row 0 superdiagonal, row 1 diagonal, row 2 subdiagonal
    banded = np.zeros((3, len(inner)))
    banded[0, 1:] = upper[:-1]
    banded[1] = p2 - 2 / h ** 2
    banded[2, :-1] = lower[1:]

    u = np.empty(n_points)
    u[0], u[-1] = problem.u_a, problem.u_b
    u[1:-1] = scipy.linalg.solve_banded((1, 1), banded, rhs)
    log.debug('finite_difference_solve(n_points=%d, h=%.3g)', n_points, h)
    return FiniteDifferenceSolution(x, u)
