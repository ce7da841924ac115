"""Dense linear systems from collocation."""

import logging
import typing
import warnings

import numpy as np
import scipy.linalg

__all__ = ['PIVOT_TOL',
           'SingularMatrixError',
           'DenseSystem', 'LinearSolution',
           'lu_solve']

PIVOT_TOL = 1e-12

log = logging.getLogger(__name__)


class SingularMatrixError(ArithmeticError):
    """Pivot magnitude below ``PIVOT_TOL`` times the largest row norm."""


class DenseSystem(typing.NamedTuple):
    """Square system ``a @ x = b``.

    Example:
        >>> DenseSystem.fromlists([[2, 0], [0, 4]], [2, 8]).size
        2
    """

    a: np.ndarray

    b: np.ndarray

    @classmethod
    def fromlists(cls, a, b) -> 'DenseSystem':
        return cls(np.asarray(a, dtype=float), np.asarray(b, dtype=float))

    @property
    def size(self) -> int:
        return len(self.b)

    def validate(self) -> 'DenseSystem':
        """Return the system unchanged or raise ``ValueError``."""
        a, b = self.a, self.b
        if a.ndim != 2 or a.shape[0] != a.shape[1] or not a.shape[0]:
            raise ValueError(f'matrix must be square and non-empty: {a.shape!r}')
        if b.shape != (a.shape[0],):
            raise ValueError(f'right-hand side shape {b.shape!r}'
                             f' does not match matrix {a.shape!r}')
        return self


class LinearSolution(typing.NamedTuple):
    """Solution vector and the infinity norm of its residual ``a @ x - b``."""

    x: np.ndarray

    residual: float


def lu_solve(system: DenseSystem, *, pivot_tol: float = PIVOT_TOL) -> LinearSolution:
    """Solve ``system`` by LU factorization with row pivoting.

    Args:
        system: Square matrix and right-hand side.
        pivot_tol: Relative pivot threshold (scaled by the largest row norm).

    Returns:
        LinearSolution: Solution ``x`` with the residual infinity norm.

    Raises:
        ValueError: If the system is not square.
        SingularMatrixError: If a pivot is too small.

    Example:
        >>> solution = lu_solve(DenseSystem.fromlists([[2, 0], [0, 4]], [2, 8]))
        >>> solution.x.tolist()
        [1.0, 2.0]
        >>> solution.residual
        0.0
    """
    a, b = system.validate()
    scale = np.abs(a).sum(axis=1).max()
    if not np.isfinite(scale):
        raise ValueError('matrix has non-finite entries')

    with warnings.catch_warnings():
        warnings.simplefilter('ignore', scipy.linalg.LinAlgWarning)
        lu, piv = scipy.linalg.lu_factor(a, check_finite=False)

    pivots = np.abs(np.diag(lu))
    smallest = int(pivots.argmin())
    if scale == 0 or pivots[smallest] < pivot_tol * scale:
        raise SingularMatrixError(f'singular {a.shape[0]:d}x{a.shape[0]:d} matrix:'
                                  f' pivot {smallest + 1:d} is {pivots[smallest]:.3g}'
                                  f' (max row norm {scale:.3g})')

    x = scipy.linalg.lu_solve((lu, piv), b, check_finite=False)
    residual = float(np.abs(a @ x - b).max())
    log.debug('lu_solve(n=%d) min pivot %.3g, residual %.3g',
              a.shape[0], pivots[smallest], residual)
    return LinearSolution(x, residual)
