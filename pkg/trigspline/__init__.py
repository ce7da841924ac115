"""Incomplete trigonometric fundamental splines and collocation for boundary value problems."""

import typing

from .basis import Family, BasisSpec, make_spec, basis_matrix, stc, sts0, sts1
from .bvp import BvpProblem, DomainMap, CollocationSolution, solve, error_report
from .configs import ConfigError, RunConfig, parse_config, load_config
from .expressions import Expr, parse
from .finite_differences import finite_difference_solve
from .grids import GridSpec, Grid, make_grid
from .interpolants import Interpolant
from .linalg import SingularMatrixError
from .series import SeriesParams, TruncationWarning

__all__ = ['Family', 'BasisSpec', 'make_spec', 'basis_matrix', 'stc', 'sts0', 'sts1',
           'BvpProblem', 'DomainMap', 'CollocationSolution', 'solve', 'error_report',
           'ConfigError', 'RunConfig', 'parse_config', 'load_config',
           'Expr', 'parse',
           'finite_difference_solve',
           'GridSpec', 'Grid', 'make_grid',
           'Interpolant',
           'SingularMatrixError',
           'SeriesParams', 'TruncationWarning',
           'solve_config']

__title__ = 'trigspline'
__version__ = '0.1.dev0'
__author__ = 'trigspline developers'
__license__ = 'MIT, see LICENSE.txt'
__copyright__ = 'Copyright (c) 2026 trigspline developers'


def solve_config(text: str, *, environ: typing.Optional[typing.Mapping[str, str]] = None
                 ) -> CollocationSolution:
    """Parse the run configuration ``text`` and return the collocation solution.

    Args:
        text: Run configuration (``key = value`` lines, ``const NAME = value``).
        environ: Environment for ``TRIGSPLINE_EPS_TAIL`` (default: ``os.environ``).

    Returns:
        CollocationSolution: Spline coefficients with evaluation interface.

    Example:
        >>> import trigspline
        >>> solution = trigspline.solve_config('''
        ... p1 = 0
        ... p2 = -1
        ... f = 0
        ... a = 0
        ... b = pi
        ... u_a = 0
        ... u_b = 0
        ... family = odd0
        ... n = 7
        ... ''', environ={})
        >>> [round(abs(float(a)), 12) for a in solution.alpha]
        [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]
    """
    kwargs = {} if environ is None else {'environ': environ}
    config = parse_config(text, **kwargs)
    return solve(config.problem, config.spec)
