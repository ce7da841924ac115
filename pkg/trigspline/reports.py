"""Workflows behind the command-line interface: tables, sweeps and plot scripts."""

import logging
import math
import os
import re
import typing

import numpy as np

from . import basis
from . import bvp
from . import configs
from . import interpolants
from . import linalg
from . import series
from . import _examples
from .formats import Curve, PlotScript, Gnuplot, TableDocument, Table

__all__ = ['SWEEP', 'NODE_TOL',
           'SolveResult', 'ExampleRow', 'ExampleResult',
           'solution_table', 'run_solve',
           'sweep_variant', 'run_examples',
           'basis_table', 'interp_table']

SWEEP = (5, 7, 9, 11, 13, 15, 17)

NODE_TOL = 1e-9

log = logging.getLogger(__name__)


class SolveResult(typing.NamedTuple):

    solution: bvp.CollocationSolution

    table: TableDocument

    report: typing.Optional[bvp.ErrorReport] = None


def solution_table(solution: bvp.CollocationSolution, samples: int,
                   exact: typing.Optional[bvp.Function] = None
                   ) -> typing.Tuple[TableDocument, typing.Optional[bvp.ErrorReport]]:
    """Return the ``t,x,u_approx[,u_exact,abs_err]`` table on ``samples + 1`` points."""
    if exact is None:
        a, b = solution.map
        xs = np.linspace(a, b, samples + 1)
        xs[-1] = b
        columns = [xs, solution.evaluate(xs)]
        header = ('t', 'x', 'u_approx')
        report = None
    else:
        report = bvp.error_report(solution, exact, n_probe=samples)
        table = report.table
        columns = [table.x, table.u_approx, table.u_exact, table.abs_err]
        header = ('t', 'x', 'u_approx', 'u_exact', 'abs_err')

    ts = np.clip(solution.map.to_t(columns[0]), 0, math.pi)
    rows = list(zip(ts.tolist(), *(c.tolist() for c in columns)))
    return TableDocument(header, rows), report


def run_solve(config: configs.RunConfig) -> SolveResult:
    """Solve the configured problem and tabulate the solution."""
    solution = bvp.solve(config.problem, config.spec)
    table, report = solution_table(solution, config.samples, config.exact)
    if report is not None:
        log.info('solve %s N=%d r=%d: max_abs_err=%.6g at x=%.6g',
                 config.family, config.n, config.r, report.max_abs_err, report.argmax)
    return SolveResult(solution, table, report)


class ExampleRow(typing.NamedTuple):
    """Maximal deviation of one example variant at one node count."""

    example: int

    variant: str

    r: int

    n: int

    max_abs_err: float


class ExampleResult(typing.NamedTuple):
    """All sweep rows of one variant and its best node count."""

    variant: _examples.Variant

    rows: typing.Tuple[ExampleRow, ...]

    best: typing.Optional[ExampleRow]

    table: typing.Optional[TableDocument]

    @property
    def slug(self) -> str:
        return re.sub(r'\W+', '_', self.variant.name).strip('_').lower()


def sweep_variant(variant: _examples.Variant,
                  sweep: typing.Sequence[int] = SWEEP,
                  *, samples: int = bvp.DEFAULT_PROBES,
                  eps_tail: typing.Optional[float] = None) -> ExampleResult:
    """Solve ``variant`` for every node count in ``sweep``.

    Without ``eps_tail`` the tolerance comes from ``TRIGSPLINE_EPS_TAIL`` or the
    library default. Node counts with a singular collocation system are logged
    and recorded with ``nan`` error.
    """
    if eps_tail is None:
        eps_tail = configs.default_eps_tail()
    environ = {configs.ENV_EPS_TAIL: repr(eps_tail)}
    rows, best, best_table = [], None, None
    for n in sweep:
        config = configs.parse_config(_examples.config_text(variant, n), environ=environ)
        config = config._replace(samples=samples)
        try:
            result = run_solve(config)
        except linalg.SingularMatrixError as e:
            log.warning('example %d %s N=%d: %s', variant.example, variant.name, n, e)
            rows.append(ExampleRow(variant.example, variant.name, variant.r, n, math.nan))
            continue

        row = ExampleRow(variant.example, variant.name, variant.r, n,
                         result.report.max_abs_err)
        log.debug('example %d %s N=%d: max_abs_err=%.6g',
                  variant.example, variant.name, n, row.max_abs_err)
        rows.append(row)
        if best is None or row.max_abs_err < best.max_abs_err:
            best, best_table = row, result.table
    return ExampleResult(variant, tuple(rows), best, best_table)


def run_examples(ids: typing.Optional[typing.Iterable[int]] = None,
                 out_dir='.',
                 sweep: typing.Sequence[int] = SWEEP,
                 *, samples: int = bvp.DEFAULT_PROBES,
                 eps_tail: typing.Optional[float] = None) -> typing.List[ExampleResult]:
    """Reproduce the worked examples and write their tables and plot scripts.

    Writes ``exampleK_errors.csv`` (``example,variant,r,N,max_abs_err``), one
    ``exampleK_<variant>.csv`` curve table for the best node count of every
    variant and the ``exampleK.gp`` overlay script into ``out_dir``.
    """
    ids = sorted(_examples.EXAMPLES) if ids is None else sorted(set(ids))
    for i in ids:
        if i not in _examples.EXAMPLES:
            raise ValueError(f'unknown example id: {i!r}'
                             f' (one of {sorted(_examples.EXAMPLES)!r})')
    if not sweep:
        raise ValueError('empty node count sweep')
    if eps_tail is None:
        eps_tail = configs.default_eps_tail()

    results = []
    for i in ids:
        variants = [v for v in _examples.VARIANTS if v.example == i]
        example_results = [sweep_variant(v, sweep, samples=samples, eps_tail=eps_tail)
                           for v in variants]
        _write_example(i, example_results, out_dir)
        results.extend(example_results)
    return results


def _write_example(example: int, results: typing.Sequence[ExampleResult], out_dir) -> None:
    errors = TableDocument(('example', 'variant', 'r', 'N', 'max_abs_err'),
                           [tuple(row) for result in results for row in result.rows])
    Table.dump(os.path.join(out_dir, f'example{example:d}_errors.csv'), errors)

    curves = []
    for result in results:
        if result.table is None:
            continue
        filename = f'example{example:d}_{result.slug}.csv'
        Table.dump(os.path.join(out_dir, filename), result.table)
        if not curves:
            curves.append(Curve(filename, 2, 4, 'exact'))
        curves.append(Curve(filename, 2, 3, f'{result.variant.name},'
                                            f' N={result.best.n:d}'))

    if curves:
        script = PlotScript(f'example{example:d}.png',
                            f'Example {example:d}: exact and approximate solutions',
                            tuple(curves))
        Gnuplot.dump(os.path.join(out_dir, f'example{example:d}.gp'), script)


def basis_table(family: str, r: int, n: int, k: int, q: int = 0,
                samples: int = bvp.DEFAULT_PROBES,
                *, eps_tail: typing.Optional[float] = None,
                m_cap: int = series.DEFAULT_M_CAP) -> TableDocument:
    """Return the ``t,value`` table of the ``k``-th fundamental spline over ``[0, pi]``.

    >>> table = basis_table('odd0', 1, 9, 5, samples=4)
    >>> table.header, [round(t, 6) for t in table.column('t')]
    (('t', 'value'), [0.0, 0.785398, 1.570796, 2.356194, 3.141593])
    >>> round(table.column('value')[2], 6)
    1.0
    """
    if eps_tail is None:
        eps_tail = configs.default_eps_tail(default=series.PLOT_EPS_TAIL)
    spec = basis.make_spec(family, n, r, eps_tail=eps_tail, m_cap=m_cap)
    if not 1 <= k <= spec.n:
        raise ValueError(f'node index k must be in [1, {spec.n:d}]: {k!r}')
    if samples < 2:
        raise ValueError(f'samples must be at least 2: {samples!r}')
    ts = np.linspace(0, math.pi, samples + 1)
    ts[-1] = math.pi
    values = basis.basis_matrix(spec, q, ts).values[:, k - 1]
    return TableDocument(('t', 'value'), list(zip(ts.tolist(), values.tolist())))


def interp_table(data: TableDocument, family: str, r: int, q: int = 0,
                 samples: int = bvp.DEFAULT_PROBES,
                 *, eps_tail: typing.Optional[float] = None,
                 m_cap: int = series.DEFAULT_M_CAP) -> TableDocument:
    """Return the ``t,value`` table of the interpolant of ``data`` (header ``x,f``).

    The ``x`` column must list the grid nodes of ``family`` for ``N`` rows.
    """
    if tuple(data.header) != ('x', 'f'):
        raise ValueError(f'interpolation data needs header x,f: {data.header!r}')
    x = np.asarray(data.column('x'), dtype=float)
    if eps_tail is None:
        eps_tail = configs.default_eps_tail(default=series.PLOT_EPS_TAIL)
    spec = basis.make_spec(family, len(x), r, eps_tail=eps_tail, m_cap=m_cap)
    if not np.allclose(x, spec.nodes, rtol=0, atol=NODE_TOL):
        raise ValueError(f'x column does not match the {spec.family} grid nodes'
                         f' for N={spec.n:d}: {x.tolist()!r}')

    interp = interpolants.Interpolant(spec, data.column('f'))
    ts = np.linspace(0, math.pi, samples + 1)
    ts[-1] = math.pi
    return TableDocument(('t', 'value'), list(zip(ts.tolist(), interp(ts, q).tolist())))
