"""Command-line interface ``trigspline``."""

import argparse
import logging
import os
import sys
import typing

from . import __version__
from . import basis
from . import bvp
from . import configs
from . import reports
from . import series
from .formats import Table

__all__ = ['EXIT_OK', 'EXIT_CONFIG', 'EXIT_NUMERIC', 'EXIT_IO',
           'build_parser', 'main']

EXIT_OK = 0

EXIT_CONFIG = 1

EXIT_NUMERIC = 2

EXIT_IO = 3

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

log = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """Report usage errors with the configuration exit status."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f'{self.prog}: error: {message}\n')


def _write_table(table, out: typing.Optional[str]) -> None:
    if out is None:
        sys.stdout.write(Table.dumps(table) + '\n')
    else:
        Table.dump(out, table)
        log.debug('wrote %d rows to %r', len(table.rows), out)


def cmd_solve(args) -> int:
    config = configs.load_config(args.config)
    out = args.out or config.out
    if out is None:
        out = os.path.splitext(os.path.basename(args.config))[0] + '.csv'

    result = reports.run_solve(config)
    _write_table(result.table, out)
    if result.report is not None:
        print(f'max_abs_err={result.report.max_abs_err:.6e}'
              f' at x={result.report.argmax:.6g}')
    return EXIT_OK


def cmd_examples(args) -> int:
    ids = None if args.id is None else [args.id]
    results = reports.run_examples(ids, args.out_dir, args.sweep or reports.SWEEP,
                                   samples=args.samples)
    for result in results:
        variant, best = result.variant, result.best
        if best is None:
            print(f'example={variant.example:d} variant={variant.name}: no solution')
            continue
        print(f'example={variant.example:d} variant={variant.name}'
              f' best_N={best.n:d} max_abs_err={best.max_abs_err:.6e}')
    return EXIT_OK


def cmd_basis(args) -> int:
    table = reports.basis_table(args.family, args.r, args.n, args.k, args.q,
                                args.samples, eps_tail=args.eps_tail)
    _write_table(table, args.out)
    return EXIT_OK


def cmd_interp(args) -> int:
    data = Table.load(args.data)
    table = reports.interp_table(data, args.family, args.r, args.q,
                                 args.samples, eps_tail=args.eps_tail)
    _write_table(table, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(prog='trigspline',
                            description='Trigonometric fundamental splines and'
                                        ' collocation solutions of boundary value problems.')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='store_true',
                        help='log debug messages to standard error')
    subparsers = parser.add_subparsers(title='commands', dest='command', metavar='COMMAND')
    subparsers.required = True

    solve = subparsers.add_parser('solve', help='solve the problem of a run configuration')
    solve.add_argument('config', help='run configuration file (key = value lines)')
    solve.add_argument('--out', help='output CSV (default: config name with .csv suffix)')
    solve.set_defaults(func=cmd_solve)

    examples = subparsers.add_parser('examples', help='reproduce the built-in examples')
    examples.add_argument('--id', type=int, choices=(1, 2, 3),
                          help='run only this example (default: all)')
    examples.add_argument('--out-dir', default='.', help='output directory (must exist)')
    examples.add_argument('--sweep', type=int, nargs='+', metavar='N',
                          help=f'node counts to try (default: {" ".join(map(str, reports.SWEEP))})')
    examples.add_argument('--samples', type=int, default=bvp.DEFAULT_PROBES,
                          help='number of probe intervals for the error (default: %(default)s)')
    examples.set_defaults(func=cmd_examples)

    family_names = basis.Family.names()

    def add_spline_arguments(sub):
        sub.add_argument('--family', required=True, choices=family_names)
        sub.add_argument('--r', type=int, required=True, help='spline order')
        sub.add_argument('--q', type=int, default=0, help='derivative order (default: 0)')
        sub.add_argument('--samples', type=int, default=bvp.DEFAULT_PROBES,
                         help='number of intervals over [0, pi] (default: %(default)s)')
        sub.add_argument('--eps-tail', type=float,
                         help=f'series tail tolerance (default: ${configs.ENV_EPS_TAIL}'
                              f' or {series.PLOT_EPS_TAIL:g})')
        sub.add_argument('--out', help='output CSV (default: standard output)')

    basis_ = subparsers.add_parser('basis', help='tabulate one fundamental spline')
    add_spline_arguments(basis_)
    basis_.add_argument('--n', type=int, required=True, help='node count')
    basis_.add_argument('--k', type=int, required=True, help='node index (1-based)')
    basis_.set_defaults(func=cmd_basis)

    interp = subparsers.add_parser('interp', help='tabulate the interpolant of node samples')
    add_spline_arguments(interp)
    interp.add_argument('--data', required=True, help='CSV with header x,f at the grid nodes')
    interp.set_defaults(func=cmd_interp)

    return parser


def configure_logging(verbose: bool = False) -> None:
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr)
    logging.captureWarnings(True)


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Run the command line ``argv`` and return the exit status."""
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        return args.func(args)
    except (ValueError, LookupError) as e:
        return _fail(EXIT_CONFIG, 'configuration error', e)
    except ArithmeticError as e:
        return _fail(EXIT_NUMERIC, 'numeric error', e)
    except OSError as e:
        return _fail(EXIT_IO, 'I/O error', e)


def _fail(status: int, kind: str, error: Exception) -> int:
    log.debug('%s', kind, exc_info=error)
    print(f'trigspline: {kind}: {error}', file=sys.stderr)
    return status
