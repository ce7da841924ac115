"""Gnuplot scripts overlaying curves from CSV tables."""

import functools
import typing

from .base import Format

__all__ = ['Curve', 'PlotScript',
           'Gnuplot']

TERMINAL = 'pngcairo size 800,600'


class Curve(typing.NamedTuple):
    """CSV file and the 1-based columns to plot against each other."""

    path: str

    x_column: int

    y_column: int

    title: str

    style: str = 'lines'


class PlotScript(typing.NamedTuple):

    output: str

    title: str

    curves: typing.Tuple[Curve, ...]

    xlabel: str = 'x'

    ylabel: str = 'u'


def quote(value: str) -> str:
    """Return ``value`` as single-quoted gnuplot string.

    >>> quote("it's")
    "'it''s'"
    """
    escaped = value.replace("'", "''")
    return f"'{escaped}'"


def dump_file(file, document: PlotScript, *, terminal: str = TERMINAL) -> None:
    write = functools.partial(print, file=file)
    write("set datafile separator ','")
    write(f'set terminal {terminal}')
    write(f'set output {quote(document.output)}')
    write(f'set title {quote(document.title)}')
    write(f'set xlabel {quote(document.xlabel)}')
    write(f'set ylabel {quote(document.ylabel)}')
    write('set key outside right')
    plots = [f'{quote(c.path)} every ::1 using {c.x_column:d}:{c.y_column:d}'
             f' with {c.style} title {quote(c.title)}'
             for c in document.curves]
    write('plot ' + ', \\\n     '.join(plots))


class Gnuplot(Format):
    """Plot script for external rendering (dump only).

    >>> script = PlotScript('ex.png', 'Example', (Curve('ex.csv', 2, 3, 'N=9'),))
    >>> print(Gnuplot.dumps(script).splitlines()[-1])
    plot 'ex.csv' every ::1 using 2:3 with lines title 'N=9'
    """

    suffix = '.gp'

    aliases = ('gnuplot-script',)

    dumps_rstrip = True

    dumpf = staticmethod(dump_file)
