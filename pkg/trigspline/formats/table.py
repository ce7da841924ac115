"""Numeric result tables as CSV."""

import csv
import typing

from .. import tools

from .base import Format

__all__ = ['TableDocument',
           'Table']

FLOAT_FORMAT = '{:.16e}'


class Dialect(csv.excel):
    """Excel CSV with Unix line endings."""

    lineterminator = '\n'


class TableDocument(typing.NamedTuple):
    """Column header and rows (floats where the cell parses as a number)."""

    header: typing.Tuple[str, ...]

    rows: typing.List[tuple]

    def column(self, name: str) -> list:
        index = self.header.index(name)
        return [row[index] for row in self.rows]


def format_cell(value) -> str:
    """Return ``value`` as CSV cell with 17 significant digits for floats.

    >>> format_cell(0.1), format_cell(3), format_cell('odd0')
    ('1.0000000000000001e-01', '3', 'odd0')
    """
    if isinstance(value, float):
        return FLOAT_FORMAT.format(value)
    return str(value)


def parse_cell(cell: str):
    try:
        return int(cell)
    except ValueError:
        pass
    try:
        return float(cell)
    except ValueError:
        return cell


class Table(Format):
    """Result table with header row.

    >>> doc = TableDocument(('t', 'value'), [(0.0, 1.0), (0.5, 0.25)])
    >>> print(Table.dumps(doc))
    t,value
    0.0000000000000000e+00,1.0000000000000000e+00
    5.0000000000000000e-01,2.5000000000000000e-01

    >>> Table.loads(Table.dumps(doc)) == doc
    True
    """

    name = 'csv'

    suffix = '.csv'

    newline = ''

    dumps_rstrip = True

    dialect = Dialect

    @classmethod
    def loadf(cls, file, *,
              dialect: typing.Optional[tools.CsvDialectOrStr] = None) -> TableDocument:
        if dialect is None:
            dialect = cls.dialect

        reader = csv.reader(file, dialect=dialect)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise ValueError('empty table: missing header row')

        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise ValueError(f'line {lineno:d}: expected {len(header):d} cells:'
                                 f' {row!r}')
            rows.append(tuple(map(parse_cell, row)))
        return TableDocument(header, rows)

    @classmethod
    def dumpf(cls, file, document: TableDocument,
              *, dialect: typing.Optional[tools.CsvDialectOrStr] = None) -> None:
        if dialect is None:
            dialect = cls.dialect

        rows = ([format_cell(v) for v in row] for row in document.rows)
        tools.write_csv_file(file, rows, header=document.header, dialect=dialect)
