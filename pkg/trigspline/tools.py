"""Generic re-useable helpers."""

import csv
import re
import typing

import numpy as np

__all__ = ['snakify',
           'CompensatedSum',
           'write_csv_file']

CSV_DIALECT = 'excel'

DEFAULT_ENCODING = 'utf-8'


CsvDialectOrStr = typing.Union[csv.Dialect, str]


def snakify(name: str, *, sep: str = '_',
            _re_upper=re.compile(r'([A-Z0-9]+)')) -> str:
    """Lowercase ``name`` adding ``sep`` before in-word-uppercase letters and digits.

    >>> snakify('CamelCase')
    'camel_case'

    >>> snakify('OddSts0', sep='-')
    'odd-sts-0'
    """
    return (name[:1] + _re_upper.sub(rf'{sep}\1', name[1:])).lower()


class CompensatedSum:
    """Running Neumaier-compensated sum of equally shaped arrays.

    >>> acc = CompensatedSum(())
    >>> for value in [1.0, 1e100, 1.0, -1e100]:
    ...     acc.add(value)
    >>> float(acc.value)
    2.0
    """

    def __init__(self, shape) -> None:
        self.total = np.zeros(shape)
        self.carry = np.zeros(shape)

    def add(self, values) -> None:
        values = np.asarray(values, dtype=float)
        total = self.total + values
        big = np.abs(self.total) >= np.abs(values)
        self.carry = self.carry + np.where(big,
                                           (self.total - total) + values,
                                           (values - total) + self.total)
        self.total = total

    @property
    def value(self) -> np.ndarray:
        return self.total + self.carry


def write_csv_file(file, rows,
                   *, header: typing.Optional[typing.Iterable[str]] = None,
                   dialect: CsvDialectOrStr = CSV_DIALECT):
    """Write ``rows`` as CSV to file-like object with optional ``header``."""
    writer = csv.writer(file, dialect=dialect)
    if header is not None:
        writer.writerow(header)
    writer.writerows(rows)
