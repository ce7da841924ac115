import io
import math

import numpy as np
import pytest

from trigspline import tools


@pytest.mark.parametrize(
    'name, sep, expected',
    [('CamelCase', '_', 'camel_case'),
     ('Gnuplot', '-', 'gnuplot'),
     ('OddSts1', '-', 'odd-sts-1')])
def test_snakify(name, sep, expected):
    assert tools.snakify(name, sep=sep) == expected


def test_compensated_sum_cancellation():
    acc = tools.CompensatedSum((2,))
    for values in ([1.0, 1e16], [1e16, 1.0], [-1e16, -1e16]):
        acc.add(values)

    assert acc.value.tolist() == [1.0, 1.0]


def test_compensated_sum_many_small_terms():
    acc = tools.CompensatedSum(())
    terms = np.full(10_000, 0.1)
    for chunk in np.split(terms, 100):
        acc.add(chunk.sum())

    assert float(acc.value) == pytest.approx(math.fsum(terms), rel=0, abs=1e-12)


def test_write_csv_file():
    buf = io.StringIO(newline='')

    tools.write_csv_file(buf, [('odd0', 1.5)], header=['family', 'value'],
                         dialect='excel')

    assert buf.getvalue() == ('family,value\r\n'
                              'odd0,1.5\r\n')
