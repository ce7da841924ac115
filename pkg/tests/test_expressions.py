import math

import numpy as np
import pytest

from trigspline import expressions
from trigspline.expressions import (parse,
                                    ExpressionSyntaxError, UnknownFunctionError,
                                    UnboundConstantError, EvaluationError)

IDEMPOTENCE_SOURCES = ['C/(1+x)',
                       '-x/(1+x)',
                       '(C-2-x^2*(1+x))/(1+x)^3',
                       'cos(x)*cos(2*x)',
                       '1.0625*cos(x) - .4*sin(x) - .0625*cos(3*x) + .25*x*sin(x)',
                       'sin(x)/sin(1) - x',
                       '-2^-x^2 + exp(-x)/sqrt(x) - log(abs(tan(x)))',
                       '2e-3*x - -x + pi*e']


@pytest.mark.parametrize(
    'source, x, expected',
    [('x/(1+x)', 1.0, 0.5),
     ('(C-2-x^2*(1+x))/(1+x)^3', 0.0, -2.0),
     ('cos(x)*cos(2*x)', 0.0, 1.0),
     ('1.0625*cos(x) - .4*sin(x) - .0625*cos(3*x) + .25*x*sin(x)', 0.0, 1.0),
     ('sin(x)/sin(1) - x', 0.5, math.sin(0.5) / math.sin(1) - 0.5),
     ('2+3*4', 0.0, 14.0),
     ('(2+3)*4', 0.0, 20.0),
     ('2^3^2', 0.0, 512.0),
     ('-2^2', 0.0, -4.0),
     ('2^-1', 0.0, 0.5),
     ('8/4/2', 0.0, 1.0),
     ('1-2-3', 0.0, -4.0),
     ('--x', 3.0, 3.0),
     ('pi', 0.0, math.pi),
     ('e', 0.0, math.e),
     ('1.5e2 + .25', 0.0, 150.25)])
def test_evaluate(source, x, expected):
    assert parse(source, {'C': 0})(x) == pytest.approx(expected, rel=1e-15)


@pytest.mark.parametrize('source', IDEMPOTENCE_SOURCES)
def test_print_parse_idempotent(rng, source):
    expr = parse(source, {'C': 1.5})
    xs = rng.uniform(0.1, 1.4, 100)

    reparsed = parse(str(expr), {'C': 1.5})

    assert str(reparsed) == str(expr)
    assert np.array_equal(reparsed(xs), expr(xs))


@pytest.mark.parametrize(
    'source, offset, match',
    [('2 +* 3', 3, r"unexpected '\*' at offset 3"),
     ('(1+x', 4, r"unexpected end of input at offset 4 \(expected '\)'\)"),
     ('', 0, r'empty expression'),
     ('   ', 0, r'empty expression'),
     ('2x', 1, r"unexpected 'x' at offset 1 \(expected operator or end of input\)"),
     ('1 $ 2', 2, r"unexpected character '\$' at offset 2"),
     ('x +\u00a0$', 5, r"unexpected character '\$' at offset 5"),
     ('sin x', 4, r"unexpected 'x'"),
     ('1e999', 0, r'number out of range')])
def test_parse_syntax_error(source, offset, match):
    with pytest.raises(ExpressionSyntaxError, match=match) as info:
        parse(source)

    assert info.value.offset == offset
    assert isinstance(info.value, ValueError)


def test_parse_unknown_function():
    with pytest.raises(UnknownFunctionError, match=r"unknown function 'spam' at offset 4") as info:
        parse('2 * spam(x)')

    assert info.value.offset == 4
    assert 'sin' in info.value.expected


def test_unbound_constant():
    expr = parse('C*x')

    assert expr.unbound == {'C'}
    with pytest.raises(UnboundConstantError, match=r"'C'"):
        expr(1.0)

    bound = expr.bind({'C': 2})

    assert bound.unbound == frozenset()
    assert bound(1.5) == 3.0


def test_constant_overrides_predefined():
    assert parse('pi', {'pi': 3.0})(0.0) == 3.0


@pytest.mark.parametrize(
    'source, constants_used, is_constant',
    [('C/(1+x)', {'C'}, False),
     ('pi/2 + K', {'pi', 'K'}, True),
     ('sin(x)', set(), False),
     ('1', set(), True)])
def test_expr_properties(source, constants_used, is_constant):
    expr = parse(source)

    assert expr.constants_used == constants_used
    assert expr.is_constant == is_constant


@pytest.mark.parametrize(
    'source, x',
    [('1/(x-1)', 1.0),
     ('log(x)', 0.0),
     ('sqrt(x - 2)', 1.5)])
def test_evaluation_error(source, x):
    with pytest.raises(EvaluationError, match=r'non-finite value') as info:
        parse(source)(np.array([x, 10.0]))

    assert info.value.x == x
    assert isinstance(info.value, ArithmeticError)


def test_evaluate_shapes():
    expr = parse('2')

    assert expr(np.zeros(3)).tolist() == [2.0, 2.0, 2.0]
    assert isinstance(expr(0.5), float)
    assert parse('x^2')(np.ones((2, 2))).shape == (2, 2)


def test_evaluate_explicit_constants():
    expr = parse('C + x')

    assert expressions.evaluate(expr, 1.0, {'C': 2.0}) == 3.0


def test_repr_and_str():
    expr = parse('-2^2 + .5')

    assert repr(expr) == "Expr('-2^2 + .5')"
    assert str(expr) == '((-(2.0 ^ 2.0)) + 0.5)'


def test_iter_tokens_offsets():
    tokens = list(expressions.iter_tokens('sin(x) * 2'))

    assert [(t.kind, t.offset) for t in tokens] == [('name', 0), ('op', 3), ('name', 4),
                                                   ('op', 5), ('op', 7), ('number', 9),
                                                   ('end', 10)]
