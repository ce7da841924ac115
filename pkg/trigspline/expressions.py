"""Arithmetic expressions in one variable ``x`` with named constants.

Grammar (``^`` binds tighter than unary minus and is right-associative)::

    expr  := term (('+' | '-') term)*
    term  := unary (('*' | '/') unary)*
    unary := '-' unary | power
    power := atom ('^' unary)?
    atom  := number | name | name '(' expr ')' | '(' expr ')'
"""

import math
import re
import typing

import numpy as np

__all__ = ['FUNCTIONS', 'PREDEFINED',
           'ExpressionSyntaxError', 'UnknownFunctionError',
           'UnboundConstantError', 'EvaluationError',
           'Number', 'Variable', 'Constant', 'Negate', 'BinOp', 'Call',
           'Expr',
           'parse', 'evaluate']

VARIABLE = 'x'

FUNCTIONS = {'sin': np.sin,
             'cos': np.cos,
             'tan': np.tan,
             'exp': np.exp,
             'log': np.log,
             'sqrt': np.sqrt,
             'abs': np.abs}

PREDEFINED = {'pi': math.pi, 'e': math.e}

OPERATORS = {'+': np.add,
             '-': np.subtract,
             '*': np.multiply,
             '/': np.divide,
             '^': np.power}


class ExpressionSyntaxError(ValueError):
    """Malformed expression text."""

    def __init__(self, message: str, *, offset: int, expected: str) -> None:
        super().__init__(f'{message} at offset {offset:d} (expected {expected})')
        self.offset = offset
        self.expected = expected


class UnknownFunctionError(ExpressionSyntaxError):
    """Call of a function name outside ``FUNCTIONS``."""


class UnboundConstantError(LookupError):
    """Named constant without value at evaluation time."""


class EvaluationError(ArithmeticError):
    """Non-finite expression value."""

    def __init__(self, message: str, *, x: float) -> None:
        super().__init__(message)
        self.x = x


class Token(typing.NamedTuple):

    kind: str

    text: str

    offset: int


_TOKEN = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*/^()])
''', flags=re.VERBOSE)


def _byte_offset(source: str, index: int) -> int:
    return len(source[:index].encode('utf-8'))


def iter_tokens(source: str) -> typing.Iterator[Token]:
    """Yield the tokens of ``source`` followed by an ``'end'`` token.

    >>> [t.text for t in iter_tokens('2*x^.5')]
    ['2', '*', 'x', '^', '.5', '']
    """
    index = 0
    while index < len(source):
        match = _TOKEN.match(source, index)
        if match is None:
            raise ExpressionSyntaxError(f'unexpected character {source[index]!r}',
                                        offset=_byte_offset(source, index),
                                        expected='number, name, operator or parenthesis')
        kind = match.lastgroup
        if kind != 'space':
            yield Token(kind, match.group(), _byte_offset(source, index))
        index = match.end()
    yield Token('end', '', _byte_offset(source, index))


class Number(typing.NamedTuple):

    value: float

    def evaluate(self, x, constants):
        return self.value

    def __str__(self) -> str:
        return repr(self.value)


class Variable(typing.NamedTuple):

    name: str = VARIABLE

    def evaluate(self, x, constants):
        return x

    def __str__(self) -> str:
        return self.name


class Constant(typing.NamedTuple):

    name: str

    def evaluate(self, x, constants):
        try:
            return constants[self.name]
        except KeyError:
            raise UnboundConstantError(f'unbound constant: {self.name!r}')

    def __str__(self) -> str:
        return self.name


class Negate(typing.NamedTuple):

    operand: typing.Any

    def evaluate(self, x, constants):
        return np.negative(self.operand.evaluate(x, constants))

    def __str__(self) -> str:
        return f'(-{self.operand})'


class BinOp(typing.NamedTuple):

    op: str

    left: typing.Any

    right: typing.Any

    def evaluate(self, x, constants):
        return OPERATORS[self.op](self.left.evaluate(x, constants),
                                  self.right.evaluate(x, constants))

    def __str__(self) -> str:
        return f'({self.left} {self.op} {self.right})'


class Call(typing.NamedTuple):

    func: str

    arg: typing.Any

    def evaluate(self, x, constants):
        return FUNCTIONS[self.func](self.arg.evaluate(x, constants))

    def __str__(self) -> str:
        return f'{self.func}({self.arg})'


Node = typing.Union[Number, Variable, Constant, Negate, BinOp, Call]


class _Parser:
    """Recursive descent over the token list with one token lookahead."""

    def __init__(self, source: str) -> None:
        self.tokens = list(iter_tokens(source))
        self.pos = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        token = self.token
        self.pos += 1
        return token

    def error(self, expected: str) -> ExpressionSyntaxError:
        token = self.token
        found = 'end of input' if token.kind == 'end' else repr(token.text)
        return ExpressionSyntaxError(f'unexpected {found}',
                                     offset=token.offset, expected=expected)

    def expect(self, text: str) -> Token:
        if self.token.text != text or self.token.kind != 'op':
            raise self.error(repr(text))
        return self.advance()

    def parse(self) -> Node:
        tree = self.expr()
        if self.token.kind != 'end':
            raise self.error('operator or end of input')
        return tree

    def expr(self) -> Node:
        tree = self.term()
        while self.token.text in ('+', '-') and self.token.kind == 'op':
            op = self.advance().text
            tree = BinOp(op, tree, self.term())
        return tree

    def term(self) -> Node:
        tree = self.unary()
        while self.token.text in ('*', '/') and self.token.kind == 'op':
            op = self.advance().text
            tree = BinOp(op, tree, self.unary())
        return tree

    def unary(self) -> Node:
        if self.token.kind == 'op' and self.token.text == '-':
            self.advance()
            return Negate(self.unary())
        return self.power()

    def power(self) -> Node:
        tree = self.atom()
        if self.token.kind == 'op' and self.token.text == '^':
            self.advance()
            tree = BinOp('^', tree, self.unary())
        return tree

    def atom(self) -> Node:
        token = self.token
        if token.kind == 'number':
            self.advance()
            value = float(token.text)
            if not math.isfinite(value):
                raise ExpressionSyntaxError(f'number out of range {token.text!r}',
                                            offset=token.offset,
                                            expected='finite number')
            return Number(value)
        elif token.kind == 'name':
            self.advance()
            if self.token.kind == 'op' and self.token.text == '(':
                if token.text not in FUNCTIONS:
                    raise UnknownFunctionError(f'unknown function {token.text!r}',
                                               offset=token.offset,
                                               expected=', '.join(sorted(FUNCTIONS)))
                self.advance()
                arg = self.expr()
                self.expect(')')
                return Call(token.text, arg)
            elif token.text == VARIABLE:
                return Variable()
            return Constant(token.text)
        elif token.kind == 'op' and token.text == '(':
            self.advance()
            tree = self.expr()
            self.expect(')')
            return tree
        raise self.error("number, name or '('")


def iter_nodes(tree: Node) -> typing.Iterator[Node]:
    """Yield the nodes of ``tree`` in prefix order."""
    yield tree
    if isinstance(tree, Negate):
        yield from iter_nodes(tree.operand)
    elif isinstance(tree, BinOp):
        yield from iter_nodes(tree.left)
        yield from iter_nodes(tree.right)
    elif isinstance(tree, Call):
        yield from iter_nodes(tree.arg)


class Expr:
    """Parsed expression with its bound constants, callable on ``x``.

    >>> f = parse('(C-2-x^2*(1+x))/(1+x)^3', constants={'C': 0})
    >>> f(0.0)
    -2.0

    >>> f(np.array([0.0, 1.0])).tolist()
    [-2.0, -0.5]

    >>> str(parse('-2^2 + .5'))
    '((-(2.0 ^ 2.0)) + 0.5)'
    """

    def __init__(self, source: str, tree: Node,
                 constants: typing.Optional[typing.Mapping[str, float]] = None) -> None:
        self.source = source
        self.tree = tree
        self.constants = dict(PREDEFINED)
        if constants is not None:
            self.constants.update(constants)

    def __repr__(self) -> str:
        return f'{self.__class__.__name__}({self.source!r})'

    def __str__(self) -> str:
        return str(self.tree)

    @property
    def constants_used(self) -> typing.FrozenSet[str]:
        """Names of the constants referenced by the expression."""
        return frozenset(n.name for n in iter_nodes(self.tree) if isinstance(n, Constant))

    @property
    def is_constant(self) -> bool:
        """Whether the expression does not depend on ``x``."""
        return not any(isinstance(n, Variable) for n in iter_nodes(self.tree))

    @property
    def unbound(self) -> typing.FrozenSet[str]:
        return self.constants_used - set(self.constants)

    def bind(self, constants: typing.Mapping[str, float]) -> 'Expr':
        """Return a copy with ``constants`` added to the bound constants."""
        return self.__class__(self.source, self.tree, {**self.constants, **constants})

    def __call__(self, x):
        return evaluate(self, x, self.constants)


def parse(source: str,
          constants: typing.Optional[typing.Mapping[str, float]] = None) -> Expr:
    """Return the :class:`.Expr` for ``source``.

    Raises:
        ExpressionSyntaxError: With byte ``offset`` and ``expected`` token.
        UnknownFunctionError: For a call of a name outside ``FUNCTIONS``.

    Example:
        >>> parse('x/(1+x)')(1.0)
        0.5

        >>> parse('2^3^2')(0.0)
        512.0

        >>> parse('2 +* 3')  # doctest: +ELLIPSIS
        Traceback (most recent call last):
        ...
        trigspline.expressions.ExpressionSyntaxError: unexpected '*' at offset 3 (expected ...)
    """
    if not source.strip():
        raise ExpressionSyntaxError('empty expression', offset=0,
                                    expected="number, name or '('")
    return Expr(source, _Parser(source).parse(), constants)


def evaluate(expr: Expr, x, constants: typing.Optional[typing.Mapping[str, float]] = None):
    """Return the value of ``expr`` at ``x`` (float for scalar ``x``, else array).

    Raises:
        UnboundConstantError: If a referenced constant has no value.
        EvaluationError: If the value is not finite somewhere.

    Example:
        >>> evaluate(parse('1/(x-1)'), 1.0)
        Traceback (most recent call last):
        ...
        trigspline.expressions.EvaluationError: non-finite value of '1/(x-1)' at x=1.0
    """
    values = dict(PREDEFINED)
    values.update(expr.constants if constants is None else constants)
    points = np.asarray(x, dtype=float)

    with np.errstate(all='ignore'):
        result = np.broadcast_to(np.asarray(expr.tree.evaluate(points, values), dtype=float),
                                 points.shape)

    bad = ~np.isfinite(result)
    if bad.any():
        x_bad = float(points[bad].flat[0]) if points.ndim else float(points)
        raise EvaluationError(f'non-finite value of {expr.source!r} at x={x_bad!r}',
                              x=x_bad)

    if points.ndim == 0:
        return float(result)
    return np.array(result)
