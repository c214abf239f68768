# coding: utf-8

"""
Arithmetic objective expressions over graph invariants.

Grammar (whitespace is ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' unary)?
    primary := NUMBER | 'pi' | IDENT | FUNC '(' expr ')' | '(' expr ')'

``^`` binds tighter than unary minus and is right-associative, so
``-2^2`` is ``-(2^2)`` and ``2^3^2`` is ``2^(3^2)``. Identifiers name fields
of an :class:`graphbounds.invariants.InvariantReport`; see
:data:`IDENTIFIERS`.
"""

from collections import namedtuple
import logging
import math
import re

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.errors import ObjectiveEvalError, ObjectiveSyntaxError

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

IDENTIFIERS = {
    'R': 'randic',
    'a': 'alg_conn',
    'D': 'diameter',
    'delta': 'min_degree',
    'kappa': 'edge_conn',
    'n': 'n',
    'm': 'm',
}
CONSTANTS = {'pi': math.pi}
FUNCTIONS = ('cos', 'sqrt')

Num = namedtuple('Num', ['value'])
Name = namedtuple('Name', ['name'])
Neg = namedtuple('Neg', ['operand'])
BinOp = namedtuple('BinOp', ['op', 'left', 'right'])
Call = namedtuple('Call', ['func', 'arg'])

Token = namedtuple('Token', ['kind', 'text', 'pos'])

_TOKEN_RX = re.compile(r'''
    (?P<space>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
''', re.VERBOSE)


def tokenize(text):
    """
    Split ``text`` into tokens, ending with an ``end`` token.

    Raises:
        :class:`graphbounds.errors.ObjectiveSyntaxError`: On a character
            that starts no token.
    """
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN_RX.match(text, pos)
        if not match:
            raise ObjectiveSyntaxError(
                text, pos, 'unexpected character {0!r}'.format(text[pos]))
        kind = match.lastgroup
        if kind != 'space':
            tokens.append(Token(kind, match.group(), pos))
        pos = match.end()
    tokens.append(Token('end', '', len(text)))
    return tokens


class _Parser(object):
    def __init__(self, text):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self):
        return self.tokens[self.index]

    def advance(self):
        tok = self.tokens[self.index]
        self.index += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.token
        return ObjectiveSyntaxError(self.text, tok.pos, message)

    def expect(self, text):
        if self.token.text != text:
            found = self.token.text or 'end of input'
            raise self.error('expected {0!r}, found {1!r}'.format(text, found))
        return self.advance()

    def parse(self):
        node = self.expr()
        if self.token.kind != 'end':
            raise self.error('unexpected {0!r}'.format(self.token.text))
        return node

    def expr(self):
        node = self.term()
        while self.token.text in ('+', '-'):
            op = self.advance().text
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.token.text in ('*', '/'):
            op = self.advance().text
            node = BinOp(op, node, self.unary())
        return node

    def unary(self):
        if self.token.text == '-':
            self.advance()
            return Neg(self.unary())
        return self.power()

    def power(self):
        node = self.primary()
        if self.token.text == '^':
            self.advance()
            node = BinOp('^', node, self.unary())
        return node

    def primary(self):
        tok = self.token
        if tok.kind == 'number':
            self.advance()
            return Num(float(tok.text))
        if tok.kind == 'name':
            self.advance()
            if tok.text in FUNCTIONS:
                self.expect('(')
                arg = self.expr()
                self.expect(')')
                return Call(tok.text, arg)
            if tok.text in CONSTANTS:
                return Num(CONSTANTS[tok.text])
            if tok.text in IDENTIFIERS:
                return Name(tok.text)
            known = sorted(IDENTIFIERS) + sorted(CONSTANTS) + list(FUNCTIONS)
            raise self.error('unknown identifier {0!r}; known: {1}'.format(
                tok.text, ', '.join(known)), tok)
        if tok.text == '(':
            self.advance()
            node = self.expr()
            self.expect(')')
            return node
        if tok.kind == 'end':
            raise self.error('unexpected end of input')
        raise self.error('unexpected {0!r}'.format(tok.text))


def _names(node):
    if isinstance(node, Name):
        return {node.name}
    if isinstance(node, Neg):
        return _names(node.operand)
    if isinstance(node, BinOp):
        return _names(node.left) | _names(node.right)
    if isinstance(node, Call):
        return _names(node.arg)
    return set()


class ObjectiveExpr(object):
    """
    A parsed objective expression.

    Parameters:
        text (str): The source text.
        tree: Root node of the syntax tree.
    """
    def __init__(self, text, tree):
        self._text = text
        self._tree = tree

    @property
    def text(self):
        """Source text of the expression."""
        return self._text

    @property
    def tree(self):
        """Root node of the syntax tree."""
        return self._tree

    @property
    def identifiers(self):
        """Invariant symbols the expression refers to."""
        return frozenset(_names(self._tree))

    def evaluate(self, rep):
        """Shortcut for :func:`eval_objective`."""
        return eval_objective(self, rep)

    def __eq__(self, other):
        if isinstance(other, ObjectiveExpr):
            return self._tree == other._tree
        return NotImplemented

    def __hash__(self):
        return hash(self._tree)

    def __repr__(self):
        return 'ObjectiveExpr({0!r})'.format(self._text)

    def __str__(self):
        return self._text


def parse_objective(text):
    """
    Parse an objective expression such as ``"R*a"`` or
    ``"R/a - (n-3+2*sqrt(2))/2 / (2*(1-cos(pi/n)))"``.

    Returns:
        :class:`ObjectiveExpr`

    Raises:
        :class:`graphbounds.errors.ObjectiveSyntaxError`: With the offset
            of the offending token.
    """
    return ObjectiveExpr(text, _Parser(text).parse())


def _evaluate(node, values, text):
    if isinstance(node, Num):
        return node.value
    if isinstance(node, Name):
        return float(values[node.name])
    if isinstance(node, Neg):
        return -_evaluate(node.operand, values, text)
    if isinstance(node, Call):
        arg = _evaluate(node.arg, values, text)
        if node.func == 'sqrt':
            if arg < 0:
                raise ObjectiveEvalError(
                    text, 'sqrt of negative value {0!r}'.format(arg))
            return math.sqrt(arg)
        if math.isinf(arg):
            raise ObjectiveEvalError(text, 'cos of an infinite value')
        return math.cos(arg)

    left = _evaluate(node.left, values, text)
    right = _evaluate(node.right, values, text)
    if node.op == '+':
        return left + right
    if node.op == '-':
        return left - right
    if node.op == '*':
        return left * right
    if node.op == '/':
        if right == 0:
            raise ObjectiveEvalError(text, 'division by zero')
        return left / right
    try:
        result = left ** right
    except ZeroDivisionError:
        raise ObjectiveEvalError(text, 'zero raised to a negative power')
    except OverflowError:
        raise ObjectiveEvalError(text, 'overflow in power')
    if isinstance(result, complex):
        raise ObjectiveEvalError(
            text, 'non-real power {0!r}^{1!r}'.format(left, right))
    return result


def eval_objective(expr, rep):
    """
    Evaluate ``expr`` on an invariant report in double precision.

    Parameters:
        expr (:class:`ObjectiveExpr`): Parsed expression.
        rep (:class:`graphbounds.invariants.InvariantReport`): Invariants.

    Returns:
        float

    Raises:
        :class:`graphbounds.errors.ObjectiveEvalError`: On division by
            zero, a square root of a negative number, or a non-real power.
    """
    values = {name: getattr(rep, field) for name, field in IDENTIFIERS.items()}
    value = _evaluate(expr.tree, values, expr.text)
    if math.isnan(value) or math.isinf(value):
        raise ObjectiveEvalError(expr.text, 'non-finite value')
    return value
