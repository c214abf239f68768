# -*- coding: utf-8 -*-
"""Unit tests for objective expressions."""

import math

import pytest

from graphbounds.errors import ObjectiveEvalError, ObjectiveSyntaxError
from graphbounds.graph import FamilyKind, decode_graph6, family
from graphbounds.invariants import invariant_report
from graphbounds.objective import (BinOp, Name, Neg, Num, eval_objective,
                                   parse_objective, tokenize)

K3 = invariant_report(decode_graph6('Bw'))
P3 = invariant_report(decode_graph6('Bg'))
CONJECTURE1 = 'R/a - (n-3+2*sqrt(2))/2 / (2*(1-cos(pi/n)))'


def test_parse_tree():
    expr = parse_objective('R*a')
    assert expr.tree == BinOp('*', Name('R'), Name('a'))
    assert expr.identifiers == frozenset(['R', 'a'])
    assert parse_objective(' R * a ') == expr


def test_precedence():
    assert parse_objective('-2^2').tree == Neg(BinOp('^', Num(2.0), Num(2.0)))
    assert eval_objective(parse_objective('-2^2'), K3) == -4.0
    assert eval_objective(parse_objective('2^3^2'), K3) == 512.0
    assert eval_objective(parse_objective('2^-1'), K3) == 0.5
    assert eval_objective(parse_objective('8-3-2'), K3) == 3.0
    assert eval_objective(parse_objective('8/4/2'), K3) == 1.0
    assert eval_objective(parse_objective('1+2*3'), K3) == 7.0
    assert eval_objective(parse_objective('(1+2)*3'), K3) == 9.0
    assert eval_objective(parse_objective('1.5e1 + .5'), K3) == 15.5


def test_examples():
    assert eval_objective(parse_objective('R*a'), K3) == pytest.approx(4.5)
    assert eval_objective(parse_objective('R/a'), P3) == \
        pytest.approx(math.sqrt(2))
    rep = invariant_report(family(FamilyKind('path', 7)))
    assert eval_objective(parse_objective('n'), rep) == 7
    assert eval_objective(parse_objective('m + D + delta + kappa'), rep) == \
        6 + 6 + 1 + 1


@pytest.mark.parametrize('n', [3, 6, 9])
def test_conjecture1_expression_vanishes_on_paths(n):
    rep = invariant_report(family(FamilyKind('path', n)))
    assert eval_objective(parse_objective(CONJECTURE1), rep) == \
        pytest.approx(0.0, abs=1e-9)


@pytest.mark.parametrize('text, position', [
    ('R +', 3),
    ('R * * a', 4),
    ('(R', 2),
    ('R a', 2),
    ('sqrt R', 5),
    ('R $ a', 2),
    ('', 0),
    ('x + 1', 0),
    ('R + foo', 4),
])
def test_syntax_errors(text, position):
    with pytest.raises(ObjectiveSyntaxError) as info:
        parse_objective(text)
    assert info.value.position == position
    assert 'offset {0}'.format(position) in str(info.value)


def test_tokenize():
    kinds = [tok.kind for tok in tokenize('cos(pi/n)')]
    assert kinds == ['name', 'op', 'name', 'op', 'name', 'op', 'end']


@pytest.mark.parametrize('text', [
    '1/(n-3)',
    'sqrt(-n)',
    '(-8)^(1/3)',
    '0^-1',
    '10^400',
    'cos(10^300*10^300)',
])
def test_eval_errors(text):
    with pytest.raises(ObjectiveEvalError):
        eval_objective(parse_objective(text), K3)
