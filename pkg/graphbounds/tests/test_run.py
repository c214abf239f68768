# -*- coding: utf-8 -*-
"""Integration tests for the command-line interface."""

import io
import json
import os

import pandas as pd
import pytest

from graphbounds import bounds
from graphbounds.run import main


@pytest.fixture(autouse=True)
def no_home(monkeypatch):
    monkeypatch.delenv('GRAPHBOUNDS_HOME', raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_invariants_csv(capsys):
    code, out = run(capsys, 'invariants', 'Bw')
    assert code == 0
    frame = pd.read_csv(io.StringIO(out))
    row = frame.iloc[0]
    assert row['n'] == 3
    assert row['randic'] == 1.5
    assert row['alg_conn'] == 3
    assert row['diameter'] == 1
    assert row['min_degree'] == 2
    assert row['edge_conn'] == 2


def test_invariants_file_keeps_order(capsys, tmp_path):
    graphs = ['DhC', 'Bw', 'C~', 'Bg', 'B?', 'Cr']
    path = tmp_path / 'six.g6'
    path.write_text('\n'.join(graphs) + '\n')
    code, out = run(capsys, 'invariants', str(path), '--format', 'json')
    assert code == 0
    docs = json.loads(out)
    assert [doc['graph6'] for doc in docs] == graphs
    empty = docs[4]
    assert empty['alg_conn'] == 0
    assert empty['edge_conn'] == 0
    assert empty['diameter'] == -1


def test_invariants_bad_input(capsys, tmp_path):
    path = tmp_path / 'bad.g6'
    path.write_text('Bw\nBg\nB!\n')
    assert main(['invariants', str(path)]) == 2
    assert main(['invariants', 'B']) == 2


def test_invariants_prefers_graph6(capsys, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / 'Bw').write_text('Bg\n')
    code, out = run(capsys, 'invariants', 'Bw', '--format', 'json')
    assert code == 0
    assert [doc['graph6'] for doc in json.loads(out)] == ['Bw']


def test_verify(capsys, tmp_path):
    output = str(tmp_path / 'summary.json')
    code, out = run(capsys, 'verify', 'conjecture1', '--n-min', '3',
                    '--n-max', '6', '--workers', '1', '--output', output,
                    '--format', 'json')
    assert code == 0
    assert 'conjecture1' in out
    with open(output) as summary_file:
        docs = json.load(summary_file)
    assert [doc['graphs_checked'] for doc in docs] == [2, 6, 21, 112]
    assert all(doc['violations'] == 0 for doc in docs)
    assert all(len(doc['equality_cases']) == 1 for doc in docs)


def test_verify_reports_violations(capsys, monkeypatch):
    def always_violated(rep):
        return bounds.grade('lemma2', 0.0, 1.0, upper=False)

    monkeypatch.setitem(bounds.PREDICATES, 'lemma2',
                        bounds.PREDICATES['lemma2']._replace(
                            evaluate=always_violated))
    code, out = run(capsys, 'verify', 'lemma2', '--n-min', '3', '--n-max',
                    '4', '--workers', '1')
    assert code == 1
    assert out.count('VIOLATION lemma2') == 8


def test_verify_with_cache_and_html(capsys, tmp_path):
    home = str(tmp_path / 'home')
    html = str(tmp_path / 'report.html')
    argv = ['-e', home, '-p', 'cached', 'verify', 'theorem3_diameter',
            '--n-min', '3', '--n-max', '5', '--workers', '1', '--format',
            'json']
    code, first = run(capsys, *argv)
    assert code == 0
    assert os.path.exists(os.path.join(home, 'cached', 'data',
                                       'connected_n5.g6'))
    code, second = run(capsys, *(argv + ['--html', html]))
    assert code == 0
    assert first == second
    assert os.path.exists(html)


def test_enumerate(capsys, tmp_path):
    output = str(tmp_path / 'g6.txt')
    assert main(['enumerate', '--n', '6', '--output', output]) == 0
    with open(output) as g6_file:
        assert len(g6_file.read().splitlines()) == 112
    code, out = run(capsys, 'enumerate', '--n', '7', '--kind', 'trees')
    assert code == 0
    assert len(out.splitlines()) == 11


def test_families(capsys):
    code, out = run(capsys, 'families', 'path', '--n', '5')
    assert code == 0
    assert out == 'DhC\n'
    code, out = run(capsys, 'families', 'sweep', '--n', '10', '--format',
                    'json')
    assert code == 0
    assert [doc['s'] for doc in json.loads(out)] == [None, 1, 2, 3, 4]
    assert main(['families', 'double_comet', '--n', '5', '--s', '2']) == 2


def test_search(capsys):
    argv = ['search', '--n', '5', '--objective', 'R*a', '--minimize',
            '--seed', '42', '--restarts', '1', '--patience', '5']
    code, first = run(capsys, *argv)
    assert code == 0
    trace = json.loads(first)
    assert trace['seed'] == 42
    assert trace['direction'] == 'minimize'
    assert trace['best_value'] <= bounds.path_product(5) + 1e-9
    code, second = run(capsys, *argv)
    assert first == second


@pytest.mark.parametrize('argv', [
    [],
    ['verify'],
    ['verify', 'conjecture7'],
    ['verify', 'conjecture1', '--n-min', '6', '--n-max', '5'],
    ['verify', 'conjecture1', '--n-max', '10'],
    ['search', '--n', '5', '--objective', 'R +'],
    ['search', '--n', '5', '--objective', 'R', '--minimize', '--maximize'],
    ['families', 'wheel', '--n', '5'],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2
