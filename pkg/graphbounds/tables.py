# coding: utf-8

"""
Tabular output: invariant reports, verification summaries, search traces
and family sweeps as :class:`pandas.DataFrame` objects, written as CSV or
JSON.

Reals carry 12 significant digits in both formats, so a CSV file and a JSON
document of the same run hold the same values. Lists of graph6 strings and
degree sequences become space-separated strings in CSV.
"""

import json
import logging
import math

import pandas as pd

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.bounds import family_sweep
from graphbounds.graph import encode_graph6, family, FamilyKind

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

FORMATS = ('csv', 'json')
FLOAT_FORMAT = '%.12g'

REPORT_COLUMNS = ['graph6', 'n', 'm', 'randic', 'alg_conn', 'diameter',
                  'min_degree', 'edge_conn', 'degrees', 'is_regular',
                  'is_tree']
SUMMARY_COLUMNS = ['predicate_id', 'scope', 'n', 'graphs_checked',
                   'holds_strict', 'holds_equality', 'not_applicable',
                   'violations', 'worst_slack', 'worst_witness',
                   'equality_cases', 'violation_cases', 'flagged']
HISTORY_COLUMNS = ['iteration', 'value']
SWEEP_COLUMNS = ['family', 's', 'n', 'graph6', 'product']


def round12(value):
    """Round reals, recursively through lists and dicts, to 12 digits."""
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return value
        return float(FLOAT_FORMAT % value)
    if isinstance(value, dict):
        return {key: round12(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [round12(item) for item in value]
    return value


def report_record(g, rep):
    """One row of :data:`REPORT_COLUMNS` for graph ``g``."""
    return {
        'graph6': encode_graph6(g).decode('ascii'),
        'n': rep.n,
        'm': rep.m,
        'randic': rep.randic,
        'alg_conn': rep.alg_conn,
        'diameter': rep.diameter,
        'min_degree': rep.min_degree,
        'edge_conn': rep.edge_conn,
        'degrees': ' '.join(str(d) for d in rep.degrees),
        'is_regular': rep.is_regular,
        'is_tree': rep.is_tree,
    }


def summary_record(summary):
    """JSON-ready fields of a verification summary."""
    return summary.to_dict()


def trace_record(trace):
    """JSON-ready fields of a :class:`graphbounds.search.SearchTrace`."""
    return {
        'n': trace.n,
        'objective': trace.objective,
        'direction': trace.direction,
        'seed': trace.seed,
        'best_value': trace.best_value,
        'best_graph': trace.certificate.decode('ascii'),
        'edges': [list(edge) for edge in trace.best_graph.edges()],
        'history': [{'iteration': it, 'value': value}
                    for it, value in trace.history],
        'iterations': trace.iterations,
        'moves_attempted': trace.moves_attempted,
        'moves_accepted': trace.moves_accepted,
    }


def sweep_records(n):
    """``R a`` of the path and every double comet on ``n`` vertices."""
    records = []
    for label, s, product in family_sweep(n):
        g = family(FamilyKind(label, n, s))
        records.append({'family': label, 's': s, 'n': n,
                        'graph6': encode_graph6(g).decode('ascii'),
                        'product': product})
    return records


def _flatten(value):
    if isinstance(value, (list, tuple)):
        return ' '.join(
            item['graph6'] if isinstance(item, dict) else str(item)
            for item in value)
    return value


def to_frame(records, columns):
    """
    Build a data frame with one row per record, lists flattened to
    space-separated strings.
    """
    rows = [{col: _flatten(rec.get(col)) for col in columns}
            for rec in records]
    return pd.DataFrame(rows, columns=columns)


def write_json(document, out):
    """Write a JSON document with reals rounded to 12 significant digits."""
    json.dump(round12(document), out, indent=2, sort_keys=True)
    out.write('\n')


def write_records(records, columns, out, fmt='csv'):
    """
    Write records to an open text file.

    Parameters:
        records (list): Dicts, e.g. from :func:`report_record`.
        columns (list): CSV column order.
        out: Writable text file.
        fmt (str): ``'csv'`` or ``'json'``.
    """
    if fmt == 'csv':
        frame = to_frame(records, columns)
        frame.to_csv(out, index=False, float_format=FLOAT_FORMAT)
    elif fmt == 'json':
        write_json(records, out)
    else:
        raise ValueError('unknown format {0!r}; expected one of {1}'.format(
            fmt, ', '.join(FORMATS)))
    logger.debug('Wrote %i records as %s', len(records), fmt)


def summary_table(summaries):
    """Human-readable table of verification summaries."""
    frame = to_frame([s.to_dict() for s in summaries], SUMMARY_COLUMNS[:10])
    frame['flagged'] = [len(s.flagged) for s in summaries]
    frame['elapsed'] = ['{0:.2f}s'.format(s.elapsed) for s in summaries]
    return frame.to_string(index=False, float_format=lambda x: '%.6g' % x)
