# coding: utf-8

"""
Functions for generating HTML output.
"""
import logging
import os
from os.path import join as pjoin

from ashes import AshesEnv

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds.bounds import predicate

logger = logging.getLogger(__name__)  # pylint: disable=invalid-name

TEMPLATES_DIR = pjoin(os.path.dirname(os.path.abspath(__file__)), 'templates')


def _fmt(value):
    if value is None:
        return ''
    return '{0:.6g}'.format(value)


def summary_to_context(summary):
    """
    Convert a :class:`graphbounds.verify.VerificationSummary` into a context
    for HTML templating.

    Violations come first among the listed cases, then flagged graphs, then
    equality cases.
    """
    cases = [{'graph6': g6, 'outcome': 'violated'}
             for g6 in summary.violation_cases]
    cases += [{'graph6': item['graph6'],
               'outcome': '{0} ({1}, slack {2})'.format(
                   item['flag'], item['status'], _fmt(item['slack']))}
              for item in summary.flagged]
    cases += [{'graph6': g6, 'outcome': 'equality'}
              for g6 in summary.equality_cases]
    return {
        'n': summary.n,
        'scope': summary.scope,
        'graphs_checked': summary.graphs_checked,
        'holds_strict': summary.holds_strict,
        'holds_equality': summary.holds_equality,
        'not_applicable': summary.not_applicable,
        'violations': summary.violations,
        'flagged_count': len(summary.flagged),
        'worst_slack': _fmt(summary.worst_slack),
        'worst_witness': summary.worst_witness or '',
        'elapsed': '{0:.2f}s'.format(summary.elapsed),
        'cases': cases,
    }


def render_summaries(summaries, title=None):
    """
    Render verification summaries of one predicate as an HTML page.

    Returns:
        str: The HTML document.
    """
    predicate_id = summaries[0].predicate_id if summaries else ''
    description = predicate(predicate_id).description if summaries else ''
    context = {'title': title or 'Verification of {0}'.format(predicate_id),
               'description': description,
               'rows': [summary_to_context(s) for s in summaries]}
    templater = AshesEnv([TEMPLATES_DIR])
    return templater.render('summary.html', context)


def summaries_to_html(summaries, path, title=None):
    """
    Generate an HTML file describing a verification run and write it to
    ``path``.
    """
    html = render_summaries(summaries, title)
    with open(path, 'w') as html_file:
        html_file.write(html)
    logger.info('Wrote HTML summary to %s', path)
