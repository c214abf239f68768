# coding: utf-8

"""
Randić index and algebraic connectivity workbench.

This module runs the whole collection of operations available in graphbounds:

-  Compute invariant reports for graphs given in graph6.
-  Verify a registered bound exhaustively over connected graphs or trees.
-  Enumerate connected graphs or trees up to isomorphism.
-  Search for extremal graphs of an objective expression.
-  Print members of the named graph families and the double-comet sweep.

Exit status is 0 on success, 1 when a verification finds a violation and 2
on a usage or input error.
"""

import argparse
from contextlib import contextmanager
import logging
import os
import sys

from graphbounds import logconf  # pylint: disable=unused-import
from graphbounds import enumeration
from graphbounds import tables
from graphbounds.bounds import PREDICATES
from graphbounds.env import HOME_VARIABLE, WorkbenchEnv, DEFAULT_CONFIG
from graphbounds.errors import Graph6Error, GraphBoundsError
from graphbounds.graph import (FAMILIES, FamilyKind, decode_graph6,
                               encode_graph6, family, read_graph6_file,
                               write_graph6_file)
from graphbounds.invariants import invariant_report
from graphbounds.search import SearchConfig, vns_search
from graphbounds.verify import (EXIT_ERROR, EXIT_OK, SCOPES, exit_code,
                                verify_range)

logger = logging.getLogger('graphbounds')


def _add_output_arguments(parser, formats=True, default='csv'):
    parser.add_argument('-o', '--output', help='write results to this file')
    if formats:
        parser.add_argument('-f', '--format', choices=tables.FORMATS,
                            default=default, help='output format')


def create_parser():
    """Create command-line argument parser."""
    desc = 'Randić index and algebraic connectivity workbench.'
    parser = argparse.ArgumentParser(prog='graphbounds', description=desc)

    parser.add_argument('-e', '--env_path', help='path to graphbounds home')
    parser.add_argument('-p', '--project', help='project name')
    parser.add_argument('-v', '--level', action='count', default=0,
                        help='show more logging output in console')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    inv = sub.add_parser('invariants', help='invariant report per graph')
    inv.add_argument('graphs', nargs='+',
                     help='graph6 strings, or files of graph6 lines')
    _add_output_arguments(inv)

    ver = sub.add_parser('verify', help='check a bound exhaustively')
    ver.add_argument('predicate', choices=sorted(PREDICATES),
                     metavar='predicate',
                     help='one of: ' + ', '.join(sorted(PREDICATES)))
    ver.add_argument('--n-min', type=int, default=3)
    ver.add_argument('--n-max', type=int, default=8)
    ver.add_argument('--scope', choices=SCOPES, default='all')
    ver.add_argument('--workers', type=int,
                     help='worker processes (default: CPU count)')
    ver.add_argument('--chunk-size', type=int)
    ver.add_argument('--no-cache', action='store_true',
                     help='enumerate afresh instead of using cached streams')
    ver.add_argument('--html', help='also write an HTML report here')
    _add_output_arguments(ver)

    enum = sub.add_parser('enumerate', help='write graphs up to isomorphism')
    enum.add_argument('--n', type=int, required=True)
    enum.add_argument('--kind', choices=enumeration.KINDS,
                      default='connected')
    enum.add_argument('--no-cache', action='store_true')
    _add_output_arguments(enum, formats=False)

    srch = sub.add_parser('search', help='variable neighborhood search')
    srch.add_argument('--n', type=int, required=True)
    srch.add_argument('--objective', required=True,
                      help='expression over R, a, D, delta, kappa, n, m')
    direction = srch.add_mutually_exclusive_group()
    direction.add_argument('--minimize', dest='direction',
                           action='store_const', const='minimize')
    direction.add_argument('--maximize', dest='direction',
                           action='store_const', const='maximize')
    srch.set_defaults(direction='minimize')
    srch.add_argument('--seed', type=int, default=0)
    srch.add_argument('--iters', type=int, help='shake rounds per restart')
    srch.add_argument('--restarts', type=int)
    srch.add_argument('--k', type=int, help='largest shake size')
    srch.add_argument('--patience', type=int,
                      help='rounds without improvement before a restart ends')
    _add_output_arguments(srch, default='json')

    fam = sub.add_parser('families', help='named graph families')
    fam.add_argument('kind', choices=FAMILIES + ('sweep',))
    fam.add_argument('--n', type=int, required=True)
    fam.add_argument('--s', type=int, help='double comet leaves per side')
    _add_output_arguments(fam)
    return parser


def set_console_loglevel(level):
    console = logger.handlers[0]
    if level and level > 0:
        console.setLevel('DEBUG')
    else:
        console.setLevel('INFO')


def make_env(args):
    """A :class:`WorkbenchEnv` if one was asked for, else ``None``."""
    if args.env_path or args.project or os.getenv(HOME_VARIABLE):
        return WorkbenchEnv(args.project or 'default', args.env_path)
    return None


@contextmanager
def _opened(path):
    if path:
        with open(path, 'w') as out:
            yield out
    else:
        yield sys.stdout


def _read_graphs(items):
    # A valid graph6 string wins over a file of the same name.
    for item in items:
        try:
            graph = decode_graph6(item)
        except Graph6Error:
            if not os.path.isfile(item):
                raise
            for graph in read_graph6_file(item):
                yield graph
        else:
            yield graph


def cmd_invariants(args, env):
    records = [tables.report_record(g, invariant_report(g))
               for g in _read_graphs(args.graphs)]
    with _opened(args.output) as out:
        tables.write_records(records, tables.REPORT_COLUMNS, out, args.format)
    return EXIT_OK


def cmd_verify(args, env):
    config = env.get_config() if env else DEFAULT_CONFIG
    stream = enumeration.stream
    if env and not args.no_cache:
        stream = env.load_stream
    summaries = verify_range(
        args.predicate, args.n_min, args.n_max, args.scope,
        workers=args.workers or config['workers'],
        stream=stream,
        chunk_size=args.chunk_size or config['chunk_size'])

    records = [tables.summary_record(s) for s in summaries]
    if args.output:
        with _opened(args.output) as out:
            tables.write_records(records, tables.SUMMARY_COLUMNS, out,
                                 args.format)
        print(tables.summary_table(summaries))
    elif args.format == 'json':
        tables.write_records(records, tables.SUMMARY_COLUMNS, sys.stdout,
                             'json')
    else:
        print(tables.summary_table(summaries))

    for summary in summaries:
        for witness in summary.violation_cases:
            print('VIOLATION {0} n={1} {2}'.format(
                summary.predicate_id, summary.n, witness))

    if args.html:
        # ashes is only needed for the report page.
        from graphbounds import hypertext
        hypertext.summaries_to_html(summaries, args.html)
    return exit_code(summaries)


def cmd_enumerate(args, env):
    if env and not args.no_cache:
        graphs = env.load_stream(args.kind, args.n)
    else:
        graphs = enumeration.stream(args.kind, args.n)
    if args.output:
        count = write_graph6_file(graphs, args.output)
    else:
        count = 0
        for graph in graphs:
            sys.stdout.write(encode_graph6(graph).decode('ascii') + '\n')
            count += 1
    logger.info('%i %s graphs on %i vertices', count, args.kind, args.n)
    return EXIT_OK


def cmd_search(args, env):
    config = env.get_config() if env else DEFAULT_CONFIG
    budget = config['search']
    cfg = SearchConfig(
        n=args.n,
        objective=args.objective,
        direction=args.direction,
        seed=args.seed,
        max_iterations=args.iters or budget['max_iterations'],
        max_neighborhood_k=args.k or budget['max_neighborhood_k'],
        restarts=args.restarts or budget['restarts'],
        patience=args.patience or budget['patience'])
    trace = vns_search(cfg)
    record = tables.trace_record(trace)
    with _opened(args.output) as out:
        if args.format == 'json':
            tables.write_json(record, out)
        else:
            tables.write_records(record['history'], tables.HISTORY_COLUMNS,
                                 out, 'csv')
    return EXIT_OK


def cmd_families(args, env):
    if args.kind == 'sweep':
        with _opened(args.output) as out:
            tables.write_records(tables.sweep_records(args.n),
                                 tables.SWEEP_COLUMNS, out, args.format)
        return EXIT_OK
    graph = family(FamilyKind(args.kind, args.n, args.s))
    with _opened(args.output) as out:
        out.write(encode_graph6(graph).decode('ascii') + '\n')
    return EXIT_OK


COMMANDS = {
    'invariants': cmd_invariants,
    'verify': cmd_verify,
    'enumerate': cmd_enumerate,
    'search': cmd_search,
    'families': cmd_families,
}


def main(argv=None):
    """
    Run one command.

    Returns:
        int: Process exit status.
    """
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    set_console_loglevel(args.level)

    if getattr(args, 'n_min', 1) > getattr(args, 'n_max', 1):
        logger.error('--n-min must not exceed --n-max')
        return EXIT_ERROR

    env = None
    try:
        env = make_env(args)
        return COMMANDS[args.command](args, env)
    except (GraphBoundsError, ValueError, OSError) as exc:
        logger.error('%s', exc)
        return EXIT_ERROR
    finally:
        if env:
            env.close()


if __name__ == '__main__':
    sys.exit(main())
