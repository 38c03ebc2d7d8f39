# -*- coding: utf-8
"""
sgspec.twodist.cli: the sgspec command

Reports are written to stdout as compact JSON; progress and errors go to
stderr.  Exit status: 0 success, 1 a failed claim or verification, 2 usage
and input errors, 3 resource limits.

>>> main(['gallery', '--list'])                         # doctest: +ELLIPSIS
{"names":["complete_negative","k5_pm",...]}
0
>>> main(['code', 'params', '--alpha', '2/5', '--beta', '-1/5'])
{"lambda":"1","p":3,"case":"b","formula":"3d+O(1)"}
0
>>> main(['analyze', 'missing.json'])
{"error":"FILE_ERROR","message":"missing.json: No such file or directory"}
2
"""

# Python compatibility:
from __future__ import absolute_import, print_function

# Standard library:
import argparse
import errno
import os
import sys
from collections import OrderedDict

# Local imports:
from sgspec.twodist import PROJECTNAME
from sgspec.twodist.claims import ClaimContext, claim_ids, replay_report
from sgspec.twodist.claims import run_claim
from sgspec.twodist.codes import (
    CodeParameters,
    associated_graph,
    build_code,
    check_realizable,
    predicted_asymptotics,
    realize_vectors,
    )
from sgspec.twodist.constructions import (
    build_named,
    gallery_names,
    verify_named,
    )
from sgspec.twodist.exceptions import (
    BadParams,
    InvalidColoring,
    LimitExceeded,
    SgspecError,
    VerificationFailed,
    )
from sgspec.twodist.graphs import chromatic_number
from sgspec.twodist.lambdaspec import parse_lambda_spec, parse_number
from sgspec.twodist.reports import dumps, loads, poly_to_json
from sgspec.twodist.search import (
    compute_M,
    forbidden_family,
    kp_search,
    spectral_radius_order,
    verify_mult_bound,
    )
from sgspec.twodist.settings import load_settings
from sgspec.twodist.sgjson import (
    graph_to_obj,
    read_graph,
    read_vectors,
    write_vectors,
    )
from sgspec.twodist.spectral import (
    signed_char_poly,
    spectral_report,
    spectrum_float,
    )

try:
    # Standard library:
    import resource
except ImportError:  # not on Windows
    resource = None

# Logging / Debugging:
import logging

__all__ = [
    'main',
    ]

logger = logging.getLogger(PROJECTNAME + ': cli')

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3

# options whose values may start with a minus sign
NUMBER_OPTIONS = ('--alpha', '--beta', '--bound', '--lambda')


def _emit(obj):
    sys.stdout.write(dumps(obj) + '\n')


def _status(report):
    return EXIT_OK if report.get('status', 'PASS') != 'FAIL' else EXIT_FAIL


def _settings(args):
    overrides = {}
    for key, attr in (('search.jobs', 'jobs'),
                      ('limits.wall_clock', 'wall_clock'),
                      ):
        overrides[key] = getattr(args, attr, None)
    return load_settings(file=args.settings, **overrides)


def _search_kw(settings):
    kw = settings.search_options()
    kw['deadline'] = settings.deadline()
    kw['limit'] = settings.get('search.max_n')
    return kw


def _lambda_value(text):
    return parse_lambda_spec(text).require_value()


def _code_params(args):
    return CodeParameters(parse_number(args.alpha), parse_number(args.beta))


# ---------------------------------------------- [ commands ... [
def cmd_analyze(args, settings):
    g = read_graph(args.file)
    res = OrderedDict()
    res['n'] = g.n
    degrees = g.degrees()
    res['edges'] = len(g.edges)
    res['positive'] = len(g.positive_edges)
    res['negative'] = len(g.negative_edges)
    res['degrees'] = OrderedDict([
        ('min', min(degrees or [0])),
        ('max', max(degrees or [0])),
        ('sum', sum(degrees)),
        ])
    outcome = chromatic_number(g)
    if outcome.is_finite:
        res['chi'] = outcome.chi
        res['coloring'] = [list(part) for part in outcome.partition.parts]
    else:
        u, v, path = outcome.witness
        res['chi'] = 'infinite'
        res['unbalanced'] = OrderedDict([
            ('negative_edge', [u, v]),
            ('positive_path', list(path)),
            ])
    res['charpoly'] = poly_to_json(signed_char_poly(g))
    res['spectrum_float'] = [round(x, 9) for x in spectrum_float(g)]
    if args.lam is not None:
        res['spectral'] = spectral_report(g, parse_lambda_spec(args.lam))
    _emit(res)
    return EXIT_OK


def cmd_gallery(args, settings):
    if args.list or args.name is None:
        _emit(OrderedDict([('names', gallery_names())]))
        return EXIT_OK
    if args.verify:
        report = verify_named(args.name, *args.params, strict=False)
        _emit(report)
        return _status(report)
    c = build_named(args.name, *args.params)
    res = OrderedDict()
    res['name'] = c.name
    res['params'] = list(c.params)
    res['graph'] = graph_to_obj(c.graph)
    _emit(res)
    return EXIT_OK


def cmd_search(args, settings):
    lam = _lambda_value(args.lam)
    kw = _search_kw(settings)
    n_max = args.max_n or settings.get('search.max_n')
    if args.what == 'k':
        report = spectral_radius_order(lam, n_max, **kw)
    else:
        if args.p is None:
            raise BadParams('search %s requires -p!' % (args.what,))
        if args.what == 'kp':
            report = kp_search(lam, args.p, n_max, **kw)
        elif args.what == 'M':
            family = None
            if args.forbid:
                family = forbidden_family(lam, args.forbid, p=args.p, **kw)
            report = compute_M(lam, args.p, n_max, family, **kw)
        else:
            if args.bound is None:
                raise BadParams('search bound requires --bound!')
            bound = parse_number(args.bound)
            if not bound.is_rational:
                raise BadParams('The bound must be rational; found %s!'
                                % (bound,))
            report = verify_mult_bound(lam, args.p, n_max, bound.a,
                                       connected=args.connected,
                                       long=args.long, **kw)
    res = report.as_dict()
    _emit(res)
    return _status(res)


def cmd_verify(args, settings):
    if args.replay:
        with open(args.replay, 'rb') as fo:
            report = replay_report(loads(fo.read().decode('utf-8')))
        _emit(report)
        return _status(report)
    if args.list or args.claim is None:
        _emit(OrderedDict([('claims', claim_ids())]))
        return EXIT_OK
    report = run_claim(args.claim, ClaimContext(settings, long=args.long))
    _emit(report)
    return _status(report)


def _witness(args):
    if args.witness:
        return read_graph(args.witness)
    if args.gallery:
        return build_named(args.gallery, *args.params).colorable
    raise BadParams('code build requires --gallery or --witness!')


def cmd_code(args, settings):
    params = _code_params(args)
    if args.what == 'params':
        _emit(predicted_asymptotics(params))
        return EXIT_OK
    tolerance = settings.get('codes.tolerance')
    if args.what == 'check':
        if not args.vectors:
            raise BadParams('code check requires --vectors!')
        d, vectors = read_vectors(args.vectors)
        if args.d is not None:
            d = args.d
        graph = associated_graph(vectors, params, tolerance)
        check = check_realizable(graph, params, d)
        res = OrderedDict()
        res['N'] = graph.n
        res['d'] = d
        res['graph'] = graph_to_obj(graph)
        res['verdict'] = check.verdict
        res['rank'] = check.rank
        _emit(res)
        return EXIT_OK if check.verdict == 'YES' else EXIT_FAIL
    if args.d is None:
        raise BadParams('code build requires -d!')
    witness = _witness(args)
    outcome = chromatic_number(witness)
    if not outcome.is_finite:
        raise InvalidColoring('The witness has no valid coloring!')
    code = build_code(witness, outcome.partition, params, args.d)
    if args.vectors:
        write_vectors(realize_vectors(code), code.d, args.vectors)
        logger.info('vectors written to %s', args.vectors)
    _emit(code.as_dict(predicted_asymptotics(params)['formula']))
    return EXIT_OK
# ---------------------------------------------- ] ... commands ]


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='sgspec',
        description='Signed graphs, their spectra and spherical two-distance'
                    ' sets')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (twice: debug)')
    parser.add_argument('-q', '--quiet', action='store_true',
                        help='log errors only')
    parser.add_argument('--settings', metavar='FILE',
                        help='a settings file (search.max_n = 8 ...)')
    parser.add_argument('--wall-clock', dest='wall_clock', type=float,
                        metavar='SECONDS')
    sub = parser.add_subparsers(dest='command')
    sub.required = True

    p = sub.add_parser('analyze', help='facts about a signed graph file')
    p.add_argument('file')
    p.add_argument('--lambda', dest='lam', metavar='SPEC')
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser('gallery', help='named constructions')
    p.add_argument('name', nargs='?')
    p.add_argument('params', nargs='*', type=int)
    p.add_argument('--list', action='store_true')
    p.add_argument('--verify', action='store_true',
                   help='check the pinned facts exactly')
    p.set_defaults(func=cmd_gallery)

    p = sub.add_parser('search', help='searches over small signed graphs')
    p.add_argument('what', choices=['k', 'kp', 'M', 'bound'])
    p.add_argument('--lambda', dest='lam', required=True, metavar='SPEC')
    p.add_argument('-p', type=int)
    p.add_argument('--max-n', dest='max_n', type=int)
    p.add_argument('--jobs', type=int)
    p.add_argument('--forbid', type=int, metavar='H',
                   help='M: forbid graphs on <= H vertices with larger'
                        ' largest eigenvalue')
    p.add_argument('--bound', metavar='NUMBER',
                   help='bound: the slope c of mult <= c|G|')
    p.add_argument('--connected', action='store_true',
                   help='bound: enumerate connected graphs only')
    p.add_argument('--long', action='store_true',
                   help='bound: enumerate all orders, even where a'
                        ' reduction applies')
    p.set_defaults(func=cmd_search)

    p = sub.add_parser('verify', help='verify a registered claim')
    p.add_argument('claim', nargs='?')
    p.add_argument('--list', action='store_true')
    p.add_argument('--long', action='store_true',
                   help='run the full enumerations')
    p.add_argument('--replay', metavar='REPORT',
                   help='re-verify the witnesses of a saved report')
    p.add_argument('--jobs', type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('code', help='spherical two-distance codes')
    p.add_argument('what', choices=['build', 'check', 'params'])
    p.add_argument('--alpha', required=True, metavar='NUMBER')
    p.add_argument('--beta', required=True, metavar='NUMBER')
    p.add_argument('-d', type=int)
    p.add_argument('--gallery', metavar='NAME')
    p.add_argument('--param', dest='params', type=int, action='append',
                   default=[], metavar='INT')
    p.add_argument('--witness', metavar='FILE')
    p.add_argument('--vectors', metavar='FILE')
    p.set_defaults(func=cmd_code)
    return parser


def _setup_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose > 1:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(name)s %(levelname)s %(message)s')


def _limit_memory(mib):
    if resource is None or mib is None:
        return
    limit = mib * 1024 * 1024
    soft, hard = resource.getrlimit(resource.RLIMIT_AS)
    if hard != resource.RLIM_INFINITY:
        limit = min(limit, hard)
    if soft != resource.RLIM_INFINITY and soft <= limit:
        return
    try:
        resource.setrlimit(resource.RLIMIT_AS, (limit, hard))
    except (ValueError, OSError) as e:
        logger.warning('Could not limit the address space: %s', e)


def _error(code, message, status):
    _emit(OrderedDict([('error', code), ('message', message)]))
    return status


def _joined(argv):
    """
    >>> _joined(['code', 'params', '--beta', '-1/5', '--alpha'])
    ['code', 'params', '--beta=-1/5', '--alpha']
    """
    res = []
    args = iter(argv)
    for arg in args:
        if arg in NUMBER_OPTIONS:
            value = next(args, None)
            if value is not None:
                arg = '%s=%s' % (arg, value)
        res.append(arg)
    return res


def main(argv=None):
    """
    Run the command; return the exit status

    The address space limit (limits.arena_mib) is applied to the command
    process only, i.e. when argv is taken from sys.argv.
    """
    guard = argv is None
    if argv is None:
        argv = sys.argv[1:]
    parser = _build_parser()
    try:
        args = parser.parse_args(_joined(argv))
    except SystemExit as e:
        return e.code
    _setup_logging(args)
    try:
        settings = _settings(args)
        if guard:
            _limit_memory(settings.get('limits.arena_mib'))
        return args.func(args, settings)
    except LimitExceeded as e:
        logger.error('%s', e)
        return _error(e.code, str(e), EXIT_LIMIT)
    except MemoryError:
        logger.error('Out of memory')
        return _error(LimitExceeded.code, 'Out of memory', EXIT_LIMIT)
    except VerificationFailed as e:
        logger.error('%s', e)
        return _error(e.code, str(e), EXIT_FAIL)
    except SgspecError as e:
        logger.error('%s', e)
        return _error(e.code, str(e), e.exit_status)
    except (IOError, OSError) as e:
        if e.errno == errno.ENOENT:
            message = '%s: No such file or directory' % (e.filename,)
        else:
            message = '%s: %s' % (e.filename, os.strerror(e.errno or 0))
        logger.error('%s', message)
        return _error('FILE_ERROR', message, EXIT_USAGE)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        logger.error('%s', e)
        return _error('BAD_INPUT', str(e), EXIT_USAGE)


if __name__ == '__main__':
    sys.exit(main())
