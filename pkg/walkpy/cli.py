"""Command-line interface: hitting, commute and cover series as CSV or JSON

Exit codes: 0 success, 2 usage error, 3 exact method refused by the node cap,
4 I/O error.
"""

import argparse
import itertools
import json
import logging
import sys

import numpy as np
import pandas as pd

from walkpy import __version__
from walkpy.constants import EXACT_CAP_DEFAULT, MC_TRIALS_DEFAULT, STEP_CAP_DEFAULT, RNG_ALGORITHM
from walkpy.errors import WalkpyError, CapExceededError, GraphError, GraphKindError
from walkpy.graphs import KINDS, generate_graph, read_edge_list, transition_matrix, is_complete,\
    is_cycle, is_path
from walkpy.chains import hitting_cdf, commute_cdf, commute_pmf_convolution
from walkpy.chains.absorbing import _check_horizon
from walkpy.cover import CoverQuery, cover_cdf, explicit_ordering, sup_error

_log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUSED = 3
EXIT_IO = 4

COVER_METHODS = ['exact', 'approx', 'approx-all-pairs', 'closed', 'closed-complete', 'closed-cycle',
                 'closed-path', 'mc', 'monte-carlo']


def parse_generator(text, seed=None):
    """Build a graph from the inline syntax KIND:N[:P], e.g. 'erdos_renyi:20:0.3'"""
    fields = text.split(':')
    if len(fields) not in (2, 3) or fields[0] not in KINDS:
        raise GraphError("--generate expects KIND:N[:P] with KIND in " + str(KINDS) + ", got " + repr(text))
    try:
        n = int(fields[1])
        p = float(fields[2]) if len(fields) == 3 else None
    except ValueError:
        raise GraphError("--generate expects an integer N and a float P, got " + repr(text))
    return generate_graph(fields[0], n, p=p, seed=seed)


def resolve_method(name, g):
    """Map a CLI method name onto a CoverQuery method; 'closed' picks complete, cycle, then path"""
    if name == 'mc':
        return 'monte-carlo'
    if name != 'closed':
        return name
    for method, shape in (('closed-complete', is_complete), ('closed-cycle', is_cycle),
                          ('closed-path', is_path)):
        if shape(g):
            return method
    raise GraphKindError("no closed form for " + repr(g) + "; closed forms cover complete graphs, cycles and paths")


def _ordering(args, g):
    if args.order == 'dfs':
        return None
    kind, _, nodes = args.order.partition(':')
    if kind != 'explicit' or not nodes:
        raise ValueError("--order expects 'dfs' or 'explicit:<comma separated nodes>', got " + repr(args.order))
    return explicit_ordering(g, args.start, [int(x) for x in nodes.split(',')])


def _frame(series):
    frame = series.to_frame()
    half_width = series.meta.get('dkw_half_width')
    if half_width is not None:
        frame['band_low'] = np.clip(series.cdf - half_width, 0.0, 1.0)
        frame['band_high'] = np.clip(series.cdf + half_width, 0.0, 1.0)
    return frame


def _jsonable(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(repr(value) + " is not JSON serialisable")


def _metadata(args, g, horizon, **extra):
    meta = {'command': args.command, 'graph': g.fingerprint, 'n': g.n, 'm': g.m, 'horizon': horizon,
            'version': __version__}
    meta.update(extra)
    return meta


def _finite_or_none(value):
    return value if np.isfinite(value) else None


def _write(args, frame, metadata, summary=None):
    """Serialise one result to stdout; `summary` maps pair names to sup errors

    JSON has no inf or nan: non-finite values (all-pairs overflow and the pmf
    differenced from it) become null. CSV writes them as inf and nan.
    """
    out = sys.stdout
    if args.format == 'json':
        finite = np.isfinite(frame.to_numpy(dtype=float))
        records = frame.astype(object).where(finite, None).to_dict(orient='records')
        payload = {'metadata': metadata, 'records': records}
        if summary is not None:
            payload['sup_error'] = {pair: _finite_or_none(error) for pair, error in summary.items()}
        out.write(json.dumps(payload, default=_jsonable, allow_nan=False) + '\n')
        return
    frame.to_csv(out, index=False, lineterminator='\n')
    for pair, error in (summary or {}).items():
        out.write('# sup_error ' + pair + '=' + repr(error) + '\n')


def _prepare(args):
    """Graph, transition matrix and horizon shared by every command"""
    if args.graph is not None:
        g = read_edge_list(args.graph)
    else:
        g = parse_generator(args.generate, seed=args.seed)
    m = transition_matrix(g)
    horizon = _check_horizon(m, args.horizon)
    _log.info("graph %s with n=%d, m=%d; horizon %d", g.fingerprint, g.n, g.m, horizon)
    return g, m, horizon


def cmd_hitting(args):
    g, m, horizon = _prepare(args)
    series = hitting_cdf(m, args.start, args.target, horizon)
    metadata = _metadata(args, g, horizon, start=args.start, target=args.target, method=series.method)
    _write(args, _frame(series), metadata)


def cmd_commute(args):
    g, m, horizon = _prepare(args)
    if args.method == 'chain':
        frame = _frame(commute_cdf(m, args.i, args.j, horizon))
    else:
        pmf = commute_pmf_convolution(m, args.i, args.j, horizon).pmf
        frame = pd.DataFrame({'t': np.arange(1, horizon + 1), 'cdf': np.cumsum(pmf), 'pmf': pmf})
    metadata = _metadata(args, g, horizon, i=args.i, j=args.j, method=args.method)
    _write(args, frame, metadata)


def _cover_query(args, g, horizon, method):
    return CoverQuery(args.start, horizon=horizon, method=resolve_method(method, g), cap=args.cap,
                      allow_large=args.allow_large, ordering=_ordering(args, g), clamp=args.clamp,
                      trials=args.trials, seed=args.seed, step_cap=args.step_cap, workers=args.workers)


def _series_meta(series):
    return {key: value for key, value in series.meta.items() if key not in ('start', 'dkw_half_width')}


def cmd_cover(args):
    g, m, horizon = _prepare(args)
    query = _cover_query(args, g, horizon, args.method)
    series = cover_cdf(m, query)
    metadata = _metadata(args, g, horizon, start=args.start, method=query.method, **_series_meta(series))
    if query.method == 'monte-carlo':
        metadata.update(seed=args.seed, rng=RNG_ALGORITHM, band_half_width=series.meta['dkw_half_width'])
    _write(args, _frame(series), metadata)


def cmd_compare(args):
    methods = [name.strip() for name in args.methods.split(',') if name.strip()]
    if len(methods) < 2 or len(set(methods)) != len(methods):
        raise ValueError("--methods needs at least two distinct methods, got " + repr(args.methods))
    for name in methods:
        if name not in COVER_METHODS:
            raise ValueError("unknown method " + repr(name) + "; choose from " + str(COVER_METHODS))
    g, m, horizon = _prepare(args)
    results = {}
    for name in methods:
        results[name] = cover_cdf(m, _cover_query(args, g, horizon, name))
    frame = pd.DataFrame({'t': np.arange(1, horizon + 1)})
    for name in methods:
        frame['cdf_' + name] = results[name].cdf
    summary = {}
    for a, b in itertools.combinations(methods, 2):
        summary[a + '/' + b] = sup_error(results[a], results[b])
    metadata = _metadata(args, g, horizon, start=args.start, methods=methods)
    if any(resolve_method(name, g) == 'monte-carlo' for name in methods):
        metadata.update(seed=args.seed, rng=RNG_ALGORITHM)
    _write(args, frame, metadata, summary)


def _common_parser():
    parser = argparse.ArgumentParser(add_help=False)
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--graph', metavar='PATH', help='edge-list file')
    source.add_argument('--generate', metavar='KIND:N[:P]', help='inline generator, e.g. cycle:12')
    parser.add_argument('--horizon', type=int, default=None, help='last time step T (default ceil(100 n ln n))')
    parser.add_argument('--seed', type=int, default=0, help='seed for erdos_renyi and Monte Carlo')
    parser.add_argument('--format', choices=['csv', 'json'], default='csv')
    return parser


def _cover_options(parser):
    parser.add_argument('--start', type=int, required=True)
    parser.add_argument('--cap', type=int, default=EXACT_CAP_DEFAULT, help='node cap of the exact method')
    parser.add_argument('--allow-large', action='store_true', help='permit --cap above 24')
    parser.add_argument('--workers', type=int, default=1, help='threads of the exact method')
    parser.add_argument('--trials', type=int, default=MC_TRIALS_DEFAULT)
    parser.add_argument('--step-cap', type=int, default=STEP_CAP_DEFAULT)
    parser.add_argument('--order', default='dfs', help="'dfs' or 'explicit:<comma separated nodes>'")
    parser.add_argument('--clamp', action='store_true', help='running maximum clipped to [0, 1]')


def build_parser():
    parser = argparse.ArgumentParser(prog='walkpy', description=__doc__.splitlines()[0])
    parser.add_argument('-v', '--verbose', action='count', default=0, help='-v info, -vv debug')
    parser.add_argument('--version', action='version', version='%(prog)s ' + __version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True
    common = _common_parser()

    hitting = commands.add_parser('hitting', parents=[common], help='hitting time CDF')
    hitting.add_argument('--start', type=int, required=True)
    hitting.add_argument('--target', type=int, required=True)
    hitting.set_defaults(handler=cmd_hitting)

    commute = commands.add_parser('commute', parents=[common], help='commute time CDF')
    commute.add_argument('--i', dest='i', type=int, required=True)
    commute.add_argument('--j', dest='j', type=int, required=True)
    commute.add_argument('--method', choices=['chain', 'convolution'], default='chain')
    commute.set_defaults(handler=cmd_commute)

    cover = commands.add_parser('cover', parents=[common], help='cover time CDF')
    _cover_options(cover)
    cover.add_argument('--method', choices=COVER_METHODS, default='exact')
    cover.set_defaults(handler=cmd_cover)

    compare = commands.add_parser('compare', parents=[common], help='cover time CDF by several methods')
    _cover_options(compare)
    compare.add_argument('--methods', required=True, help='comma separated, e.g. exact,approx')
    compare.set_defaults(handler=cmd_compare)
    return parser


def main(argv=None):
    """Run one command; returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    level = logging.WARNING if args.verbose == 0 else logging.INFO if args.verbose == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format='%(levelname)s %(name)s: %(message)s')
    try:
        args.handler(args)
    except CapExceededError as exc:
        print('walkpy: ' + str(exc), file=sys.stderr)
        return EXIT_REFUSED
    except (WalkpyError, ValueError) as exc:
        print('walkpy: error: ' + str(exc), file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print('walkpy: ' + str(exc), file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
