# -*- coding: utf-8 -*-

# pentapods
# ---------
# Self-motions of pentapods and hexapods: exact bond elimination,
# design classification and motion verification.
#
# Author:   sonntagsgesicht
# Version:  0.1, copyright Saturday, 17 October 2026
# Website:  https://github.com/sonntagsgesicht/pentapods
# License:  Apache License 2.0 (see LICENSE file)

"""command line interface

exit codes: 0 success, 1 negative verdict, 2 input error,
3 failing reproduction
"""

import json
import logging
import sys
from argparse import ArgumentParser
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from os import listdir, path as _path

from tabulate import tabulate

from . import __version__
from .bonds import REGISTRY, reproduce
from .classify import classify
from .geometry import LEG_COUNTS, SAMPLES as SINGULAR_SAMPLES, \
    PodDesign, architecturally_singular
from .motions import DEVIATION, check_samples, local_mobility, \
    motion_samples, write_csv
from .tools.constant import rational, text

_logger = logging.getLogger(__name__)

SUCCESS, NEGATIVE, INPUT_ERROR, MISMATCH = 0, 1, 2, 3
SCHEMA = 1
DESIGNS = _path.join(_path.dirname(__file__), 'designs')
FORMATS = 'text', 'json'
VERIFY_SAMPLES = 200


# --- design files ---

def _rational(value, where):
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        msg = f"{where}: rational string required, got {value!r}"
        raise ValueError(msg)
    try:
        return rational(value)
    except ValueError:
        msg = f"{where}: malformed rational {value!r}"
        raise ValueError(msg) from None


def _anchor(value, where):
    if not isinstance(value, list) or len(value) not in (2, 3):
        msg = f"{where}: two or three coordinates required, got {value!r}"
        raise ValueError(msg)
    return [_rational(x, f"{where}[{k}]") for k, x in enumerate(value)]


def parse_design(data, source='design'):
    """:class:`PodDesign` of a design file object

    :param data: dict with `schema`, `type`, `legs` and the optional
        `name` and `case`; each leg has `platform` and `base` arrays of
        rational strings and an optional `radius2`
    :param source: name used in error messages
    """
    if not isinstance(data, dict):
        raise ValueError(f"{source}: object required")
    schema = data.get('schema', SCHEMA)
    if schema != SCHEMA:
        raise ValueError(f"{source}: schema: unsupported version {schema!r}")
    legs = data.get('legs')
    if not isinstance(legs, list) or len(legs) not in LEG_COUNTS:
        msg = f"{source}: legs: list of {LEG_COUNTS[0]} to " \
              f"{LEG_COUNTS[-1]} legs required"
        raise ValueError(msg)
    parsed = []
    for i, leg in enumerate(legs):
        where = f"{source}: legs[{i}]"
        if not isinstance(leg, dict):
            raise ValueError(f"{where}: object required")
        for key in ('platform', 'base'):
            if key not in leg:
                raise ValueError(f"{where}: missing field {key!r}")
        r2 = leg.get('radius2')
        parsed.append((_anchor(leg['platform'], f"{where}.platform"),
                       _anchor(leg['base'], f"{where}.base"),
                       None if r2 is None
                       else _rational(r2, f"{where}.radius2")))
    design = PodDesign(parsed, data.get('name'), data.get('case'))
    kind = data.get('type')
    if kind is not None and kind != design.type:
        msg = f"{source}: type: {kind!r} given but {len(legs)} legs found"
        raise ValueError(msg)
    return design


def resolve(filename):
    """path of a design file, falling back to the bundled designs"""
    if _path.exists(filename):
        return filename
    bundled = _path.join(DESIGNS, _path.basename(filename))
    if not bundled.endswith('.json'):
        bundled += '.json'
    if _path.exists(bundled):
        return bundled
    raise ValueError(f"{filename}: no such design file")


def read_design(filename):
    """read and validate a design file"""
    filename = resolve(filename)
    with open(filename, encoding='utf-8') as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            msg = f"{filename}:{e.lineno}:{e.colno}: {e.msg}"
            raise ValueError(msg) from None
    return parse_design(data, filename)


def bundled_designs():
    """names of the bundled design files"""
    return sorted(f[:-5] for f in listdir(DESIGNS) if f.endswith('.json'))


# --- commands ---

def _print(data, fmt):
    if fmt == 'json':
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(data)


def cmd_classify(args):
    design = read_design(args.path)
    report = classify(design, samples=args.samples)
    _print(report.to_dict() if args.format == 'json' else report.text(),
           args.format)
    return SUCCESS if report.cases else NEGATIVE


def _reproduce(item):
    computation_id, with_cross_resultant = item
    return reproduce(computation_id, with_cross_resultant).to_dict()


def cmd_reproduce(args):
    if args.all:
        ids = [i for i, func in REGISTRY.items()
               if not (args.skip_slow and func.slow)]
    else:
        ids = args.ids
    if not ids:
        msg = f"computation id or --all required, " \
              f"registry: {', '.join(REGISTRY)}"
        raise ValueError(msg)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        msg = f"unknown computation id {', '.join(map(repr, unknown))}, " \
              f"registry: {', '.join(REGISTRY)}"
        raise ValueError(msg)
    items = [(i, args.with_cross_resultant) for i in ids]
    if args.jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_reproduce, items))
    else:
        results = [_reproduce(item) for item in items]

    if args.format == 'json':
        _print(results, 'json')
    else:
        rows = []
        for r in results:
            status = Counter(a['status'] for a in r['assertions'])
            rows.append((r['id'], r['status'], status['pass'],
                         status['fail'], status['skip'], r['seconds']))
        print(tabulate(rows, headers=('id', 'status', 'pass', 'fail',
                                      'skip', 'seconds')))
        for r in results:
            for a in r['assertions']:
                if a['status'] == 'fail':
                    print(f"{r['id']}: {a['name']} failed")
                    if 'expected' in a:
                        print(f"  expected {a['expected']}")
                        print(f"  got      {a['got']}")
    failed = any(r['status'] == 'fail' for r in results)
    return MISMATCH if failed else SUCCESS


def cmd_verify_motion(args):
    design = read_design(args.path)
    report = classify(design)
    if not report.cases:
        _print({'design': design.name, 'case': None, 'verified': False}
               if args.format == 'json' else 'no case', args.format)
        return NEGATIVE
    if args.case is not None and args.case not in report.labels:
        msg = f"case mismatch: {args.case!r} given, design matches " \
              f"{', '.join(report.labels)}"
        raise ValueError(msg)
    case = report.case(args.case) if args.case else report.cases[0]
    samples = motion_samples(design, case, args.samples)
    check = check_samples(samples)
    radii = samples[0].lengths
    mobility = Counter(local_mobility(design, s.pose, exact=False,
                                      radii=radii, tol=args.tol)
                       for s in samples)
    verified = check.count == args.samples and \
        check.deviation <= args.tol and check.psi <= 1e-12
    if args.csv:
        with open(args.csv, 'w', newline='', encoding='utf-8') as f:
            write_csv(samples, f)
    data = {'design': design.name, 'case': case.label,
            'title': case.title, 'samples': check.count,
            'max_deviation': check.deviation, 'max_psi': check.psi,
            'max_norm_error': check.norm,
            'mobility': {str(k): v for k, v in sorted(mobility.items())},
            'verified': verified}
    if args.format == 'json':
        _print(data, 'json')
    else:
        rows = [(k, v) for k, v in data.items() if k != 'mobility']
        rows.append(('mobility', ', '.join(f"{k}: {v}" for k, v
                                           in data['mobility'].items())))
        print(tabulate(rows, tablefmt='plain'))
    return SUCCESS if verified else NEGATIVE


def cmd_singular(args):
    design = read_design(args.path)
    verdict = architecturally_singular(design, args.samples, args.seed)
    if verdict.singular:
        line = f"singular (probabilistic, {verdict.samples} samples)"
        data = {'status': 'singular', 'samples': verdict.samples,
                'rank': verdict.rank}
    else:
        e, f = verdict.witness.e, verdict.witness.f
        line = f"regular, witness pose e = ({', '.join(map(text, e))}), " \
               f"f = ({', '.join(map(text, f))})"
        data = {'status': 'regular', 'samples': verdict.samples,
                'witness': [text(x) for x in e + f]}
    _print(data if args.format == 'json' else line, args.format)
    return NEGATIVE if verdict.singular else SUCCESS


def parser():
    p = ArgumentParser(prog='pentapods',
                       description='self-motions of pentapods and hexapods')
    p.add_argument('--version', action='version', version=__version__)
    p.add_argument('-v', '--verbose', action='count', default=0,
                   help='log INFO (-v) or DEBUG (-vv) records')
    sub = p.add_subparsers(dest='command', required=True)

    c = sub.add_parser('classify', help='classify a design file')
    c.add_argument('path', help='design file or name of a bundled design')
    c.add_argument('--format', choices=FORMATS, default='text')
    c.add_argument('--samples', type=int, default=SINGULAR_SAMPLES,
                   help='poses of the singularity test')
    c.set_defaults(func=cmd_classify)

    r = sub.add_parser('reproduce', help='rerun registered derivations')
    r.add_argument('ids', nargs='*', metavar='id')
    r.add_argument('--all', action='store_true')
    r.add_argument('--jobs', type=int, default=1)
    r.add_argument('--skip-slow', action='store_true',
                   help='leave out slow derivations when running --all')
    r.add_argument('--with-footnote7', '--with-cross-resultant',
                   dest='with_cross_resultant', action='store_true',
                   help='include the cross resultant of the appendix '
                        'numerators (hours)')
    r.add_argument('--format', choices=FORMATS, default='text')
    r.set_defaults(func=cmd_reproduce)

    v = sub.add_parser('verify-motion',
                       help='sample and verify the self-motion of a design')
    v.add_argument('path')
    v.add_argument('--case', default=None, help='case label')
    v.add_argument('--samples', type=int, default=VERIFY_SAMPLES)
    v.add_argument('--tol', type=float, default=DEVIATION)
    v.add_argument('--csv', default=None, help='write samples to file')
    v.add_argument('--format', choices=FORMATS, default='text')
    v.set_defaults(func=cmd_verify_motion)

    s = sub.add_parser('singular', help='architectural singularity test')
    s.add_argument('path')
    s.add_argument('--samples', type=int, default=SINGULAR_SAMPLES)
    s.add_argument('--seed', type=int, default=None)
    s.add_argument('--format', choices=FORMATS, default='text')
    s.set_defaults(func=cmd_singular)
    return p


def main(argv=None):
    args = parser().parse_args(argv)
    if args.verbose:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s %(name)s: %(message)s'))
        root = logging.getLogger('pentapods')
        root.addHandler(handler)
        root.setLevel(logging.DEBUG if args.verbose > 1 else logging.INFO)
    try:
        return args.func(args)
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == '__main__':
    sys.exit(main())
