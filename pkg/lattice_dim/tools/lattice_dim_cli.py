""" $lic$
Copyright (C) 2024-2026 by The lattice_dim Developers

This program is free software: you can redistribute it and/or modify it under
the terms of the Modified BSD-3 License as published by the Open Source
Initiative.

This program is distributed in the hope that it will be useful, but WITHOUT ANY
WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A
PARTICULAR PURPOSE. See the BSD-3 License for more details.

You should have received a copy of the Modified BSD-3 License along with this
program. If not, see <https://opensource.org/licenses/BSD-3-Clause>.
"""

import argparse
import json
import sys
from collections import OrderedDict

from lattice_dim.core import constructions
from lattice_dim.core import covers
from lattice_dim.core import dimensions
from lattice_dim.core import filters
from lattice_dim.core import lattice_io
from lattice_dim.core import theorems
from lattice_dim.core import GeneratorConfig
from lattice_dim.core import LatticeError, SizeLimit
from lattice_dim.core import Option
from lattice_dim.core import check_fixture, check_sub_fixture

from lattice_dim import lattices

# Cover enumeration bound used when scanning the catalog, whose largest
# lattices exceed the default bound.
CATALOG_COVER_SIZE = 40

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_SIZE_LIMIT = 2
EXIT_COUNTEREXAMPLE = 3

PRODUCT_OPS = OrderedDict([('sum', constructions.linear_sum),
                           ('cartesian', constructions.cartesian_product),
                           ('lex', constructions.lex_product),
                           ('rect', constructions.rect_product),
                          ])


class Counterexample(Exception):
    ''' A checked relation failed; `witness` is the JSON-ready evidence. '''

    def __init__(self, message, witness):
        super(Counterexample, self).__init__(message)
        self.witness = witness


def make_options(args, catalog=False):
    '''
    Get the Option from the common arguments.
    '''
    max_cover_size = args.max_cover_size
    if max_cover_size is None:
        max_cover_size = CATALOG_COVER_SIZE if catalog else 20
    return Option(max_cover_size=max_cover_size,
                  max_iso_size=args.max_iso_size,
                  nprocesses=args.processes,
                  verbose=args.verbose)


def _dump(obj):
    json.dump(obj, sys.stdout, indent=2)
    sys.stdout.write('\n')


def _print_table(report):
    for key in dimensions.DIMENSION_REPORT_LIST[:-1]:
        val = getattr(report, key)
        sys.stdout.write('{:<14}{}\n'.format(key, '-' if val is None else val))


def do_validate(args):
    ''' Validate a lattice file and print its summary. '''
    lat = lattice_io.load_lattice(args.file)
    res = OrderedDict()
    res['name'] = lat.name
    res['size'] = len(lat)
    res['bottom'] = lat.label(lat.bottom)
    res['top'] = lat.label(lat.top)
    res['covers'] = len(lat.hasse)
    _dump(res)


def do_dims(args):
    ''' Compute the dimension report. '''
    lat = lattice_io.load_lattice(args.file)
    report = dimensions.full_report(lat, make_options(args))
    if args.json:
        res = OrderedDict([('name', lat.name)])
        res.update(report.to_json())
        _dump(res)
    else:
        sys.stdout.write('{}\n'.format(lat.name))
        _print_table(report)


def do_covers(args):
    ''' Print the covers, or the minimal covers. '''
    lat = lattice_io.load_lattice(args.file)
    if args.minimal:
        family = covers.minimal_covers(lat, make_options(args))
    else:
        family = covers.all_covers(lat, make_options(args))
    _dump(family.names())


def do_filters(args):
    ''' Print the proper filters, or the prime filters. '''
    lat = lattice_io.load_lattice(args.file)
    flts = filters.prime_filters(lat) if args.prime \
            else filters.filters(lat)
    _dump(sorted(f.names() for f in flts))


def do_product(args):
    ''' Print the composite lattice of two lattice files. '''
    if args.file1 == '-' and args.file2 == '-':
        raise ValueError('product: the standard input can supply only one '
                         'operand.')
    lat1 = lattice_io.load_lattice(args.file1)
    lat2 = lattice_io.load_lattice(args.file2)
    lattice_io.dump_lattice(PRODUCT_OPS[args.op](lat1, lat2), sys.stdout)


def do_construct(args):
    ''' Print a constructed lattice. '''
    if args.kind == 'add-top':
        lat = constructions.add_top(lattice_io.load_lattice(args.arg))
    else:
        try:
            k = int(args.arg)
        except ValueError:
            raise ValueError('construct: k must be an integer, got {}.'
                             .format(args.arg))
        if args.kind == 'ind-k':
            lat = constructions.ind_k_family(k)
        else:
            lat = constructions.graft_m(k)
    lattice_io.dump_lattice(lat, sys.stdout)


def do_dot(args):
    ''' Export the Hasse diagram in DOT. '''
    dot = lattice_io.to_dot(lattice_io.load_lattice(args.file))
    if args.out:
        with open(args.out, 'w') as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)


def do_fixtures(args):
    ''' List, check or export the catalog fixtures. '''
    if args.export:
        _dump(lattices.export_fixtures(args.export))
        return

    if not args.check:
        _dump(lattices.all_lattices())
        return

    options = make_options(args, catalog=True)
    res = OrderedDict()
    failed = OrderedDict()
    for fix in lattices.fixtures():
        bad = check_fixture(fix, options)
        res[fix.id] = 'ok' if not bad else bad
        if bad:
            failed[fix.id] = bad
        if options.verbose:
            sys.stderr.write('fixtures: {} {}.\n'
                             .format(fix.id, 'ok' if not bad else 'FAILED'))
    for sub in lattices.fixture_sublattices():
        key = '{}{}'.format(sub.fixture.id, sub.members)
        bad = check_sub_fixture(sub, options)
        res[key] = 'ok' if not bad else bad
        if bad:
            failed[key] = bad

    if failed:
        raise Counterexample('fixtures: {} fixture(s) mismatched.'
                             .format(len(failed)), res)
    _dump(res)


def do_search(args):
    ''' Scan lattices for dimension gaps and relation violations. '''
    if args.catalog:
        options = make_options(args, catalog=True)
        config = GeneratorConfig(max_n=1)
        lats = [fix.lattice for fix in lattices.fixtures()]
        report = theorems.search_gaps(config, options, lattices=lats)
    else:
        options = make_options(args)
        if args.mode == 'random':
            config = GeneratorConfig(max_n=args.max_n, mode='random',
                                     seed=args.seed,
                                     sample_count=args.samples)
        else:
            config = GeneratorConfig(max_n=args.max_n)
        report = theorems.search_gaps(config, options)

    res = OrderedDict()
    res['seed'] = None if args.catalog else args.seed
    res['mode'] = 'catalog' if args.catalog else args.mode
    res.update(report.to_json())

    if report.violations:
        raise Counterexample('search: {} violation(s) found.'
                             .format(len(report.violations)), res)
    _dump(res)


def argparser():
    ''' Argument parser. '''

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--max-cover-size', type=int, default=None,
                        help='maximum lattice size for cover enumeration. '
                             'Default 20, or {} over the catalog.'
                             .format(CATALOG_COVER_SIZE))
    common.add_argument('--max-iso-size', type=int, default=12,
                        help='maximum lattice size for isomorphism search')
    common.add_argument('-p', '--processes', type=int, default=1,
                        help='Number of parallel processes to use for search.')
    common.add_argument('-v', '--verbose', action='store_true',
                        help='Show progress and details.')

    ap = argparse.ArgumentParser(
        prog='lattice_dim',
        description='Dimension invariants of finite lattices.')
    sub = ap.add_subparsers(dest='command')
    sub.required = True

    sp = sub.add_parser('validate', parents=[common],
                        help='validate a lattice JSON file')
    sp.add_argument('file', help='lattice JSON file, "-" for stdin')
    sp.set_defaults(func=do_validate)

    sp = sub.add_parser('dims', parents=[common],
                        help='compute Ind, ind, dim, Kdim and height')
    sp.add_argument('file', help='lattice JSON file, "-" for stdin')
    sp.add_argument('--json', action='store_true',
                    help='print the report as JSON instead of a table')
    sp.set_defaults(func=do_dims)

    sp = sub.add_parser('covers', parents=[common],
                        help='list the covers of a lattice')
    sp.add_argument('file', help='lattice JSON file, "-" for stdin')
    sp.add_argument('--minimal', action='store_true',
                    help='only the minimal covers')
    sp.set_defaults(func=do_covers)

    sp = sub.add_parser('filters', parents=[common],
                        help='list the proper filters of a lattice')
    sp.add_argument('file', help='lattice JSON file, "-" for stdin')
    sp.add_argument('--prime', action='store_true',
                    help='only the prime filters')
    sp.set_defaults(func=do_filters)

    sp = sub.add_parser('product', parents=[common],
                        help='build a sum or product of two lattices')
    sp.add_argument('--op', required=True, choices=list(PRODUCT_OPS),
                    help='linear sum, Cartesian, lexicographic or '
                         'rectangular product')
    sp.add_argument('file1', help='left lattice JSON file, "-" for stdin')
    sp.add_argument('file2', help='right lattice JSON file, "-" for stdin')
    sp.set_defaults(func=do_product)

    sp = sub.add_parser('construct', parents=[common],
                        help='build a witness lattice')
    sp.add_argument('kind', choices=['add-top', 'ind-k', 'graft-m'],
                    help='add-top takes a lattice file, ind-k and graft-m '
                         'take k')
    sp.add_argument('arg', help='lattice JSON file or k')
    sp.set_defaults(func=do_construct)

    sp = sub.add_parser('dot', parents=[common],
                        help='export the Hasse diagram in DOT')
    sp.add_argument('file', help='lattice JSON file, "-" for stdin')
    sp.add_argument('--out', help='output DOT file, default stdout')
    sp.set_defaults(func=do_dot)

    sp = sub.add_parser('fixtures', parents=[common],
                        help='list, check or export the catalog lattices')
    sp.add_argument('--check', action='store_true',
                    help='recompute every published value')
    sp.add_argument('--export', metavar='DIR',
                    help='write the lattice JSON files into DIR')
    sp.set_defaults(func=do_fixtures)

    sp = sub.add_parser('search', parents=[common],
                        help='search for dimension gaps and relation '
                             'violations')
    sp.add_argument('--seed', type=int, default=0,
                    help='random seed')
    sp.add_argument('--max-n', type=int, default=7,
                    help='maximum lattice size')
    sp.add_argument('--samples', type=int, default=100,
                    help='number of random lattices')
    sp.add_argument('--mode', default='random',
                    choices=['random', 'exhaustive'],
                    help='random samples or all lattices up to --max-n')
    sp.add_argument('--catalog', action='store_true',
                    help='scan the catalog lattices only')
    sp.set_defaults(func=do_search)

    return ap


def main(argv=None):
    ''' Main function. '''
    args = argparser().parse_args(argv)
    try:
        args.func(args)
    except Counterexample as e:
        sys.stderr.write('{}\n'.format(e))
        _dump(e.witness)
        return EXIT_COUNTEREXAMPLE
    except SizeLimit as e:
        sys.stderr.write('{}: {}\n'.format(type(e).__name__, e))
        return EXIT_SIZE_LIMIT
    except (LatticeError, ValueError, IOError) as e:
        sys.stderr.write('{}: {}\n'.format(type(e).__name__, e))
        return EXIT_INVALID
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
