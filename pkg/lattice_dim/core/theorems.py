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

import sys
from collections import namedtuple, OrderedDict
from multiprocessing import Pool

from . import constructions
from . import covers
from . import dimensions
from . import filters
from . import oracle
from .lattice_error import SizeLimit
from .lattice_gen import enumerate_lattices
from .lattice_io import lattice_to_json
from .option import Option
from .sublattice import sublattice
from .. import util

'''
Machine checks of the known relations between the dimensions, on single
lattices, on pairs through their products, and on sublattices.
'''

# Pairs are checked during a search only up to this product size.
PAIR_SEARCH_SIZE = 25

# Refining minimal covers are checked only up to this lattice size.
REFINEMENT_CHECK_SIZE = 8

class Violation(namedtuple('Violation', ['theorem', 'lattice', 'detail'])):
    '''
    A failed check: the relation name, the lattice it failed on, and a
    human-readable detail.
    '''

    def to_json(self):
        ''' JSON-ready ordered dict, with the lattice as witness. '''
        res = OrderedDict()
        res['theorem'] = self.theorem
        res['detail'] = self.detail
        res['lattice'] = lattice_to_json(self.lattice)
        return res


def check_lattice(lattice, options=None):
    '''
    Check the single-lattice relations: ind <= Ind < h, ind = Ind when all
    minimal covers have at most two members (also for every principal
    filter), irredundancy of minimal covers, existence of refining minimal
    covers, the Ind and ind witnesses, and Ind = 0 after adding a top.

    Return the list of Violation.
    '''
    if options is None:
        options = Option()
    vios = []

    def _fail(theorem, detail):
        vios.append(Violation(theorem, lattice, detail))

    ind_l = dimensions.ind_large(lattice)
    ind_s = dimensions.ind_small(lattice, options)
    hgt = dimensions.height(lattice)

    if ind_s > ind_l:
        _fail('ind_le_Ind', 'ind {} > Ind {}'.format(ind_s, ind_l))
    if ind_l >= hgt:
        _fail('Ind_lt_height', 'Ind {} >= h {}'.format(ind_l, hgt))

    mcs = covers.minimal_cover_masks(lattice, lattice.bottom)
    if all(util.popcount(m) <= 2 for m in mcs):
        if ind_s != ind_l:
            _fail('pair_covers_ind_eq_Ind',
                  'ind {} != Ind {}'.format(ind_s, ind_l))
        for x in range(len(lattice)):
            if any(util.popcount(m) > 2
                   for m in covers.minimal_cover_masks(lattice, x)):
                _fail('pair_covers_hereditary',
                      'up({}) has a larger minimal cover'
                      .format(lattice.label(x)))
            elif dimensions.ind_small_at(lattice, x, options) \
                    != dimensions.ind_large_at(lattice, x):
                _fail('pair_covers_ind_eq_Ind',
                      'ind(up({0})) != Ind(up({0}))'
                      .format(lattice.label(x)))

    for mask in mcs:
        for v in util.iter_bits(mask):
            if lattice.join_all(mask & ~util.bit(v)) == lattice.top:
                _fail('minimal_cover_irredundant',
                      '{} is redundant in {}'
                      .format(lattice.label(v), lattice.labels_of(mask)))

    if len(lattice) <= REFINEMENT_CHECK_SIZE:
        for cov in covers.all_covers(lattice, options).covers:
            region = lattice.down_closure(cov.mask)
            if not any(m & ~region == 0 for m in mcs):
                _fail('minimal_cover_refines_cover',
                      'no minimal cover refines {}'.format(cov))

    witness = dimensions.ind_large_witness(lattice)
    if witness is not None:
        a, u = witness
        nxt = lattice.join(lattice.pseudostar(u), u)
        if lattice.join(a, u) != lattice.top \
                or dimensions.ind_large_at(lattice, nxt) != ind_l - 1:
            _fail('ind_large_witness',
                  'witness ({}, {}) does not attain Ind {}'
                  .format(lattice.label(a), lattice.label(u), ind_l))

    if ind_s >= 0:
        attained = False
        for mask in mcs:
            for v in util.iter_bits(mask):
                nxt = lattice.join(lattice.pseudostar(v), v)
                if dimensions.ind_small_at(lattice, nxt, options) \
                        == ind_s - 1:
                    attained = True
        if not attained:
            _fail('ind_small_witness',
                  'no minimal cover member attains ind {}'.format(ind_s))

    if len(lattice) > 1:
        topped = constructions.add_top(lattice)
        if dimensions.ind_large(topped) != 0:
            _fail('add_top_Ind_zero', 'Ind after adding a top is {}'
                  .format(dimensions.ind_large(topped)))

    return vios


def check_pair(lat1, lat2, options=None):
    '''
    Check the product relations on the pair: Ind of the Cartesian product is
    the max of the factors, symmetric and below their sum; its filters and
    pseudostars are componentwise; the linear sum and lexicographic product
    bound Ind of the right factor when its nonzero pseudostars are 0; and
    the rectangular product pseudostars, upper bound and sandwich.

    Return the list of Violation.
    '''
    if options is None:
        options = Option()
    vios = []

    ind1 = dimensions.ind_large(lat1)
    ind2 = dimensions.ind_large(lat2)
    num2 = len(lat2)

    prod = constructions.cartesian_product(lat1, lat2)
    ind_prod = dimensions.ind_large(prod)
    if ind_prod != max(ind1, ind2):
        vios.append(Violation('cartesian_max', prod,
                              'Ind {} != max({}, {})'
                              .format(ind_prod, ind1, ind2)))
    rev = constructions.cartesian_product(lat2, lat1)
    if dimensions.ind_large(rev) != ind_prod:
        vios.append(Violation('cartesian_symmetric', rev,
                              'Ind {} != {}'.format(
                                  dimensions.ind_large(rev), ind_prod)))
    if len(lat1) > 1 and num2 > 1 and ind_prod > ind1 + ind2:
        vios.append(Violation('cartesian_sum_bound', prod,
                              'Ind {} > {} + {}'
                              .format(ind_prod, ind1, ind2)))

    for x in range(len(lat1)):
        for y in range(num2):
            idx = x * num2 + y
            expected = 0
            for xx in util.iter_bits(lat1.up_set(x)):
                for yy in util.iter_bits(lat2.up_set(y)):
                    expected |= util.bit(xx * num2 + yy)
            if prod.up_set(idx) != expected:
                vios.append(Violation('cartesian_filter_product', prod,
                                      'up({}) is not componentwise'
                                      .format(prod.label(idx))))
            star = lat1.pseudostar(x) * num2 + lat2.pseudostar(y)
            if prod.pseudostar(idx) != star:
                vios.append(Violation('cartesian_pseudostar', prod,
                                      '{}* is not componentwise'
                                      .format(prod.label(idx))))

    trivial2 = dimensions.has_trivial_pseudostars(lat2)
    if trivial2:
        lsum = constructions.linear_sum(lat1, lat2)
        if ind2 > dimensions.ind_large(lsum):
            vios.append(Violation('sum_lower_bound', lsum,
                                  'Ind(right) {} > Ind(sum) {}'.format(
                                      ind2, dimensions.ind_large(lsum))))
        lex = constructions.lex_product(lat1, lat2)
        if ind2 > dimensions.ind_large(lex):
            vios.append(Violation('lex_lower_bound', lex,
                                  'Ind(right) {} > Ind(lex) {}'.format(
                                      ind2, dimensions.ind_large(lex))))

    if len(lat1) > 1 and num2 > 1:
        vios += _check_rect(lat1, lat2, ind1, ind2, ind_prod, trivial2)

    return vios


def _check_rect(lat1, lat2, ind1, ind2, ind_prod, trivial2):
    vios = []
    rect = constructions.rect_product(lat1, lat2)
    elems = constructions.rect_elements(lat1, lat2)
    position = {e: idx for idx, e in enumerate(elems)}

    for idx, (a, b) in enumerate(elems):
        if idx == 0:
            continue
        sa, sb = lat1.pseudostar(a), lat2.pseudostar(b)
        zero_a, zero_b = sa == lat1.bottom, sb == lat2.bottom
        if zero_a and zero_b:
            expected = (lat1.bottom, lat2.bottom)
        elif not zero_a and not zero_b:
            expected = (lat1.top, lat2.top)
        elif zero_a:
            expected = (lat1.top, sb)
        else:
            expected = (sa, lat2.top)
        if rect.pseudostar(idx) != position[expected]:
            vios.append(Violation('rect_pseudostar', rect,
                                  '{}* is {}, expected {}'.format(
                                      rect.label(idx),
                                      rect.label(rect.pseudostar(idx)),
                                      rect.label(position[expected]))))

    ind_rect = dimensions.ind_large(rect)
    hered = dimensions.hereditary_sp_property(lat1) \
            and dimensions.hereditary_sp_property(lat2)
    trivial = dimensions.has_trivial_pseudostars(lat1) and trivial2
    if hered and ind_rect > max(ind1, ind2) + 1:
        vios.append(Violation('rect_upper_bound', rect,
                              'Ind {} > max({}, {}) + 1'
                              .format(ind_rect, ind1, ind2)))
    if trivial and ind_prod > ind_rect:
        vios.append(Violation('cartesian_le_rect', rect,
                              'Ind(product) {} > Ind(rect) {}'
                              .format(ind_prod, ind_rect)))
    if hered and trivial and not ind_prod <= ind_rect <= ind_prod + 1:
        vios.append(Violation('rect_sandwich', rect,
                              'Ind(rect) {} outside [{}, {}]'
                              .format(ind_rect, ind_prod, ind_prod + 1)))
    return vios


def check_sublattice(lattice, sset, options=None):
    '''
    Check that Ind(M) <= Ind(L) for the sublattice M on `sset` whenever the
    three hypotheses of `dimensions.sublattice_hypotheses` hold.

    Return the list of Violation.
    '''
    hyps = dimensions.sublattice_hypotheses(lattice, sset, options)
    if not all(hyps.values()):
        return []
    sub = sublattice(lattice, sset)
    ind_sub = dimensions.ind_large(sub)
    ind_l = dimensions.ind_large(lattice)
    if ind_sub > ind_l:
        return [Violation('sublattice_monotone', sub,
                          'Ind(M) {} > Ind(L) {}'.format(ind_sub, ind_l))]
    return []


def check_oracle(lattice, options=None):
    '''
    Cross-check Ind, ind, dim, the minimal covers and the filters against
    the brute-force definitions. Lattices above `max_oracle_size` are not
    checked.

    Return the list of Violation.
    '''
    if options is None:
        options = Option()
    if len(lattice) > options.max_oracle_size:
        return []
    vios = []

    def _compare(what, fast, slow):
        if fast != slow:
            vios.append(Violation('oracle_agreement', lattice,
                                  '{}: computed {}, definition {}'
                                  .format(what, fast, slow)))

    _compare('Ind', dimensions.ind_large(lattice),
             oracle.ind_large_def(lattice))
    _compare('ind', dimensions.ind_small(lattice, options),
             oracle.ind_small_def(lattice, options))
    _compare('dim', dimensions.dim_covering(lattice, options),
             oracle.dim_def(lattice, options))
    _compare('minimal covers',
             covers.minimal_covers(lattice, options).names(),
             oracle.minimal_covers_def(lattice, options).names())
    _compare('filters',
             sorted((f.names(), f.prime) for f in filters.filters(lattice)),
             sorted((f.names(), f.prime)
                    for f in oracle.filters_def(lattice, options)))
    return vios


GAP_REPORT_LIST = ['count',
                   'skipped',
                   'pairs_checked',
                   'max_ind_gap',
                   'max_dim_over_ind',
                   'max_ind_over_dim',
                   'witnesses',
                   'violations',
                  ]

class GapReport(namedtuple('GapReport', GAP_REPORT_LIST)):
    '''
    Result of a gap search: the number of scanned and skipped lattices and
    of checked pairs, the largest observed Ind - ind, dim - Ind and
    Ind - dim with the lattice names attaining them, and all violations.
    '''

    def to_json(self):
        ''' JSON-ready ordered dict. '''
        res = OrderedDict()
        for k in GAP_REPORT_LIST[:-1]:
            res[k] = getattr(self, k)
        res['violations'] = [v.to_json() for v in self.violations]
        return res


def _scan_lattice(lattice, prev, options):
    '''
    Per-lattice search work: dimensions, single-lattice checks, oracle
    cross-checks on small lattices, and pair checks with the previous
    lattice. Return None if the lattice is too large.
    '''
    try:
        ind_l = dimensions.ind_large(lattice)
        ind_s = dimensions.ind_small(lattice, options)
        dim = dimensions.dim_covering(lattice, options)
        vios = check_lattice(lattice, options)
        vios += check_oracle(lattice, options)
    except SizeLimit:
        return None
    paired = False
    if prev is not None and len(prev) * len(lattice) <= PAIR_SEARCH_SIZE:
        vios += check_pair(prev, lattice, options)
        paired = True
    return lattice.name, ind_l, ind_s, dim, vios, paired


def search_gaps(config, options=None, lattices=None):
    '''
    Scan the lattices generated per the GeneratorConfig, or the given
    `lattices` instead, for dimension gaps and relation violations.
    '''
    if options is None:
        options = Option()
    if lattices is None:
        lattices = enumerate_lattices(config, options)

    results = []

    def retrieve_result():
        ''' Retrieve results from multiprocessing.Pool. '''
        for r in results:
            yield r.get(timeout=3600)

    def retrieve_result_st():
        ''' Retrieve results from single-process processing. '''
        for r in results:
            yield r

    if options.nprocesses > 1:
        pool = Pool(processes=options.nprocesses)
        apply_func = pool.apply_async
        retrieve_func = retrieve_result()
    else:
        pool = None
        apply_func = util.apply
        retrieve_func = retrieve_result_st()

    count = 0
    skipped = 0
    pairs = 0
    gaps = OrderedDict([('max_ind_gap', None),
                        ('max_dim_over_ind', None),
                        ('max_ind_over_dim', None)])
    witnesses = OrderedDict((k, None) for k in gaps)
    violations = []

    try:
        prev = None
        for lat in lattices:
            results.append(apply_func(_scan_lattice, (lat, prev, options)))
            prev = lat

        for res in retrieve_func:
            if res is None:
                skipped += 1
                continue
            name, ind_l, ind_s, dim, vios, paired = res
            count += 1
            pairs += int(paired)
            violations += vios
            for key, val in [('max_ind_gap', ind_l - ind_s),
                             ('max_dim_over_ind', dim - ind_l),
                             ('max_ind_over_dim', ind_l - dim)]:
                if gaps[key] is None or val > gaps[key]:
                    gaps[key] = val
                    witnesses[key] = name
            if options.verbose and count % 100 == 0:
                sys.stderr.write('search_gaps: scanned {} lattices.\n'
                                 .format(count))
    finally:
        # All results are retrieved or a worker has failed; stop the rest.
        if pool is not None:
            pool.terminate()
            pool.join()

    if options.verbose:
        sys.stderr.write('search_gaps: {} scanned, {} skipped, {} pairs, {} '
                         'violations.\n'
                         .format(count, skipped, pairs, len(violations)))
        for name, (hits, misses) in dimensions.cache_stats().items():
            sys.stderr.write('search_gaps: cache {}: {} hits, {} misses.\n'
                             .format(name, hits, misses))

    return GapReport(count=count, skipped=skipped, pairs_checked=pairs,
                     witnesses=witnesses, violations=violations, **gaps)
