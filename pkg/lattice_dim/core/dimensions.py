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

from collections import namedtuple, OrderedDict

import fastcache
import networkx as nx

from . import covers
from . import filters
from .element_set import ElementSet
from .lattice import is_distributive, is_isomorphic
from .lattice_error import SizeLimit
from .option import Option
from .sublattice import is_down_set, principal_filter, sublattice
from .. import util

DIMENSION_REPORT_LIST = ['ind_large',
                         'ind_small',
                         'dim_covering',
                         'kdim',
                         'height',
                         'witnesses',
                        ]

class DimensionReport(namedtuple('DimensionReport', DIMENSION_REPORT_LIST)):
    '''
    The five dimension invariants of a lattice, with witnesses by element
    names.
    '''

    def __new__(cls, *args, **kwargs):
        ntp = super(DimensionReport, cls).__new__(cls, *args, **kwargs)

        for k in ['ind_large', 'ind_small', 'dim_covering', 'height']:
            if not isinstance(getattr(ntp, k), int):
                raise TypeError('DimensionReport: {} must be an integer.'
                                .format(k))
        if ntp.kdim is not None and not isinstance(ntp.kdim, int):
            raise TypeError('DimensionReport: kdim must be an integer or '
                            'None.')
        if ntp.ind_small > ntp.ind_large:
            raise ValueError('DimensionReport: ind_small {} exceeds '
                             'ind_large {}.'
                             .format(ntp.ind_small, ntp.ind_large))
        if ntp.height > 0 and ntp.ind_large >= ntp.height:
            raise ValueError('DimensionReport: ind_large {} is not below '
                             'height {}.'.format(ntp.ind_large, ntp.height))

        return ntp

    def to_json(self):
        ''' JSON-ready ordered dict. '''
        res = OrderedDict()
        for k in DIMENSION_REPORT_LIST:
            res[k] = getattr(self, k)
        return res


@fastcache.clru_cache(maxsize=65536)
def _ind_large_at(lattice, base):
    '''
    (Ind, witness) of the principal filter of `base`, where the witness is
    the pair (a, u) attaining the maximum, or None for the trivial filter.

    Ind = 1 + max Ind(up(u* \\/ u)) over all a and all u minimal in
    {x : a \\/ x = 1}, with pseudostar and minimality taken inside the filter.
    '''
    top = lattice.top
    if base == top:
        return -1, None

    univ = lattice.up_set(base)
    best = None
    witness = None
    for a in util.iter_bits(univ):
        comps = 0
        for x in util.iter_bits(univ):
            if lattice.join(a, x) == top:
                comps |= util.bit(x)
        for u in util.iter_bits(comps):
            if lattice.down_set(u) & comps != util.bit(u):
                continue
            nxt = lattice.join(lattice.pseudostar(u, base), u)
            val = _ind_large_at(lattice, nxt)[0]
            if best is None or val > best:
                best = val
                witness = (a, u)
    # a = top always contributes u = base.
    assert best is not None
    return best + 1, witness


def ind_large_at(lattice, x):
    ''' Ind of the principal filter of x. '''
    return _ind_large_at(lattice, x)[0]


def ind_large(lattice):
    ''' Large inductive dimension Ind. '''
    return _ind_large_at(lattice, lattice.bottom)[0]


def ind_large_witness(lattice):
    ''' The pair (a, u) of element indices attaining Ind, or None. '''
    return _ind_large_at(lattice, lattice.bottom)[1]


@fastcache.clru_cache(maxsize=65536)
def _ind_small_at(lattice, base):
    '''
    (ind, witness) of the principal filter of `base`, where the witness is
    the minimal-cover member v attaining the maximum.

    ind = 1 + max ind(up(v* \\/ v)) over all members v of minimal covers.
    '''
    if base == lattice.top:
        return -1, None

    best = None
    witness = None
    seen = 0
    for mask in covers.minimal_cover_masks(lattice, base):
        for v in util.iter_bits(mask & ~seen):
            nxt = lattice.join(lattice.pseudostar(v, base), v)
            val = _ind_small_at(lattice, nxt)[0]
            if best is None or val > best:
                best = val
                witness = v
        seen |= mask
    assert best is not None
    return best + 1, witness


def _check_cover_size(lattice, base, options):
    size = util.popcount(lattice.up_set(base))
    if size > options.max_cover_size:
        raise SizeLimit('dimensions: cover enumeration is limited to {} '
                        'elements, {} has {}.'
                        .format(options.max_cover_size, lattice.name, size))


def ind_small_at(lattice, x, options=None):
    ''' ind of the principal filter of x. '''
    if options is None:
        options = Option()
    _check_cover_size(lattice, x, options)
    return _ind_small_at(lattice, x)[0]


def ind_small(lattice, options=None):
    ''' Small inductive dimension ind. '''
    return ind_small_at(lattice, lattice.bottom, options)


def _dim_covering_with_witness(lattice, options):
    if len(lattice) == 1:
        return -1, None
    family = covers.minimal_covers(lattice, options)
    best = None
    witness = None
    for cov in family.covers:
        val = covers.order_of_mask(lattice, cov.mask)
        if best is None or val > best:
            best = val
            witness = cov
    return best, witness


def dim_covering(lattice, options=None):
    '''
    Covering dimension: the largest ord over the minimal covers. The
    one-element lattice has dimension -1.
    '''
    if options is None:
        options = Option()
    return _dim_covering_with_witness(lattice, options)[0]


def _kdim_with_chain(lattice):
    primes = filters.prime_filters(lattice)
    if not primes:
        return None, []
    graph = nx.DiGraph()
    graph.add_nodes_from(range(len(primes)))
    for i, fi in enumerate(primes):
        for j, fj in enumerate(primes):
            if fi.mask != fj.mask and fi.mask & ~fj.mask == 0:
                graph.add_edge(i, j)
    path = nx.dag_longest_path(graph)
    return len(path) - 1, [primes[i] for i in path]


def kdim(lattice):
    '''
    Krull dimension: the length of the longest strict chain of prime filters,
    or None if there is no prime filter.
    '''
    return _kdim_with_chain(lattice)[0]


def height(lattice):
    ''' Length of the longest chain from bottom to top. '''
    return nx.dag_longest_path_length(lattice.hasse_graph())


def maximum_chain(lattice):
    ''' Element indices of a longest chain, from bottom to top. '''
    return nx.dag_longest_path(lattice.hasse_graph())


def full_report(lattice, options=None):
    '''
    All five dimension invariants of the lattice, with witnesses.
    '''
    if options is None:
        options = Option()

    witnesses = OrderedDict()

    ind_l, wit_l = _ind_large_at(lattice, lattice.bottom)
    witnesses['ind_large'] = None if wit_l is None \
            else [lattice.label(i) for i in wit_l]

    _check_cover_size(lattice, lattice.bottom, options)
    ind_s, wit_s = _ind_small_at(lattice, lattice.bottom)
    witnesses['ind_small'] = None if wit_s is None else lattice.label(wit_s)

    dim, wit_d = _dim_covering_with_witness(lattice, options)
    witnesses['dim_covering'] = None if wit_d is None else wit_d.names()

    kd, chain = _kdim_with_chain(lattice)
    witnesses['kdim'] = [f.names() for f in chain] if chain else None
    # Among distributive lattices Kdim is 0 exactly for Boolean algebras.
    witnesses['distributive'] = is_distributive(lattice)

    path = maximum_chain(lattice)
    witnesses['height'] = [lattice.label(i) for i in path]

    return DimensionReport(ind_large=ind_l, ind_small=ind_s,
                           dim_covering=dim, kdim=kd,
                           height=len(path) - 1, witnesses=witnesses)


def has_trivial_pseudostars(lattice):
    ''' Whether every nonzero element has pseudostar 0. '''
    return all(lattice.pseudostar(x) == lattice.bottom
               for x in range(len(lattice)) if x != lattice.bottom)


def has_sp_property(lattice):
    ''' Whether Ind(up(x)) <= Ind(L) for every x. '''
    ind = ind_large(lattice)
    return all(ind_large_at(lattice, x) <= ind for x in range(len(lattice)))


def hereditary_sp_property(lattice):
    ''' Whether every principal filter has the SP-property. '''
    for base in range(len(lattice)):
        ind = ind_large_at(lattice, base)
        if any(ind_large_at(lattice, y) > ind
               for y in util.iter_bits(lattice.up_set(base))):
            return False
    return True


def sublattice_hypotheses(lattice, sset, options=None):
    '''
    Check the hypotheses under which a sublattice M has Ind(M) <= Ind(L):
    the top is in M, M without the top is a down-set, and for every u in M
    the filters of u* \\/ u computed in M and in L are isomorphic.

    Return an ordered dict of the three flags.
    '''
    sset.check_owner(lattice)
    res = OrderedDict()
    res['top_in_subset'] = lattice.top in sset.members
    rest = ElementSet(lattice, sset.members - {lattice.top})
    res['rest_is_down_set'] = is_down_set(lattice, rest)

    sub = sublattice(lattice, sset)
    res['filters_isomorphic'] = True
    for u_sub in range(len(sub)):
        u = lattice.index(sub.label(u_sub))
        w_sub = sub.join(sub.pseudostar(u_sub), u_sub)
        w = lattice.join(lattice.pseudostar(u), u)
        if is_isomorphic(principal_filter(sub, w_sub).view,
                         principal_filter(lattice, w).view,
                         options) is None:
            res['filters_isomorphic'] = False
            break
    return res


def cache_stats():
    '''
    Get the memoization hits/misses stats, as an ordered dict of
    (hits, misses) tuples.
    '''
    stats = OrderedDict()
    # pylint: disable=no-member
    for name, func in [('ind_large', _ind_large_at),
                       ('ind_small', _ind_small_at),
                       ('minimal_covers', covers.minimal_cover_masks)]:
        info = func.cache_info()
        stats[name] = (info.hits, info.misses)
    return stats
