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

import itertools

import fastcache
import networkx as nx
from networkx.algorithms import isomorphism

from .lattice_error import CycleError, DuplicateLabel, NotALattice, \
        NotBounded, SizeLimit, UnknownElement
from .option import Option
from .. import util

class Lattice(object):
    '''
    A finite bounded lattice.

    Given by the element names and the Hasse cover pairs `(a, b)` meaning `b`
    covers `a`. Pairs implied by transitivity are accepted and dropped. The
    order relation, meet and join are derived and validated at construction;
    the instance is immutable afterwards and is hashed by identity.

    Elements are addressed by their index in `labels`. Element subsets are
    integer bitsets, see `lattice_dim.util`.
    '''

    def __init__(self, labels, hasse, name=''):
        if not isinstance(name, str):
            raise TypeError('Lattice: name must be a string.')
        self._name = name

        labels = tuple(labels)
        if not labels:
            raise ValueError('Lattice: must have at least one element.')
        index = {}
        for idx, lbl in enumerate(labels):
            if not isinstance(lbl, str):
                raise TypeError('Lattice: element name {!r} must be a string.'
                                .format(lbl))
            if lbl in index:
                raise DuplicateLabel('Lattice: element {} is duplicated.'
                                     .format(lbl))
            index[lbl] = idx
        self._labels = labels
        self._index = index
        num = len(labels)

        graph = nx.DiGraph()
        graph.add_nodes_from(range(num))
        for pair in hasse:
            try:
                lo, hi = pair
            except (TypeError, ValueError):
                raise TypeError('Lattice: cover {!r} must be a pair of names.'
                                .format(pair))
            for lbl in (lo, hi):
                if lbl not in index:
                    raise UnknownElement('Lattice: cover ({}, {}) uses '
                                         'unknown element {}.'
                                         .format(lo, hi, lbl))
            graph.add_edge(index[lo], index[hi])

        if not nx.is_directed_acyclic_graph(graph):
            cycle = nx.find_cycle(graph)
            raise CycleError('Lattice: covers form a cycle through {}.'
                             .format(', '.join(labels[u] for u, _ in cycle)))

        # Order relation rows as bitsets, reflexive.
        up = [util.bit(i) for i in range(num)]
        down = [util.bit(i) for i in range(num)]
        for lo, hi in nx.transitive_closure_dag(graph).edges():
            up[lo] |= util.bit(hi)
            down[hi] |= util.bit(lo)
        self._up = tuple(up)
        self._down = tuple(down)

        self._hasse = tuple(sorted(nx.transitive_reduction(graph).edges()))
        lower = [0] * num
        upper = [0] * num
        for lo, hi in self._hasse:
            upper[lo] |= util.bit(hi)
            lower[hi] |= util.bit(lo)
        self._lower = tuple(lower)
        self._upper = tuple(upper)

        minimals = [i for i in range(num) if down[i] == util.bit(i)]
        maximals = [i for i in range(num) if up[i] == util.bit(i)]
        if len(minimals) != 1:
            raise NotBounded('Lattice: no unique bottom, minimal elements '
                             'are {}.'
                             .format(', '.join(labels[i] for i in minimals)))
        if len(maximals) != 1:
            raise NotBounded('Lattice: no unique top, maximal elements '
                             'are {}.'
                             .format(', '.join(labels[i] for i in maximals)))
        self._bottom = minimals[0]
        self._top = maximals[0]

        meet = [[i] * num for i in range(num)]
        join = [[i] * num for i in range(num)]
        for x, y in itertools.combinations(range(num), 2):
            glb = self._extremal(down, down[x] & down[y])
            if glb is None:
                raise NotALattice('Lattice: elements {} and {} have no unique '
                                  'meet.'.format(labels[x], labels[y]),
                                  pair=(labels[x], labels[y]))
            lub = self._extremal(up, up[x] & up[y])
            if lub is None:
                raise NotALattice('Lattice: elements {} and {} have no unique '
                                  'join.'.format(labels[x], labels[y]),
                                  pair=(labels[x], labels[y]))
            meet[x][y] = meet[y][x] = glb
            join[x][y] = join[y][x] = lub
        self._meet = tuple(tuple(row) for row in meet)
        self._join = tuple(tuple(row) for row in join)

    @staticmethod
    def _extremal(rows, common):
        '''
        The element of the bitset `common` whose row equals `common`, i.e.,
        the greatest lower bound when `rows` are down-sets and `common` the
        common lower bounds, or dually for joins.
        '''
        for idx in util.iter_bits(common):
            if rows[idx] == common:
                return idx
        return None

    @property
    def name(self):
        ''' Lattice name. '''
        return self._name

    @property
    def labels(self):
        ''' Element names, by index. '''
        return self._labels

    @property
    def hasse(self):
        ''' Hasse cover pairs of element indices, sorted. '''
        return self._hasse

    @property
    def bottom(self):
        ''' Index of the bottom element. '''
        return self._bottom

    @property
    def top(self):
        ''' Index of the top element. '''
        return self._top

    @property
    def meet_table(self):
        ''' n-by-n meet table of element indices. '''
        return self._meet

    @property
    def join_table(self):
        ''' n-by-n join table of element indices. '''
        return self._join

    @property
    def full_mask(self):
        ''' Bitset of all elements. '''
        return (1 << len(self._labels)) - 1

    def index(self, label):
        ''' Index of the element named `label`. '''
        try:
            return self._index[label]
        except KeyError:
            raise UnknownElement('Lattice: {} has no element {}.'
                                 .format(self._name, label))

    def label(self, idx):
        ''' Name of the element at `idx`. '''
        return self._labels[idx]

    def labels_of(self, mask):
        ''' Names of the elements in the bitset, by index order. '''
        return [self._labels[i] for i in util.iter_bits(mask)]

    def mask_of(self, labels):
        ''' Bitset of the named elements. '''
        return util.mask_of(self.index(lbl) for lbl in labels)

    def leq(self, x, y):
        ''' Whether x <= y. '''
        return bool((self._up[x] >> y) & 1)

    def up_set(self, x):
        ''' Bitset of all y >= x. '''
        return self._up[x]

    def down_set(self, x):
        ''' Bitset of all y <= x. '''
        return self._down[x]

    def lower_covers(self, x):
        ''' Bitset of the elements covered by x. '''
        return self._lower[x]

    def upper_covers(self, x):
        ''' Bitset of the elements covering x. '''
        return self._upper[x]

    def down_closure(self, mask):
        ''' Smallest down-set containing the bitset. '''
        closure = 0
        for idx in util.iter_bits(mask):
            closure |= self._down[idx]
        return closure

    def meet(self, x, y):
        ''' Greatest lower bound. '''
        return self._meet[x][y]

    def join(self, x, y):
        ''' Least upper bound. '''
        return self._join[x][y]

    def meet_all(self, mask):
        ''' Meet of the bitset. The empty meet is the top. '''
        result = self._top
        for idx in util.iter_bits(mask):
            result = self._meet[result][idx]
        return result

    def join_all(self, mask, base=None):
        '''
        Join of the bitset. The empty join is the bottom of the lattice, or
        `base` when computing inside the principal filter of `base`.
        '''
        result = self._bottom if base is None else base
        for idx in util.iter_bits(mask):
            result = self._join[result][idx]
        return result

    @fastcache.clru_cache(maxsize=65536)
    def pseudostar(self, x, base=None):
        '''
        x* = join of all y with x /\\ y = 0.

        With `base`, compute inside the principal filter of `base`, whose
        bottom is `base`; x must then be above `base`.
        '''
        if base is None:
            base = self._bottom
        result = base
        for y in util.iter_bits(self._up[base]):
            if self._meet[x][y] == base:
                result = self._join[result][y]
        return result

    def is_true_pseudocomplement(self, x, base=None):
        ''' Whether x* /\\ x = 0, i.e., x* is a pseudocomplement of x. '''
        if base is None:
            base = self._bottom
        return self._meet[self.pseudostar(x, base)][x] == base

    def hasse_graph(self):
        '''
        Hasse diagram as a new networkx DiGraph on element indices, with edges
        drawn upward and the element names in the `label` node attribute.
        '''
        graph = nx.DiGraph()
        for idx, lbl in enumerate(self._labels):
            graph.add_node(idx, label=lbl)
        graph.add_edges_from(self._hasse)
        return graph

    def __len__(self):
        return len(self._labels)

    def __iter__(self):
        return iter(self._labels)

    def __contains__(self, label):
        return label in self._index

    def __str__(self):
        str_ = 'Lattice: {} ({} elements)\n'.format(self._name, len(self))
        for idx, lbl in enumerate(self._labels):
            str_ += '  {}'.format(lbl)
            if self._lower[idx]:
                str_ += ' covers {}'.format(
                    ', '.join(self.labels_of(self._lower[idx])))
            str_ += '\n'
        return str_


def build_lattice(labels, hasse, name=''):
    '''
    Validate and build a lattice from its element names and Hasse covers.
    '''
    return Lattice(labels, hasse, name=name)


def relabel(lattice, perm, name=None):
    '''
    An isomorphic copy of `lattice` whose element previously at index `i` is
    at index `perm[i]`. Names are kept.
    '''
    num = len(lattice)
    if sorted(perm) != list(range(num)):
        raise ValueError('relabel: perm must be a permutation of 0..{}.'
                         .format(num - 1))
    labels = [None] * num
    for old, new in enumerate(perm):
        labels[new] = lattice.label(old)
    hasse = [(lattice.label(lo), lattice.label(hi))
             for lo, hi in lattice.hasse]
    return Lattice(labels, hasse,
                   name=lattice.name if name is None else name)


def is_isomorphic(lat1, lat2, options=None):
    '''
    Find an order isomorphism from `lat1` to `lat2`. Return a dict mapping
    element indices of `lat1` to those of `lat2`, or None if the lattices are
    not isomorphic.

    Order isomorphisms are exactly the isomorphisms of the Hasse digraphs,
    which are searched with VF2.
    '''
    if options is None:
        options = Option()

    if len(lat1) != len(lat2) or len(lat1.hasse) != len(lat2.hasse):
        return None

    if len(lat1) > options.max_iso_size:
        raise SizeLimit('Lattice: isomorphism search is limited to {} '
                        'elements, got {}.'
                        .format(options.max_iso_size, len(lat1)))

    matcher = isomorphism.DiGraphMatcher(lat1.hasse_graph(),
                                         lat2.hasse_graph())
    if not matcher.is_isomorphic():
        return None
    return dict(matcher.mapping)


def is_distributive(lattice):
    ''' Whether meet distributes over join. '''
    num = len(lattice)
    for x, y, z in itertools.product(range(num), repeat=3):
        if lattice.meet(x, lattice.join(y, z)) \
                != lattice.join(lattice.meet(x, y), lattice.meet(x, z)):
            return False
    return True
