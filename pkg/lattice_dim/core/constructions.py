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
from collections import namedtuple

from .lattice import Lattice
from .lattice_error import InvalidK

'''
Composite lattices.

Element names trace provenance: `L:x` / `R:y` for the two summands of a linear
sum, `(x,y)` for a product pair, `#top`, `#0`, `#z`, `#y` for fresh elements,
`M:x` for the wrapped lattice of the Ind = k family and `N:x` for the lattice
grafted into the base of graft_m. Names with none of these forms come from
the base lattice itself.
'''

TAG_LIST = ['Left', 'Right', 'Pair', 'Fresh', 'Inner', 'Graft', 'Base']

_PREFIXES = [('Left', 'L:'),
             ('Right', 'R:'),
             ('Inner', 'M:'),
             ('Graft', 'N:'),
             ('Fresh', '#'),
            ]

class TaggedElement(namedtuple('TaggedElement', ['tag', 'parts'])):
    '''
    Provenance of an element name of a constructed lattice.

    `parts` holds the constituent names: two for a `Pair`, one otherwise.
    '''

    def __new__(cls, tag, parts):
        if tag not in TAG_LIST:
            raise ValueError('TaggedElement: unknown tag {}.'.format(tag))
        parts = tuple(parts)
        if len(parts) != (2 if tag == 'Pair' else 1):
            raise ValueError('TaggedElement: tag {} takes {} part(s).'
                             .format(tag, 2 if tag == 'Pair' else 1))
        if not all(isinstance(p, str) for p in parts):
            raise TypeError('TaggedElement: parts must be strings.')
        return super(TaggedElement, cls).__new__(cls, tag, parts)

    @property
    def name(self):
        ''' The element name. '''
        if self.tag == 'Pair':
            return '({},{})'.format(*self.parts)
        if self.tag == 'Base':
            return self.parts[0]
        prefix = dict(_PREFIXES)[self.tag]
        return prefix + self.parts[0]


def _split_pair(body):
    ''' Split at the comma outside any parentheses, or return None. '''
    depth = 0
    for pos, char in enumerate(body):
        if char == '(':
            depth += 1
        elif char == ')':
            depth -= 1
        elif char == ',' and depth == 0:
            return body[:pos], body[pos + 1:]
    return None


def parse_tag(name):
    '''
    Parse an element name of a constructed lattice into a TaggedElement.
    Nested constructions parse one level at a time.
    '''
    for tag, prefix in _PREFIXES:
        if name.startswith(prefix) and len(name) > len(prefix):
            return TaggedElement(tag, (name[len(prefix):],))
    if name.startswith('(') and name.endswith(')'):
        parts = _split_pair(name[1:-1])
        if parts is not None:
            return TaggedElement('Pair', parts)
    return TaggedElement('Base', (name,))


def _pair(x, y):
    return TaggedElement('Pair', (x, y)).name


def _tagged_hasse(lattice, prefix, rename=None):
    if rename is None:
        rename = {}
    def _name(idx):
        return rename.get(idx, prefix + lattice.label(idx))
    return [(_name(lo), _name(hi)) for lo, hi in lattice.hasse]


def linear_sum(lat1, lat2, name=None):
    '''
    The linear sum: a copy of `lat1` below a copy of `lat2`, with the top of
    `lat1` covered by the bottom of `lat2`.
    '''
    labels = ['L:' + x for x in lat1] + ['R:' + y for y in lat2]
    hasse = _tagged_hasse(lat1, 'L:') + _tagged_hasse(lat2, 'R:')
    hasse.append(('L:' + lat1.label(lat1.top), 'R:' + lat2.label(lat2.bottom)))
    if name is None:
        name = '({} + {})'.format(lat1.name, lat2.name)
    return Lattice(labels, hasse, name=name)


def cartesian_product(lat1, lat2, name=None):
    '''
    The Cartesian product with the componentwise order. The pair (x_i, y_j)
    has index i * len(lat2) + j.
    '''
    labels = [_pair(x, y) for x, y in itertools.product(lat1, lat2)]
    hasse = []
    for lo, hi in lat1.hasse:
        for y in lat2:
            hasse.append((_pair(lat1.label(lo), y), _pair(lat1.label(hi), y)))
    for lo, hi in lat2.hasse:
        for x in lat1:
            hasse.append((_pair(x, lat2.label(lo)), _pair(x, lat2.label(hi))))
    if name is None:
        name = '({} x {})'.format(lat1.name, lat2.name)
    return Lattice(labels, hasse, name=name)


def lex_product(lat1, lat2, name=None):
    '''
    The lexicographic product: (x1, y1) <= (x2, y2) iff x1 < x2, or x1 = x2
    and y1 <= y2.

    Meet and join are derived from the order and checked against the
    four-case formulas, e.g., (x, y) \\/ (x', y') = (x \\/ x', 0) if x || x'.
    '''
    num2 = len(lat2)
    elems = list(itertools.product(range(len(lat1)), range(num2)))
    labels = [_pair(lat1.label(x), lat2.label(y)) for x, y in elems]

    def _lex_leq(x1, y1, x2, y2):
        if x1 == x2:
            return lat2.leq(y1, y2)
        return lat1.leq(x1, x2)

    pairs = [(labels[i], labels[j])
             for i, j in itertools.permutations(range(len(elems)), 2)
             if _lex_leq(*(elems[i] + elems[j]))]
    if name is None:
        name = '({} <> {})'.format(lat1.name, lat2.name)
    lat = Lattice(labels, pairs, name=name)

    def _case(x1, y1, x2, y2, is_join):
        if x1 == x2:
            return x1, (lat2.join(y1, y2) if is_join else lat2.meet(y1, y2))
        if lat1.leq(x1, x2):
            return (x2, y2) if is_join else (x1, y1)
        if lat1.leq(x2, x1):
            return (x1, y1) if is_join else (x2, y2)
        if is_join:
            return lat1.join(x1, x2), lat2.bottom
        return lat1.meet(x1, x2), lat2.top

    for i, j in itertools.combinations(range(len(elems)), 2):
        args = elems[i] + elems[j]
        jx, jy = _case(*args, is_join=True)
        mx, my = _case(*args, is_join=False)
        assert lat.join(i, j) == jx * num2 + jy
        assert lat.meet(i, j) == mx * num2 + my

    return lat


def rect_elements(lat1, lat2):
    '''
    Component index pairs of the rectangular product, by element index.
    '''
    elems = [(lat1.bottom, lat2.bottom)]
    elems += [(x, y) for x, y in itertools.product(range(len(lat1)),
                                                   range(len(lat2)))
              if x != lat1.bottom and y != lat2.bottom]
    return elems


def rect_product(lat1, lat2, name=None):
    '''
    The rectangular product: the pairs with both components nonzero, plus
    the pair of bottoms, under the componentwise order.

    The meet collapses to the pair of bottoms when either component meet is
    zero.
    '''
    elems = rect_elements(lat1, lat2)
    labels = [_pair(lat1.label(x), lat2.label(y)) for x, y in elems]
    pairs = [(labels[i], labels[j])
             for i, j in itertools.permutations(range(len(elems)), 2)
             if lat1.leq(elems[i][0], elems[j][0])
             and lat2.leq(elems[i][1], elems[j][1])]
    if name is None:
        name = '({} [] {})'.format(lat1.name, lat2.name)
    lat = Lattice(labels, pairs, name=name)

    position = {e: idx for idx, e in enumerate(elems)}
    for i, j in itertools.combinations(range(len(elems)), 2):
        (x1, y1), (x2, y2) = elems[i], elems[j]
        mx, my = lat1.meet(x1, x2), lat2.meet(y1, y2)
        if mx == lat1.bottom or my == lat2.bottom:
            mx, my = lat1.bottom, lat2.bottom
        assert lat.meet(i, j) == position[(mx, my)]
        assert lat.join(i, j) \
                == position[(lat1.join(x1, x2), lat2.join(y1, y2))]

    return lat


def add_top(lattice, name=None):
    '''
    Add a fresh top `#top` above the old top.
    '''
    labels = list(lattice) + ['#top']
    hasse = [(lattice.label(lo), lattice.label(hi))
             for lo, hi in lattice.hasse]
    hasse.append((lattice.label(lattice.top), '#top'))
    if name is None:
        name = '{}+top'.format(lattice.name)
    return Lattice(labels, hasse, name=name)


def ind_k_family(k):
    '''
    A lattice with Ind = k in which every nonzero element has pseudostar 0.

    k = 1 is the lattice 0 < y1 < y2, y3 < 1. Each further step wraps the
    previous lattice M: a fresh bottom `#0` is covered by `#z`, which lies
    below every other element; `#y` covers `#z` and is incomparable to all of
    M except its top, which becomes the new top.
    '''
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InvalidK('ind_k_family: k must be a positive integer, got {!r}.'
                       .format(k))

    if k == 1:
        from ..lattices import import_lattice
        return import_lattice('fig1.L2')

    inner = ind_k_family(k - 1)
    rename = {inner.top: 'M:' + inner.label(inner.top)}
    labels = ['#0', '#z', '#y'] + ['M:' + x for x in inner]
    hasse = _tagged_hasse(inner, 'M:', rename)
    hasse += [('#0', '#z'),
              ('#z', '#y'),
              ('#z', 'M:' + inner.label(inner.bottom)),
              ('#y', rename[inner.top]),
             ]
    return Lattice(labels, hasse, name='ind_k({})'.format(k))


def graft_m(k, base=None, graft_at='x6'):
    '''
    A lattice with ind = k - 1 and Ind = k.

    In `base` (the lattice of four minimal covers with Ind 1 and ind 0 by
    default), the cover from `graft_at` to the top is replaced by a lattice N
    = ind_k_family(k - 1), whose bottom is identified with `graft_at` and
    whose top with the top of `base`. The inner elements of N, named `N:x`,
    are incomparable to every element outside N except those below
    `graft_at`.
    '''
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InvalidK('graft_m: k must be an integer of at least 2, got {!r}.'
                       .format(k))

    if base is None:
        from ..lattices import import_lattice
        base = import_lattice('fig4')
    low = base.index(graft_at)
    if not base.leq(low, base.top) or low == base.top \
            or (low, base.top) not in base.hasse:
        raise ValueError('graft_m: {} must be covered by the top of {}.'
                         .format(graft_at, base.name))

    inner = ind_k_family(k - 1)
    rename = {inner.bottom: graft_at,
              inner.top: base.label(base.top)}
    labels = list(base) + ['N:' + x for idx, x in enumerate(inner)
                           if idx not in rename]
    hasse = [(base.label(lo), base.label(hi)) for lo, hi in base.hasse
             if (lo, hi) != (low, base.top)]
    hasse += _tagged_hasse(inner, 'N:', rename)
    return Lattice(labels, hasse, name='graft_m({})'.format(k))
