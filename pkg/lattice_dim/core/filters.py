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

from .element_set import ElementSet
from .lattice import Lattice
from .. import util

FILTER_LIST = ['owner',
               'members',
               'prime',
              ]

class Filter(namedtuple('Filter', FILTER_LIST)):
    '''
    A proper filter of a lattice, flagged prime or not.
    '''

    def __new__(cls, *args, **kwargs):
        ntp = super(Filter, cls).__new__(cls, *args, **kwargs)

        if not isinstance(ntp.owner, Lattice):
            raise TypeError('Filter: owner must be a Lattice instance.')
        if not isinstance(ntp.members, ElementSet):
            raise TypeError('Filter: members must be an ElementSet.')
        ntp.members.check_owner(ntp.owner)
        if not isinstance(ntp.prime, bool):
            raise TypeError('Filter: prime must be a boolean.')

        return ntp

    @property
    def mask(self):
        ''' Members as a bitset. '''
        return self.members.mask

    def names(self):
        ''' Sorted member names. '''
        return self.members.names()


def is_filter_mask(lattice, mask):
    '''
    Whether the bitset is a proper filter: nonempty, not the whole lattice,
    upward closed and closed under meet.
    '''
    if not mask or mask == lattice.full_mask:
        return False
    for x in util.iter_bits(mask):
        if lattice.up_set(x) & ~mask:
            return False
    for x, y in itertools.combinations(util.iter_bits(mask), 2):
        if not (mask >> lattice.meet(x, y)) & 1:
            return False
    return True


def is_prime_mask(lattice, mask):
    '''
    Whether x \\/ y in F forces x in F or y in F, for all pairs.
    '''
    for x, y in itertools.combinations(range(len(lattice)), 2):
        if (mask >> lattice.join(x, y)) & 1 \
                and not (mask >> x) & 1 and not (mask >> y) & 1:
            return False
    return True


def filters(lattice):
    '''
    All proper filters, ordered by their bitsets.

    In a finite lattice every filter is the principal filter of its meet, and
    it is proper iff that meet is not the bottom.
    '''
    result = []
    for x in range(len(lattice)):
        if x == lattice.bottom:
            continue
        mask = lattice.up_set(x)
        result.append(Filter(lattice, ElementSet.from_mask(lattice, mask),
                             is_prime_mask(lattice, mask)))
    return sorted(result, key=lambda f: f.mask)


def prime_filters(lattice):
    ''' All prime filters, ordered by their bitsets. '''
    return [f for f in filters(lattice) if f.prime]


def join_primes(lattice):
    '''
    The nonzero elements x such that x <= a \\/ b implies x <= a or x <= b.
    '''
    num = len(lattice)
    mask = 0
    for x in range(num):
        if x == lattice.bottom:
            continue
        if all(not lattice.leq(x, lattice.join(a, b))
               or lattice.leq(x, a) or lattice.leq(x, b)
               for a, b in itertools.combinations(range(num), 2)):
            mask |= util.bit(x)
    return ElementSet.from_mask(lattice, mask)
