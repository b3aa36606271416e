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
from .lattice_error import NotALattice
from .. import util

PRINCIPAL_FILTER_LIST = ['owner',
                         'base',
                         'view',
                         'parent_index',
                        ]

class PrincipalFilter(namedtuple('PrincipalFilter', PRINCIPAL_FILTER_LIST)):
    '''
    The principal filter of `base` in `owner`, materialized as the standalone
    lattice `view`. Element `i` of the view is element `parent_index[i]` of
    the owner.
    '''

    def __new__(cls, *args, **kwargs):
        ntp = super(PrincipalFilter, cls).__new__(cls, *args, **kwargs)

        if not isinstance(ntp.owner, Lattice) \
                or not isinstance(ntp.view, Lattice):
            raise TypeError('PrincipalFilter: owner and view must be Lattice '
                            'instances.')
        if len(ntp.parent_index) != len(ntp.view):
            raise ValueError('PrincipalFilter: parent_index must map every '
                             'element of the view.')
        if ntp.parent_index[ntp.view.bottom] != ntp.base:
            raise ValueError('PrincipalFilter: view bottom must be the base.')

        return ntp

    def to_parent(self, idx):
        ''' Owner index of the view element `idx`. '''
        return self.parent_index[idx]


def principal_filter(lattice, x):
    '''
    The principal filter of x, with x as its bottom and the lattice top as its
    top.
    '''
    members = lattice.up_set(x)
    parent_index = tuple(util.iter_bits(members))
    hasse = [(lattice.label(lo), lattice.label(hi))
             for lo, hi in lattice.hasse
             if (members >> lo) & 1 and (members >> hi) & 1]
    view = Lattice([lattice.label(i) for i in parent_index], hasse,
                   name='{}/up({})'.format(lattice.name, lattice.label(x)))
    return PrincipalFilter(lattice, x, view, parent_index)


def is_down_set(lattice, sset):
    ''' Whether the subset is downward closed. '''
    sset.check_owner(lattice)
    mask = sset.mask
    return lattice.down_closure(mask) == mask


def is_sublattice(lattice, sset):
    ''' Whether the nonempty subset is closed under meet and join. '''
    sset.check_owner(lattice)
    if not sset.members:
        return False
    for x, y in itertools.combinations(sset.members, 2):
        if lattice.meet(x, y) not in sset.members \
                or lattice.join(x, y) not in sset.members:
            return False
    return True


def sublattice(lattice, sset, name=None):
    '''
    The sublattice on the subset with the induced order.
    '''
    if not is_sublattice(lattice, sset):
        raise NotALattice('Lattice: subset {} of {} is not closed under meet '
                          'and join.'.format(sset, lattice.name))
    members = sorted(sset.members)
    pairs = [(lattice.label(x), lattice.label(y))
             for x, y in itertools.permutations(members, 2)
             if lattice.leq(x, y)]
    if name is None:
        name = '{}/sub'.format(lattice.name)
    return Lattice([lattice.label(i) for i in members], pairs, name=name)


def element_set(lattice, names):
    ''' Shorthand for an ElementSet from element names. '''
    return ElementSet.from_names(lattice, names)
