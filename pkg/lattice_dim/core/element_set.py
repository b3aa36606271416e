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

from collections import namedtuple

from .lattice import Lattice
from .lattice_error import InvalidSubset
from .. import util

ELEMENT_SET_LIST = ['owner',
                    'members',
                   ]

class ElementSet(namedtuple('ElementSet', ELEMENT_SET_LIST)):
    '''
    A subset of the elements of a lattice, as a frozenset of element indices.
    '''

    def __new__(cls, owner, members):
        if not isinstance(owner, Lattice):
            raise TypeError('ElementSet: owner must be a Lattice instance.')
        members = frozenset(members)
        for idx in members:
            if not isinstance(idx, int) or not 0 <= idx < len(owner):
                raise InvalidSubset('ElementSet: {!r} is not an element index '
                                    'of {}.'.format(idx, owner.name))
        return super(ElementSet, cls).__new__(cls, owner, members)

    @classmethod
    def from_names(cls, owner, names):
        ''' Build from element names. '''
        return cls(owner, (owner.index(n) for n in names))

    @classmethod
    def from_mask(cls, owner, mask):
        ''' Build from a bitset. '''
        return cls(owner, util.iter_bits(mask))

    @property
    def mask(self):
        ''' Members as a bitset. '''
        return util.mask_of(self.members)

    def names(self):
        ''' Sorted member names. '''
        return sorted(self.owner.label(i) for i in self.members)

    def check_owner(self, lattice):
        ''' Reject use with a lattice other than the owner. '''
        if self.owner is not lattice:
            raise InvalidSubset('ElementSet: set of lattice {} used with '
                                'lattice {}.'
                                .format(self.owner.name, lattice.name))

    def __str__(self):
        return '{{{}}}'.format(', '.join(self.names()))
