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

import unittest

from lattice_dim.core import ElementSet, InvalidSubset, UnknownElement
from lattice_dim import lattices

class TestElementSet(unittest.TestCase):
    ''' Tests for ElementSet. '''

    def setUp(self):
        self.lat = lattices.import_lattice('fig1.L2')

    def test_valid_args(self):
        ''' Valid arguments. '''
        eset = ElementSet(self.lat, [1, 2, 2])
        self.assertIs(eset.owner, self.lat)
        self.assertEqual(eset.members, frozenset([1, 2]))

    def test_from_names(self):
        ''' from_names. '''
        eset = ElementSet.from_names(self.lat, ['y3', 'y2'])
        self.assertEqual(eset.mask, self.lat.mask_of(['y2', 'y3']))
        self.assertListEqual(eset.names(), ['y2', 'y3'])

    def test_from_mask(self):
        ''' from_mask. '''
        eset = ElementSet.from_mask(self.lat, 0b10011)
        self.assertEqual(eset.members, frozenset([0, 1, 4]))
        self.assertEqual(eset.mask, 0b10011)

    def test_str(self):
        ''' __str__. '''
        eset = ElementSet.from_names(self.lat, ['y3', 'y1'])
        self.assertEqual(str(eset), '{y1, y3}')

    def test_hashable(self):
        ''' Equal sets hash equal. '''
        eset1 = ElementSet.from_names(self.lat, ['y1', 'y2'])
        eset2 = ElementSet(self.lat, [2, 1])
        self.assertEqual(eset1, eset2)
        self.assertEqual(len({eset1, eset2}), 1)

    def test_invalid_owner(self):
        ''' Invalid owner. '''
        with self.assertRaisesRegex(TypeError, 'ElementSet: .*owner.*'):
            _ = ElementSet(None, [0])

    def test_invalid_member(self):
        ''' Invalid member. '''
        with self.assertRaisesRegex(InvalidSubset, 'ElementSet: .*index.*'):
            _ = ElementSet(self.lat, [5])
        with self.assertRaisesRegex(InvalidSubset, 'ElementSet: .*index.*'):
            _ = ElementSet(self.lat, ['y1'])
        with self.assertRaises(UnknownElement):
            _ = ElementSet.from_names(self.lat, ['z'])

    def test_check_owner(self):
        ''' check_owner. '''
        eset = ElementSet(self.lat, [1])
        eset.check_owner(self.lat)
        with self.assertRaisesRegex(InvalidSubset, 'ElementSet: .*used.*'):
            eset.check_owner(lattices.import_lattice('fig1.L1'))
