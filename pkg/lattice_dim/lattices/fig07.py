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

from lattice_dim.core import Fixture, SubFixture, Lattice, ElementSet

'''
Lattice with Ind 3 and dim 2.
'''

LAT = Lattice(['0', 'x1', 'x2', 'x3', 'x4', 'x5', 'x6', 'x7', 'x8', 'x9',
               'x10', 'x11', '1'],
              [('0', 'x1'),
               ('x1', 'x2'), ('x2', 'x3'), ('x3', 'x4'), ('x4', 'x6'),
               ('x3', 'x5'), ('x3', 'x10'), ('x3', 'x7'),
               ('x5', 'x8'), ('x5', 'x10'),
               ('x6', 'x8'), ('x6', 'x9'),
               ('x7', 'x9'), ('x7', 'x10'),
               ('x1', 'x11'),
               ('x8', '1'), ('x9', '1'), ('x10', '1'), ('x11', '1')],
              name='fig7')

FIX = Fixture('fig7', LAT,
              expected={'ind_large': 3, 'dim_covering': 2, 'size': 13,
                        'minimal_covers': [['x2', 'x11'],
                                           ['x4', 'x5', 'x7']]},
              source='Ind 3 against dim 2; the cover x3 < x7 is read from '
                     'the drawing, where x7 otherwise has no lower cover')

FIXTURES = [FIX]

SUBLATTICES = [
    SubFixture(FIX,
               ElementSet.from_names(LAT, ['x2', 'x3', 'x4', 'x5', 'x6',
                                           'x7', 'x8', 'x9', 'x10', '1']),
               expected={'ind_large': 2},
               source='principal filter up(x2)'),
]
