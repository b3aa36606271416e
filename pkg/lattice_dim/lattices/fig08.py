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
Lattice with dim 2 and Ind 1, with a single minimal cover.
'''

LAT = Lattice(['0', 'x1', 'x2', 'x3', 'x4', 'x5', 'x6', 'x7', '1'],
              [('0', 'x1'),
               ('x1', 'x2'), ('x1', 'x3'), ('x1', 'x4'),
               ('x2', 'x6'), ('x2', 'x7'),
               ('x3', 'x5'), ('x3', 'x7'),
               ('x4', 'x5'), ('x4', 'x6'),
               ('x5', '1'), ('x6', '1'), ('x7', '1')],
              name='fig8')

FIX = Fixture('fig8', LAT,
              expected={'ind_large': 1, 'dim_covering': 2, 'size': 9,
                        'minimal_covers': [['x2', 'x3', 'x4']]},
              source='dim 2 against Ind 1; the cover {x2, x3, x4} has '
                     'order 2')

FIXTURES = [FIX]

SUBLATTICES = [
    SubFixture(FIX, ElementSet.from_names(LAT, ['x5', '1']),
               expected={'ind_large': 0},
               source='principal filter up(x5)'),
]
