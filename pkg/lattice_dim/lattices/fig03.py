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
Ind 0 lattice whose sublattice up(x2) has Ind 1.
'''

LAT = Lattice(['0', 'x1', 'x2', 'x3', 'x4', 'x5', 'x6', '1'],
              [('0', 'x1'), ('0', 'x2'), ('0', 'x3'),
               ('x2', 'x4'), ('x1', 'x5'), ('x3', 'x6'),
               ('x4', 'x5'), ('x4', 'x6'),
               ('x5', '1'), ('x6', '1')],
              name='fig3')

FIX = Fixture('fig3', LAT,
              expected={'ind_large': 0, 'size': 8},
              source='sublattice counterexample')

FIXTURES = [FIX]

SUBLATTICES = [
    SubFixture(FIX,
               ElementSet.from_names(LAT, ['x2', 'x4', 'x5', 'x6', '1']),
               expected={'ind_large': 1},
               source='sublattice M, not a down-set below the top'),
]
