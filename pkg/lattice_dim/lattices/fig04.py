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

from lattice_dim.core import Fixture, Lattice

'''
Lattice with Ind 1 and ind 0: the Ind witness x6 belongs to no minimal cover.
'''

LAT = Lattice(['0', 'x1', 'x2', 'x3', 'x4', 'x5', 'x6', 'x7', 'x8', 'x9',
               'x10', '1'],
              [('0', 'x1'), ('0', 'x2'), ('0', 'x3'),
               ('x1', 'x4'), ('x1', 'x5'), ('x2', 'x4'), ('x3', 'x5'),
               ('x4', 'x6'), ('x5', 'x6'),
               ('x1', 'x7'), ('x1', 'x8'),
               ('x4', 'x9'), ('x7', 'x9'), ('x7', 'x10'), ('x5', 'x10'),
               ('x6', '1'), ('x8', '1'), ('x9', '1'), ('x10', '1')],
              name='fig4')

FIXTURES = [
    Fixture('fig4', LAT,
            expected={'ind_large': 1, 'ind_small': 0, 'size': 12,
                      'minimal_covers': [['x2', 'x3', 'x7'], ['x2', 'x8'],
                                         ['x3', 'x8'], ['x7', 'x8']]},
            derived={'height': 4},
            source='four minimal covers, none containing x6'),
]
