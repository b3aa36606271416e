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
Lattice with Ind 2 and Kdim 1.
'''

LAT = Lattice(['0', 'x1', 'x2', 'x3', 'x4', 'x5', 'x6', 'x7', 'x8', '1'],
              [('0', 'x1'),
               ('x1', 'x2'), ('x1', 'x3'), ('x1', 'x5'),
               ('x2', 'x4'),
               ('x3', 'x6'), ('x3', 'x8'),
               ('x4', 'x6'), ('x4', 'x7'),
               ('x5', 'x7'), ('x5', 'x8'),
               ('x6', '1'), ('x7', '1'), ('x8', '1')],
              name='fig6')

FIXTURES = [
    Fixture('fig6', LAT,
            expected={'ind_large': 2, 'kdim': 1, 'size': 10,
                      'join_primes': ['x1', 'x2', 'x3', 'x5']},
            derived={'ind_small': 2, 'dim_covering': 2,
                     'minimal_covers': [['x2', 'x3', 'x5']]},
            source='Ind and Kdim differ'),
]
