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
Diamond with two atoms, and the lattice 0 < y1 < y2, y3 < 1.
'''

L1 = Lattice(['0', 'x1', 'x2', '1'],
             [('0', 'x1'), ('0', 'x2'), ('x1', '1'), ('x2', '1')],
             name='fig1.L1')

L2 = Lattice(['0', 'y1', 'y2', 'y3', '1'],
             [('0', 'y1'), ('y1', 'y2'), ('y1', 'y3'),
              ('y2', '1'), ('y3', '1')],
             name='fig1.L2')

FIXTURES = [
    Fixture('fig1.L1', L1,
            expected={'ind_large': 0, 'height': 2, 'size': 4},
            derived={'ind_small': 0, 'dim_covering': 0, 'kdim': 0,
                     'minimal_covers': [['x1', 'x2']],
                     'join_primes': ['x1', 'x2']},
            source='diamond L1'),
    Fixture('fig1.L2', L2,
            expected={'ind_large': 1, 'size': 5},
            derived={'ind_small': 1, 'dim_covering': 1, 'kdim': 1,
                     'height': 3, 'minimal_covers': [['y2', 'y3']],
                     'join_primes': ['y1', 'y2', 'y3']},
            source='L2, the base of the Ind = k family'),
]
