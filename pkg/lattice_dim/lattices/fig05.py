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
The pentagon.
'''

LAT = Lattice(['0', 'p1', 'p2', 'p3', '1'],
              [('0', 'p1'), ('p1', 'p2'), ('p2', '1'),
               ('0', 'p3'), ('p3', '1')],
              name='fig5')

FIXTURES = [
    Fixture('fig5', LAT,
            expected={'ind_large': 0, 'size': 5},
            derived={'kdim': 0, 'height': 3, 'join_primes': ['p1', 'p3']},
            source='pentagon; its only prime filters up(p1) and up(p3) are '
                   'not nested, so the chain length of prime filters is 0 '
                   'although a nonzero Krull dimension is claimed for it'),
]
