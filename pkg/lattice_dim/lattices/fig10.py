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

from lattice_dim.core import Fixture
from lattice_dim.core.constructions import linear_sum

from . import import_lattice

'''
The two linear sums of the diamond and the two-element chain. The sum is not
commutative for Ind.
'''

_L1 = import_lattice('fig1.L1')
_L3 = import_lattice('fig9')

FIXTURES = [
    Fixture('fig10.left', linear_sum(_L1, _L3, name='fig10.left'),
            expected={'ind_large': 0, 'size': 6},
            source='diamond below the two-element chain'),
    Fixture('fig10.right', linear_sum(_L3, _L1, name='fig10.right'),
            expected={'ind_large': 1, 'size': 6},
            source='two-element chain below the diamond'),
]
