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
from lattice_dim.core.constructions import graft_m
from lattice_dim.core.lattice import relabel

'''
The lattice with four minimal covers, with L2 grafted between x6 and the top.
'''

_LAT = graft_m(2)

FIXTURES = [
    Fixture('fig17', relabel(_LAT, list(range(len(_LAT))), name='fig17'),
            expected={'ind_small': 1, 'ind_large': 2, 'size': 15},
            source='graft instance for k = 2'),
]
