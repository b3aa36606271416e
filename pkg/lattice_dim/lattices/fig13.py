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

from . import chain

FIXTURES = [
    Fixture('fig13.L1', chain(['0', 'x', '1'], name='fig13.L1'),
            expected={'size': 3},
            derived={'height': 2},
            source='three-element chain'),
    Fixture('fig13.L2', chain(['0', 'y', '1'], name='fig13.L2'),
            expected={'size': 3},
            derived={'height': 2},
            source='three-element chain'),
]
