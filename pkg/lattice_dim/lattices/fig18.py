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
Lattice Q with Ind 3 and ind 0.

Q extends the lattice with four minimal covers: a chain-like lattice W on
w1..w6 sits above x6, the glue elements s < t < r, u connect the base to x6,
and s lies below xw1..xw6, each xw_i covered only by w_i.
'''

_BASE = ['0', 'x1', 'x2', 'x3', 'x4', 'x5', 'x6', 'x7', 'x8', 'x9', 'x10']
_GLUE = ['s', 't', 'r', 'u']
_W = ['w{}'.format(i) for i in range(1, 7)]
_XW = ['xw{}'.format(i) for i in range(1, 7)]

_HASSE = [('0', 'x1'), ('0', 'x2'), ('0', 'x3'), ('0', 's'),
          ('x1', 'x4'), ('x1', 'x5'), ('x1', 't'), ('x1', 'x8'),
          ('x1', 'x7'),
          ('x2', 'x4'), ('x3', 'x5'),
          ('x4', 'r'), ('x4', 'x9'),
          ('x5', 'u'),
          ('s', 't'),
          ('t', 'r'), ('t', 'u'), ('t', 'x7'),
          ('r', 'x6'), ('r', 'x9'),
          ('u', 'x6'), ('u', 'x10'),
          ('x6', 'w1'),
          ('w1', 'w2'), ('w1', 'w6'), ('w2', 'w3'), ('w3', 'w4'),
          ('w3', 'w5'),
          ('x7', 'x9'), ('x7', 'x10'),
          ('w4', '1'), ('w5', '1'), ('w6', '1'),
          ('x8', '1'), ('x9', '1'), ('x10', '1')]
_HASSE += [('s', xw) for xw in _XW]
_HASSE += list(zip(_XW, _W))

LAT = Lattice(_BASE + _GLUE + _W + _XW + ['1'], _HASSE, name='fig18')

FIXTURES = [
    Fixture('fig18', LAT,
            expected={'ind_large': 3, 'ind_small': 0, 'size': 28},
            source='lattice Q; the crossing edge at x6 is read as r < x6, '
                   'the other reading gives the same published values'),
]
