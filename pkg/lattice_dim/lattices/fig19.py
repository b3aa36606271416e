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

from . import import_lattice

'''
Lattice P with ind 0 and Ind 2.

P glues a copy N of the lattice with four minimal covers between x6 and the
top of that same lattice, through s < t < r, u; s lies below xn1..xn10, each
xn_i covered only by the interior element n_i of N.
'''

def _build():
    from lattice_dim.core import Lattice

    base = import_lattice('fig4')
    top = base.label(base.top)
    x6 = base.index('x6')

    def _n(idx):
        if idx == base.bottom:
            return 'x6'
        if idx == base.top:
            return top
        return 'n' + base.label(idx)[1:]

    inner = [idx for idx in range(len(base))
             if idx not in (base.bottom, base.top)]
    labels = list(base) + ['s', 't', 'r', 'u'] \
            + [_n(idx) for idx in inner] \
            + ['xn' + base.label(idx)[1:] for idx in inner]

    hasse = [(base.label(lo), base.label(hi)) for lo, hi in base.hasse
             if (lo, hi) != (x6, base.top)]
    hasse += [('0', 's'), ('s', 't'), ('x1', 't'),
              ('t', 'r'), ('x4', 'r'), ('r', 'x6'), ('r', 'x9'),
              ('t', 'u'), ('x5', 'u'), ('u', 'x6'), ('u', 'x10'),
              ('t', 'x7')]
    hasse += [(_n(lo), _n(hi)) for lo, hi in base.hasse]
    for idx in inner:
        xn = 'xn' + base.label(idx)[1:]
        hasse += [('s', xn), (xn, _n(idx))]

    return Lattice(labels, hasse, name='fig19')


FIXTURES = [
    Fixture('fig19', _build(),
            expected={'ind_small': 0, 'size': 36},
            derived={'ind_large': 2},
            source='lattice P, the k = 2 instance; N is taken as a copy of '
                   'the lattice with four minimal covers'),
]
