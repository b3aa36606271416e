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

from collections import namedtuple, OrderedDict

from .element_set import ElementSet
from .lattice import Lattice

# Values a fixture may state.
EXPECTED_KEYS = ['ind_large',
                 'ind_small',
                 'dim_covering',
                 'kdim',
                 'height',
                 'minimal_covers',
                 'join_primes',
                 'size',
                ]

def _check_values(cls_name, values):
    if not isinstance(values, dict):
        raise TypeError('{}: expected values must be a dict.'.format(cls_name))
    for key in values:
        if key not in EXPECTED_KEYS:
            raise ValueError('{}: unknown expected value {}.'
                             .format(cls_name, key))


FIXTURE_LIST = ['id',
                'lattice',
                'expected',
                'derived',
                'source',
               ]

class Fixture(namedtuple('Fixture', FIXTURE_LIST)):
    '''
    A catalog lattice with its published values in `expected` and the values
    established only by computation in `derived`. `source` cites the drawing
    and notes any transcription choice.
    '''

    def __new__(cls, id_, lattice, expected, derived=None, source=''):
        if derived is None:
            derived = {}
        ntp = super(Fixture, cls).__new__(cls, id_, lattice, expected,
                                          derived, source)

        if not isinstance(ntp.id, str):
            raise TypeError('Fixture: id must be a string.')
        if not isinstance(ntp.lattice, Lattice):
            raise TypeError('Fixture: lattice must be a Lattice instance.')
        _check_values('Fixture', ntp.expected)
        _check_values('Fixture', ntp.derived)
        if set(ntp.expected) & set(ntp.derived):
            raise ValueError('Fixture: a value cannot be both expected and '
                             'derived.')
        if not isinstance(ntp.source, str):
            raise TypeError('Fixture: source must be a string.')

        return ntp


SUB_FIXTURE_LIST = ['fixture',
                    'members',
                    'expected',
                    'source',
                   ]

class SubFixture(namedtuple('SubFixture', SUB_FIXTURE_LIST)):
    '''
    A named subset of a catalog lattice, either a sublattice or a principal
    filter, with its published values.
    '''

    def __new__(cls, fixture, members, expected, source=''):
        ntp = super(SubFixture, cls).__new__(cls, fixture, members, expected,
                                             source)

        if not isinstance(ntp.fixture, Fixture):
            raise TypeError('SubFixture: fixture must be a Fixture instance.')
        if not isinstance(ntp.members, ElementSet):
            raise TypeError('SubFixture: members must be an ElementSet.')
        ntp.members.check_owner(ntp.fixture.lattice)
        _check_values('SubFixture', ntp.expected)

        return ntp


def _normalize(key, value):
    if key == 'minimal_covers':
        return sorted(sorted(c) for c in value)
    if key == 'join_primes':
        return sorted(value)
    return value


def lattice_value(lattice, key, options=None):
    '''
    Compute the value named `key` of EXPECTED_KEYS on the lattice.
    '''
    from . import covers
    from . import dimensions
    from . import filters

    if key == 'size':
        return len(lattice)
    if key == 'minimal_covers':
        return _normalize(key, covers.minimal_covers(lattice, options).names())
    if key == 'join_primes':
        return _normalize(key, filters.join_primes(lattice).names())
    if key not in EXPECTED_KEYS:
        raise ValueError('fixture: unknown value {}.'.format(key))
    return getattr(dimensions.full_report(lattice, options), key)


def _mismatches(lattice, values, options):
    res = OrderedDict()
    for key in EXPECTED_KEYS:
        if key not in values:
            continue
        want = _normalize(key, values[key])
        got = lattice_value(lattice, key, options)
        if want != got:
            res[key] = OrderedDict([('expected', want), ('actual', got)])
    return res


def check_fixture(fix, options=None):
    '''
    Recompute every expected and derived value of the fixture. Return an
    OrderedDict of the mismatched keys, each with its expected and actual
    value.
    '''
    values = dict(fix.expected)
    values.update(fix.derived)
    return _mismatches(fix.lattice, values, options)


def check_sub_fixture(sub, options=None):
    '''
    Recompute the expected values of the subset as a lattice on its own.
    Return the mismatches as check_fixture does.
    '''
    from .sublattice import sublattice

    lat = sublattice(sub.fixture.lattice, sub.members,
                     name='{}{}'.format(sub.fixture.id, sub.members))
    return _mismatches(lat, sub.expected, options)
