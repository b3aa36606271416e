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

import re

def _module_name(fixture_id):
    ''' Catalog module holding the fixture, e.g., fig7.x -> fig07. '''
    match = re.match(r'fig(\d+)(\.|$)', fixture_id)
    if not match:
        return None
    return 'fig{:02d}'.format(int(match.group(1)))


def _import_module(modname):
    import importlib
    return importlib.import_module('.' + modname, 'lattice_dim.lattices')


def import_fixture(fixture_id):
    '''
    Import a catalog fixture.
    '''
    modname = _module_name(fixture_id)
    if modname is None or modname not in all_modules():
        raise ImportError('lattices: lattice {} has not been defined!'
                          .format(fixture_id))
    for fix in _import_module(modname).FIXTURES:
        if fix.id == fixture_id:
            return fix
    raise ImportError('lattices: lattice {} has not been defined!'
                      .format(fixture_id))


def import_lattice(fixture_id):
    '''
    Import the lattice of a catalog fixture.
    '''
    return import_fixture(fixture_id).lattice


def all_modules():
    '''
    Get all catalog modules.
    '''
    import os

    lat_dir = os.path.dirname(os.path.abspath(__file__))
    mods = [f[:-len('.py')] for f in os.listdir(lat_dir)
            if f.endswith('.py') and not f.startswith('__')]
    return list(sorted(mods))


def fixtures():
    '''
    Get all catalog fixtures, ordered by module.
    '''
    fixs = []
    for modname in all_modules():
        fixs += _import_module(modname).FIXTURES
    return fixs


def all_lattices():
    '''
    Get all catalog fixture ids.
    '''
    return list(sorted(fix.id for fix in fixtures()))


def fixture_sublattices():
    '''
    Get all named subsets of catalog lattices, as SubFixture.
    '''
    subs = []
    for modname in all_modules():
        subs += getattr(_import_module(modname), 'SUBLATTICES', [])
    return subs


def chain(labels, name=''):
    '''
    The chain on `labels`, in increasing order.
    '''
    from lattice_dim.core import Lattice

    labels = list(labels)
    return Lattice(labels, list(zip(labels[:-1], labels[1:])), name=name)


def export_fixtures(directory):
    '''
    Write the lattice JSON of every fixture to `<directory>/<id>.json`, plus
    the 3-chain `chain3.json` and the unbounded example `bad-no-top.json`.
    Return the written file names, sorted.
    '''
    import json
    import os
    from collections import OrderedDict

    from lattice_dim.core import lattice_io

    if not os.path.isdir(directory):
        os.makedirs(directory)

    written = []

    def _write(fname, obj):
        with open(os.path.join(directory, fname), 'w') as fh:
            json.dump(obj, fh, indent=2)
            fh.write('\n')
        written.append(fname)

    for fix in fixtures():
        _write(fix.id + '.json', lattice_io.lattice_to_json(fix.lattice))

    _write('chain3.json', lattice_io.lattice_to_json(
        chain(['0', 'a', '1'], name='chain3')))

    bad = OrderedDict()
    bad['name'] = 'bad-no-top'
    bad['elements'] = ['0', 'a', 'b']
    bad['covers'] = [['0', 'a'], ['0', 'b']]
    _write('bad-no-top.json', bad)

    return sorted(written)
