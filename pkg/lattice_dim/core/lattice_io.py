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

import json
import sys
from collections import OrderedDict

import pydot

from .lattice import Lattice

'''
Lattice JSON format:

    {"name": str, "elements": [str, ...], "covers": [[str, str], ...]}

where each pair [a, b] means b covers a. Bottom and top are inferred.
'''

def lattice_to_json(lattice):
    ''' JSON-ready ordered dict of the lattice. '''
    res = OrderedDict()
    res['name'] = lattice.name
    res['elements'] = list(lattice.labels)
    res['covers'] = [[lattice.label(lo), lattice.label(hi)]
                     for lo, hi in lattice.hasse]
    return res


def lattice_from_json(obj):
    ''' Build and validate a lattice from its decoded JSON object. '''
    if not isinstance(obj, dict):
        raise ValueError('lattice_io: lattice JSON must be an object.')
    for key in ['elements', 'covers']:
        if key not in obj:
            raise ValueError('lattice_io: lattice JSON is missing "{}".'
                             .format(key))
    if not isinstance(obj['elements'], list) \
            or not isinstance(obj['covers'], list):
        raise ValueError('lattice_io: "elements" and "covers" must be '
                         'arrays.')
    for cov in obj['covers']:
        if not isinstance(cov, list) or len(cov) != 2:
            raise ValueError('lattice_io: cover {!r} must be a pair of names.'
                             .format(cov))
    names = obj['elements'] + [n for cov in obj['covers'] for n in cov]
    bad = [n for n in names if not isinstance(n, str)]
    if bad:
        raise ValueError('lattice_io: element name {!r} must be a string.'
                         .format(bad[0]))
    if not isinstance(obj.get('name', ''), str):
        raise ValueError('lattice_io: "name" must be a string.')
    return Lattice(obj['elements'], [tuple(c) for c in obj['covers']],
                   name=obj.get('name', ''))


def load_lattice(path):
    '''
    Load a lattice from a JSON file. `-` reads from the standard input.
    '''
    if path == '-':
        obj = json.load(sys.stdin, object_pairs_hook=OrderedDict)
    else:
        with open(path, 'r') as fh:
            obj = json.load(fh, object_pairs_hook=OrderedDict)
    return lattice_from_json(obj)


def dump_lattice(lattice, fh):
    ''' Write the lattice JSON to the open file `fh`. '''
    json.dump(lattice_to_json(lattice), fh, indent=2)
    fh.write('\n')


def to_dot(lattice):
    '''
    DOT source of the Hasse diagram, one node per element labeled by name and
    one edge per cover, drawn bottom to top.
    '''
    graph = pydot.Dot(graph_type='digraph', rankdir='BT')
    for idx, lbl in enumerate(lattice.labels):
        graph.add_node(pydot.Node('n{}'.format(idx),
                                  label=json.dumps(lbl)))
    for lo, hi in lattice.hasse:
        graph.add_edge(pydot.Edge('n{}'.format(lo), 'n{}'.format(hi)))
    return graph.to_string()
