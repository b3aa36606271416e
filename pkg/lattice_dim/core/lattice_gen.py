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

import itertools
import random
import sys
from collections import namedtuple

from .lattice import Lattice
from .lattice_error import NotALattice, SizeLimit
from .option import Option
from .. import util

GENERATOR_CONFIG_LIST = ['max_n',
                         'mode',
                         'seed',
                         'sample_count',
                         'min_n',
                        ]

GENERATOR_MODES = ['exhaustive', 'random']

# Probability of each extra cover edge on top of the random tree.
EXTRA_EDGE_PROB = 0.3

class GeneratorConfig(namedtuple('GeneratorConfig', GENERATOR_CONFIG_LIST)):
    '''
    Configuration of lattice generation.

    Exhaustive mode yields every lattice of size `min_n` to `max_n` up to
    isomorphism. Random mode yields `sample_count` lattices of size `min_n`
    to `max_n`, reproducible from `seed`.
    '''

    def __new__(cls, max_n, mode='exhaustive', seed=None, sample_count=0,
                min_n=1):
        ntp = super(GeneratorConfig, cls).__new__(
            cls, max_n, mode, seed, sample_count, min_n)

        for k in ['max_n', 'min_n', 'sample_count']:
            v = getattr(ntp, k)
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError('GeneratorConfig: {} must be an integer.'
                                .format(k))
        if ntp.min_n < 1 or ntp.max_n < ntp.min_n:
            raise ValueError('GeneratorConfig: need 1 <= min_n <= max_n, got '
                             '{} and {}.'.format(ntp.min_n, ntp.max_n))
        if ntp.sample_count < 0:
            raise ValueError('GeneratorConfig: sample_count must be '
                             'non-negative.')

        if ntp.mode not in GENERATOR_MODES:
            raise ValueError('GeneratorConfig: mode must be one of {}.'
                             .format(', '.join(GENERATOR_MODES)))
        if ntp.mode == 'random':
            if ntp.seed is None:
                raise ValueError('GeneratorConfig: random mode requires a '
                                 'seed.')
            if not isinstance(ntp.seed, int) or isinstance(ntp.seed, bool):
                raise TypeError('GeneratorConfig: seed must be an integer.')

        return ntp


def _naturally_labeled_posets(num):
    '''
    All posets on 0..num-1 in which i < j implies i precedes j, as tuples of
    strict down-set bitsets. Each new element lies above a down-set of the
    earlier ones.
    '''
    posets = [()]
    for j in range(num):
        nxt = []
        for rel in posets:
            for down in util.iter_submasks(util.bit(j) - 1):
                if all(rel[i] & ~down == 0 for i in util.iter_bits(down)):
                    nxt.append(rel + (down,))
        posets = nxt
    return posets


def _relation_pairs(rel, perm):
    return tuple(sorted((perm[i], perm[j])
                        for j, down in enumerate(rel)
                        for i in util.iter_bits(down)))


def canonical_form(rel):
    '''
    Canonical form of a poset given as strict down-set bitsets: the smallest
    sorted tuple of order pairs over all relabelings.
    '''
    return min(_relation_pairs(rel, perm)
               for perm in itertools.permutations(range(len(rel))))


def _bounded_lattice(num_inner, pairs, name):
    '''
    Add a bottom and a top around the inner poset given by its order pairs on
    `e1` .. `e<num_inner>`.
    '''
    inner = ['e{}'.format(i + 1) for i in range(num_inner)]
    if not inner:
        hasse = [('0', '1')]
    else:
        hasse = [(inner[lo], inner[hi]) for lo, hi in pairs]
        hasse += [('0', e) for e in inner] + [(e, '1') for e in inner]
    return Lattice(['0'] + inner + ['1'], hasse, name=name)


def _enumerate_exhaustive(config):
    for num in range(config.min_n, config.max_n + 1):
        if num == 1:
            yield Lattice(['0'], [], name='gen1.0')
            continue
        forms = sorted(set(canonical_form(rel) for rel
                           in _naturally_labeled_posets(num - 2)))
        count = 0
        for form in forms:
            try:
                lat = _bounded_lattice(num - 2, form,
                                       'gen{}.{}'.format(num, count))
            except NotALattice:
                continue
            count += 1
            yield lat


def _random_attempt(rng, num, name):
    if num == 1:
        return Lattice(['0'], [], name=name)
    labels = ['0'] + ['r{}'.format(i) for i in range(1, num - 1)] + ['1']
    hasse = []
    for j in range(1, num - 1):
        parent = rng.randrange(j)
        hasse.append((labels[parent], labels[j]))
        for i in range(1, j):
            if i != parent and rng.random() < EXTRA_EDGE_PROB:
                hasse.append((labels[i], labels[j]))
    hasse += [(lbl, '1') for lbl in labels[:-1]]
    try:
        return Lattice(labels, hasse, name=name)
    except NotALattice:
        return None


def random_lattice(rng, max_n, min_n=1, name='random'):
    '''
    Draw a random lattice with `min_n` to `max_n` elements using the
    `random.Random` instance `rng`: a random tree of covers from the bottom
    with extra random covers, topped by a fresh top, rejected and redrawn
    unless it is a lattice.

    Return the lattice and the number of attempts.
    '''
    attempts = 0
    while True:
        attempts += 1
        num = rng.randint(min_n, max_n)
        lat = _random_attempt(rng, num, name)
        if lat is not None:
            return lat, attempts


def _enumerate_random(config, options):
    rng = random.Random(config.seed)
    attempts = 0
    for idx in range(config.sample_count):
        lat, tries = random_lattice(rng, config.max_n, config.min_n,
                                    name='rand{}.{}'.format(config.seed, idx))
        attempts += tries
        yield lat
    if options.verbose and config.sample_count:
        sys.stderr.write('lattice_gen: accepted {} of {} random attempts '
                         '({:.1%}).\n'
                         .format(config.sample_count, attempts,
                                 config.sample_count / attempts))


def enumerate_lattices(config, options=None):
    '''
    Generate lattices per the GeneratorConfig.
    '''
    if options is None:
        options = Option()

    if config.mode == 'exhaustive':
        if config.max_n > options.max_exhaustive_size:
            raise SizeLimit('lattice_gen: exhaustive generation is limited to '
                            '{} elements, got {}.'
                            .format(options.max_exhaustive_size,
                                    config.max_n))
        return _enumerate_exhaustive(config)

    return _enumerate_random(config, options)
