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

import unittest

import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from lattice_dim.core import Lattice, build_lattice, is_isomorphic
from lattice_dim.core import CycleError, DuplicateLabel, NotALattice, \
        NotBounded, SizeLimit, UnknownElement
from lattice_dim.core import Option, random_lattice
from lattice_dim.core.lattice import relabel, is_distributive
from lattice_dim.core.constructions import rect_product
from lattice_dim import lattices

class TestLattice(unittest.TestCase):
    ''' Tests for Lattice. '''

    def setUp(self):
        self.diamond = lattices.import_lattice('fig1.L1')
        self.l2 = lattices.import_lattice('fig1.L2')
        self.pentagon = lattices.import_lattice('fig5')

    def test_valid_args(self):
        ''' Valid arguments. '''
        lat = Lattice(['0', 'a', 'b', '1'],
                      [('0', 'a'), ('0', 'b'), ('a', '1'), ('b', '1')],
                      name='diamond')
        self.assertEqual(lat.name, 'diamond')
        self.assertEqual(len(lat), 4)
        self.assertTupleEqual(lat.labels, ('0', 'a', 'b', '1'))
        self.assertEqual(lat.bottom, 0)
        self.assertEqual(lat.top, 3)
        self.assertIn('a', lat)
        self.assertNotIn('c', lat)
        self.assertListEqual(list(lat), ['0', 'a', 'b', '1'])

    def test_build_lattice(self):
        ''' build_lattice. '''
        lat = build_lattice(['0', 'a', '1'], [('0', 'a'), ('a', '1')])
        self.assertEqual(len(lat), 3)
        self.assertEqual(lat.name, '')

    def test_singleton(self):
        ''' One-element lattice. '''
        lat = Lattice(['0'], [])
        self.assertEqual(lat.bottom, lat.top)
        self.assertEqual(lat.meet(0, 0), 0)
        self.assertEqual(lat.pseudostar(0), 0)

    def test_transitive_pairs_dropped(self):
        ''' Pairs implied by transitivity are dropped from the Hasse pairs. '''
        lat = Lattice(['0', 'a', '1'],
                      [('0', 'a'), ('a', '1'), ('0', '1')])
        self.assertTupleEqual(lat.hasse, ((0, 1), (1, 2)))
        self.assertTrue(lat.leq(0, 2))

    def test_order(self):
        ''' Order relation. '''
        lat = self.l2
        y1, y2, y3 = [lat.index(n) for n in ['y1', 'y2', 'y3']]
        self.assertTrue(lat.leq(y1, y2))
        self.assertTrue(lat.leq(y2, y2))
        self.assertFalse(lat.leq(y2, y3))
        self.assertFalse(lat.leq(y2, y1))
        self.assertEqual(lat.up_set(y1), lat.mask_of(['y1', 'y2', 'y3', '1']))
        self.assertEqual(lat.down_set(y2), lat.mask_of(['0', 'y1', 'y2']))
        self.assertEqual(lat.lower_covers(lat.top),
                         lat.mask_of(['y2', 'y3']))
        self.assertEqual(lat.upper_covers(y1), lat.mask_of(['y2', 'y3']))
        self.assertEqual(lat.down_closure(lat.mask_of(['y2', 'y3'])),
                         lat.mask_of(['0', 'y1', 'y2', 'y3']))

    def test_meet_join(self):
        ''' Meet and join. '''
        lat = self.l2
        y1, y2, y3 = [lat.index(n) for n in ['y1', 'y2', 'y3']]
        self.assertEqual(lat.meet(y2, y3), y1)
        self.assertEqual(lat.join(y2, y3), lat.top)
        self.assertEqual(lat.meet(y1, y2), y1)
        self.assertEqual(lat.join(y1, y2), y2)
        self.assertEqual(lat.meet_table[y2][y3], y1)
        self.assertEqual(lat.join_table[y3][y2], lat.top)

    def test_meet_join_all(self):
        ''' Meet and join of subsets. '''
        lat = self.l2
        self.assertEqual(lat.meet_all(0), lat.top)
        self.assertEqual(lat.join_all(0), lat.bottom)
        self.assertEqual(lat.meet_all(lat.mask_of(['y2', 'y3'])),
                         lat.index('y1'))
        self.assertEqual(lat.join_all(lat.mask_of(['y1', 'y2'])),
                         lat.index('y2'))
        self.assertEqual(lat.join_all(0, base=lat.index('y1')),
                         lat.index('y1'))

    @settings(max_examples=100, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32 - 1))
    def test_axioms_random(self, seed):
        ''' Lattice axioms on all pairs and triples of random lattices. '''
        lat, _ = random_lattice(random.Random(seed), 9)
        elems = range(len(lat))
        for x, y in itertools.product(elems, repeat=2):
            self.assertEqual(lat.meet(x, y), lat.meet(y, x))
            self.assertEqual(lat.join(x, y), lat.join(y, x))
            self.assertEqual(lat.meet(x, lat.join(x, y)), x)
            self.assertEqual(lat.join(x, lat.meet(x, y)), x)
            self.assertEqual(lat.leq(x, y), lat.meet(x, y) == x)
            self.assertEqual(lat.leq(x, y), lat.join(x, y) == y)
        for x, y, z in itertools.product(elems, repeat=3):
            self.assertEqual(lat.meet(lat.meet(x, y), z),
                             lat.meet(x, lat.meet(y, z)))
            self.assertEqual(lat.join(lat.join(x, y), z),
                             lat.join(x, lat.join(y, z)))

    def test_pentagon_atoms(self):
        ''' The pentagon atoms meet at the bottom. '''
        lat = self.pentagon
        self.assertEqual(lat.meet(lat.index('p1'), lat.index('p3')),
                         lat.bottom)
        self.assertEqual(lat.meet(lat.index('p2'), lat.index('p3')),
                         lat.bottom)

    def test_pseudostar(self):
        ''' Pseudostar. '''
        lat = self.l2
        for name in ['y1', 'y2', 'y3', '1']:
            self.assertEqual(lat.pseudostar(lat.index(name)), lat.bottom)
        self.assertEqual(lat.pseudostar(lat.bottom), lat.top)

        lat = self.diamond
        x1, x2 = lat.index('x1'), lat.index('x2')
        self.assertEqual(lat.pseudostar(x1), x2)
        self.assertTrue(lat.is_true_pseudocomplement(x1))

    def test_pseudostar_base(self):
        ''' Pseudostar inside a principal filter. '''
        lat = self.l2
        y1, y2, y3 = [lat.index(n) for n in ['y1', 'y2', 'y3']]
        self.assertEqual(lat.pseudostar(y2, base=y1), y3)
        self.assertEqual(lat.pseudostar(y1, base=y1), lat.top)

    def test_pseudostar_not_complement(self):
        ''' Pseudostar is not always a pseudocomplement. '''
        lat = self.pentagon
        p2 = lat.index('p2')
        self.assertEqual(lat.pseudostar(p2), lat.index('p3'))
        self.assertTrue(lat.is_true_pseudocomplement(p2))
        p1 = lat.index('p1')
        self.assertEqual(lat.pseudostar(p1), lat.index('p3'))

        # In M3 the star of an atom is the join of the other two atoms.
        m3 = Lattice(['0', 'a', 'b', 'c', '1'],
                     [('0', 'a'), ('0', 'b'), ('0', 'c'),
                      ('a', '1'), ('b', '1'), ('c', '1')])
        a = m3.index('a')
        self.assertEqual(m3.pseudostar(a), m3.top)
        self.assertFalse(m3.is_true_pseudocomplement(a))

    def test_index_unknown(self):
        ''' Unknown element name. '''
        with self.assertRaisesRegex(UnknownElement, 'Lattice: .*no element.*'):
            _ = self.diamond.index('z')

    def test_invalid_name(self):
        ''' Invalid name. '''
        with self.assertRaisesRegex(TypeError, 'Lattice: .*name.*'):
            _ = Lattice(['0'], [], name=1)

    def test_invalid_label(self):
        ''' Invalid element names. '''
        with self.assertRaisesRegex(TypeError, 'Lattice: .*string.*'):
            _ = Lattice(['0', 1], [('0', 1)])
        with self.assertRaisesRegex(ValueError, 'Lattice: .*at least.*'):
            _ = Lattice([], [])

    def test_invalid_cover(self):
        ''' Invalid cover pair. '''
        with self.assertRaisesRegex(TypeError, 'Lattice: .*pair.*'):
            _ = Lattice(['0', '1'], [('0', '1', '2')])

    def test_duplicate_label(self):
        ''' Duplicated element name. '''
        with self.assertRaisesRegex(DuplicateLabel, 'Lattice: .*duplicated.*'):
            _ = Lattice(['0', 'a', 'a'], [('0', 'a')])

    def test_unknown_element(self):
        ''' Cover with unknown element. '''
        with self.assertRaisesRegex(UnknownElement, 'Lattice: .*unknown.*'):
            _ = Lattice(['0', '1'], [('0', 'x')])

    def test_cycle(self):
        ''' Cyclic covers. '''
        with self.assertRaisesRegex(CycleError, 'Lattice: .*cycle.*'):
            _ = Lattice(['0', 'a', 'b', '1'],
                        [('0', 'a'), ('a', 'b'), ('b', 'a'), ('b', '1')])

    def test_not_bounded(self):
        ''' No unique top or bottom. '''
        with self.assertRaisesRegex(NotBounded, 'Lattice: .*top.*'):
            _ = Lattice(['0', 'a', 'b'], [('0', 'a'), ('0', 'b')])
        with self.assertRaisesRegex(NotBounded, 'Lattice: .*bottom.*'):
            _ = Lattice(['a', 'b', '1'], [('a', '1'), ('b', '1')])

    def test_not_a_lattice(self):
        ''' Bounded poset without unique joins. '''
        with self.assertRaisesRegex(NotALattice, 'Lattice: .*unique.*') \
                as cm:
            _ = Lattice(['0', 'a', 'b', 'c', 'd', '1'],
                        [('0', 'a'), ('0', 'b'),
                         ('a', 'c'), ('a', 'd'), ('b', 'c'), ('b', 'd'),
                         ('c', '1'), ('d', '1')])
        self.assertIsNotNone(cm.exception.pair)

    def test_errors_are_value_errors(self):
        ''' Lattice errors are ValueError. '''
        with self.assertRaises(ValueError):
            _ = Lattice(['0', 'a', 'b'], [('0', 'a'), ('0', 'b')])

    def test_hasse_graph(self):
        ''' hasse_graph. '''
        graph = self.l2.hasse_graph()
        self.assertEqual(graph.number_of_nodes(), 5)
        self.assertEqual(graph.number_of_edges(), 5)
        self.assertEqual(graph.nodes[self.l2.index('y1')]['label'], 'y1')

    def test_str(self):
        ''' __str__. '''
        string = str(self.l2)
        self.assertIn('fig1.L2', string)
        self.assertIn('y1 covers 0', string)
        self.assertIn('1 covers y2, y3', string)

    def test_hash_identity(self):
        ''' Lattices are hashed by identity. '''
        lat1 = Lattice(['0', '1'], [('0', '1')])
        lat2 = Lattice(['0', '1'], [('0', '1')])
        self.assertEqual(len({lat1, lat2, lat1}), 2)

    def test_relabel(self):
        ''' relabel. '''
        lat = relabel(self.l2, [4, 3, 2, 1, 0], name='rev')
        self.assertEqual(lat.name, 'rev')
        self.assertEqual(lat.label(0), '1')
        self.assertEqual(lat.top, 0)
        self.assertEqual(lat.meet(lat.index('y2'), lat.index('y3')),
                         lat.index('y1'))

    def test_relabel_invalid(self):
        ''' relabel with an invalid permutation. '''
        with self.assertRaisesRegex(ValueError, 'relabel: .*permutation.*'):
            _ = relabel(self.l2, [0, 1, 2, 3, 3])

    def test_is_isomorphic(self):
        ''' is_isomorphic. '''
        lat = relabel(self.l2, [2, 0, 1, 4, 3])
        mapping = is_isomorphic(self.l2, lat)
        self.assertIsNotNone(mapping)
        for x in range(len(lat)):
            for y in range(len(lat)):
                self.assertEqual(self.l2.leq(x, y),
                                 lat.leq(mapping[x], mapping[y]))

        self.assertIsNone(is_isomorphic(self.l2, self.pentagon))
        self.assertIsNone(is_isomorphic(self.diamond, self.l2))

    def test_is_isomorphic_rect(self):
        ''' Rectangular product of two 3-chains is not the diamond. '''
        chain3 = lattices.chain(['0', 'a', '1'])
        rect = rect_product(chain3, chain3)
        self.assertIsNone(is_isomorphic(self.diamond, rect))

    def test_is_isomorphic_size_limit(self):
        ''' is_isomorphic above the size limit. '''
        lat = lattices.import_lattice('fig7')
        with self.assertRaisesRegex(SizeLimit, 'Lattice: .*limited.*'):
            _ = is_isomorphic(lat, relabel(lat, list(range(len(lat)))),
                              Option(max_iso_size=10))

    def test_is_distributive(self):
        ''' is_distributive. '''
        self.assertTrue(is_distributive(self.diamond))
        self.assertTrue(is_distributive(lattices.chain(['0', 'a', '1'])))
        self.assertFalse(is_distributive(self.pentagon))
        self.assertTrue(is_distributive(self.l2))
