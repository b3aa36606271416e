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

from lattice_dim.core import dimensions
from lattice_dim.core import DimensionReport, NotALattice, Option, SizeLimit
from lattice_dim.core.sublattice import element_set
from lattice_dim import lattices

class TestDimensions(unittest.TestCase):
    ''' Tests for the dimension invariants. '''

    def setUp(self):
        self.options = Option(max_cover_size=40)
        self.l1 = lattices.import_lattice('fig1.L1')
        self.l2 = lattices.import_lattice('fig1.L2')

    def test_ind_large(self):
        ''' ind_large on catalog lattices. '''
        for fid, val in [('fig1.L1', 0), ('fig1.L2', 1), ('fig3', 0),
                         ('fig4', 1), ('fig5', 0), ('fig6', 2), ('fig7', 3),
                         ('fig8', 1), ('fig9', 0)]:
            self.assertEqual(
                dimensions.ind_large(lattices.import_lattice(fid)), val, fid)

    def test_ind_large_at(self):
        ''' ind_large_at on principal filters. '''
        lat = lattices.import_lattice('fig7')
        self.assertEqual(dimensions.ind_large_at(lat, lat.index('x2')), 2)
        lat = lattices.import_lattice('fig8')
        self.assertEqual(dimensions.ind_large_at(lat, lat.index('x5')), 0)
        self.assertEqual(dimensions.ind_large_at(lat, lat.top), -1)
        self.assertEqual(dimensions.ind_large_at(lat, lat.bottom),
                         dimensions.ind_large(lat))

    def test_ind_large_witness(self):
        ''' ind_large_witness attains Ind. '''
        lat = self.l2
        a, u = dimensions.ind_large_witness(lat)
        self.assertEqual(lat.join(a, u), lat.top)
        nxt = lat.join(lat.pseudostar(u), u)
        self.assertEqual(dimensions.ind_large_at(lat, nxt), 0)
        self.assertIsNone(
            dimensions.ind_large_witness(lattices.chain(['0'])))

    def test_ind_small(self):
        ''' ind_small on catalog lattices. '''
        for fid, val in [('fig1.L1', 0), ('fig1.L2', 1), ('fig4', 0),
                         ('fig6', 2), ('fig9', 0)]:
            self.assertEqual(
                dimensions.ind_small(lattices.import_lattice(fid)), val, fid)

    def test_ind_gap(self):
        ''' ind below Ind. '''
        lat = lattices.import_lattice('fig4')
        self.assertEqual(dimensions.ind_small(lat), 0)
        self.assertEqual(dimensions.ind_large(lat), 1)

        lat = lattices.import_lattice('fig18')
        self.assertEqual(dimensions.ind_small(lat, self.options), 0)
        self.assertEqual(dimensions.ind_large(lat), 3)

    def test_ind_small_at(self):
        ''' ind_small_at on principal filters. '''
        lat = self.l2
        self.assertEqual(dimensions.ind_small_at(lat, lat.index('y1')), 0)
        self.assertEqual(dimensions.ind_small_at(lat, lat.top), -1)

    def test_ind_small_size_limit(self):
        ''' ind_small above the cover size limit. '''
        lat = lattices.import_lattice('fig18')
        with self.assertRaisesRegex(SizeLimit, 'dimensions: .*limited.*'):
            _ = dimensions.ind_small(lat)

    def test_dim_covering(self):
        ''' dim_covering. '''
        for fid, val in [('fig1.L1', 0), ('fig1.L2', 1), ('fig7', 2),
                         ('fig8', 2), ('fig9', 0)]:
            self.assertEqual(
                dimensions.dim_covering(lattices.import_lattice(fid)), val,
                fid)

    def test_dim_covering_singleton(self):
        ''' The one-element lattice has dim -1. '''
        lat = lattices.chain(['0'])
        self.assertEqual(dimensions.dim_covering(lat), -1)
        self.assertEqual(dimensions.ind_large(lat), -1)
        self.assertEqual(dimensions.ind_small(lat), -1)
        self.assertEqual(dimensions.height(lat), 0)

    def test_kdim(self):
        ''' kdim. '''
        self.assertEqual(dimensions.kdim(lattices.import_lattice('fig6')), 1)
        self.assertEqual(dimensions.kdim(self.l1), 0)
        self.assertEqual(dimensions.kdim(self.l2), 1)
        self.assertEqual(dimensions.kdim(lattices.import_lattice('fig9')), 0)

    def test_kdim_pentagon(self):
        ''' The two prime filters of the pentagon are not nested. '''
        self.assertEqual(dimensions.kdim(lattices.import_lattice('fig5')), 0)

    def test_kdim_none(self):
        ''' No prime filter in the one-element lattice. '''
        self.assertIsNone(dimensions.kdim(lattices.chain(['0'])))

    def test_height(self):
        ''' height and maximum_chain. '''
        self.assertEqual(dimensions.height(self.l1), 2)
        self.assertEqual(dimensions.height(self.l2), 3)
        lat = lattices.import_lattice('fig4')
        self.assertEqual(dimensions.height(lat), 4)
        path = dimensions.maximum_chain(lat)
        self.assertEqual(len(path), 5)
        self.assertEqual(path[0], lat.bottom)
        self.assertEqual(path[-1], lat.top)
        for lo, hi in zip(path[:-1], path[1:]):
            self.assertIn((lo, hi), lat.hasse)

    def test_full_report(self):
        ''' full_report. '''
        rep = dimensions.full_report(self.l2)
        self.assertIsInstance(rep, DimensionReport)
        self.assertEqual(rep.ind_large, 1)
        self.assertEqual(rep.ind_small, 1)
        self.assertEqual(rep.dim_covering, 1)
        self.assertEqual(rep.kdim, 1)
        self.assertEqual(rep.height, 3)
        self.assertListEqual(list(rep.witnesses.keys()),
                             ['ind_large', 'ind_small', 'dim_covering',
                              'kdim', 'distributive', 'height'])
        self.assertEqual(len(rep.witnesses['height']), 4)
        self.assertListEqual(rep.witnesses['dim_covering'], ['y2', 'y3'])
        self.assertEqual(len(rep.witnesses['kdim']), 2)
        self.assertTrue(rep.witnesses['distributive'])

        rep = dimensions.full_report(lattices.import_lattice('fig5'))
        self.assertEqual(rep.kdim, 0)
        self.assertFalse(rep.witnesses['distributive'])
        rep = dimensions.full_report(self.l1)
        self.assertEqual(rep.kdim, 0)
        self.assertTrue(rep.witnesses['distributive'])

    def test_full_report_fig7(self):
        ''' full_report on the Ind 3, dim 2 lattice. '''
        rep = dimensions.full_report(lattices.import_lattice('fig7'))
        self.assertEqual(rep.ind_large, 3)
        self.assertEqual(rep.dim_covering, 2)
        self.assertLessEqual(rep.ind_small, rep.ind_large)
        self.assertLess(rep.ind_large, rep.height)

    def test_report_to_json(self):
        ''' DimensionReport to_json. '''
        obj = dimensions.full_report(self.l1).to_json()
        self.assertListEqual(list(obj.keys()),
                             ['ind_large', 'ind_small', 'dim_covering',
                              'kdim', 'height', 'witnesses'])
        self.assertEqual(obj['ind_large'], 0)
        self.assertEqual(obj['height'], 2)

    def test_report_invalid(self):
        ''' DimensionReport invalid values. '''
        with self.assertRaisesRegex(TypeError, 'DimensionReport: .*integer.*'):
            _ = DimensionReport(1.0, 0, 0, 0, 3, {})
        with self.assertRaisesRegex(TypeError, 'DimensionReport: .*kdim.*'):
            _ = DimensionReport(1, 0, 0, 'a', 3, {})
        with self.assertRaisesRegex(ValueError,
                                    'DimensionReport: .*exceeds.*'):
            _ = DimensionReport(0, 1, 0, 0, 3, {})
        with self.assertRaisesRegex(ValueError, 'DimensionReport: .*below.*'):
            _ = DimensionReport(3, 0, 0, 0, 3, {})
        rep = DimensionReport(1, 0, 0, None, 3, {})
        self.assertIsNone(rep.kdim)

    def test_has_trivial_pseudostars(self):
        ''' has_trivial_pseudostars. '''
        self.assertTrue(dimensions.has_trivial_pseudostars(self.l2))
        self.assertFalse(dimensions.has_trivial_pseudostars(self.l1))

    def test_sp_property(self):
        ''' has_sp_property and hereditary_sp_property. '''
        self.assertTrue(dimensions.has_sp_property(self.l2))
        self.assertTrue(dimensions.hereditary_sp_property(self.l2))
        self.assertTrue(dimensions.has_sp_property(self.l1))
        for fid in ['fig4', 'fig6', 'fig7', 'fig8']:
            lat = lattices.import_lattice(fid)
            if dimensions.hereditary_sp_property(lat):
                self.assertTrue(dimensions.has_sp_property(lat), fid)

    def test_sublattice_hypotheses(self):
        ''' The sublattice M of fig3 is not a down-set below the top. '''
        lat = lattices.import_lattice('fig3')
        sset = element_set(lat, ['x2', 'x4', 'x5', 'x6', '1'])
        hyps = dimensions.sublattice_hypotheses(lat, sset)
        self.assertListEqual(list(hyps.keys()),
                             ['top_in_subset', 'rest_is_down_set',
                              'filters_isomorphic'])
        self.assertTrue(hyps['top_in_subset'])
        self.assertFalse(hyps['rest_is_down_set'])

    def test_sublattice_hypotheses_hold(self):
        ''' The whole lattice satisfies all hypotheses. '''
        lat = self.l2
        hyps = dimensions.sublattice_hypotheses(
            lat, element_set(lat, list(lat)))
        self.assertTrue(all(hyps.values()))

    def test_sublattice_hypotheses_invalid(self):
        ''' sublattice_hypotheses of a non-sublattice. '''
        lat = lattices.import_lattice('fig3')
        with self.assertRaises(NotALattice):
            _ = dimensions.sublattice_hypotheses(
                lat, element_set(lat, ['x5', 'x6', '1']))

    def test_cache_stats(self):
        ''' cache_stats. '''
        dimensions.ind_large(self.l2)
        dimensions.ind_small(self.l2)
        stats = dimensions.cache_stats()
        self.assertListEqual(list(stats.keys()),
                             ['ind_large', 'ind_small', 'minimal_covers'])
        for hits, misses in stats.values():
            self.assertGreaterEqual(hits, 0)
            self.assertGreater(misses, 0)
