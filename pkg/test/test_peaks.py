import unittest
import math
import os

import numpy as np

from qfiunruh.analysis import (ExtremumKind, PeakSearch, Scan, find_extrema, golden_section_maximize,
                               golden_section_minimize, optimal_detection_time, peak_track, scan_grid)
from qfiunruh.analysis.peaks import _candidates, _remove_ripple
from qfiunruh.errors import ValidationError
from qfiunruh import config_log

config_log("test.log")

if os.getcwd().endswith('test'):
    os.chdir('..')


def time_curve(a, theta, field='em', n_points=601):
    return Scan(scan_grid([f'tau:0:15:{n_points}'], a=a, theta=theta, field=field))


def acceleration_curve(tau, theta, field='em', n_points=601):
    return Scan(scan_grid([f'a:0.001:6:{n_points}'], tau=tau, theta=theta, field=field))


class TestGolden(unittest.TestCase):

    def test_parabola(self):
        x, fx = golden_section_maximize(lambda v: -(v - 0.3) ** 2, -1.0, 2.0, 1e-10)
        self.assertAlmostEqual(x, 0.3, places=9)
        self.assertAlmostEqual(fx, 0.0, places=15)
        x, fx = golden_section_minimize(lambda v: math.cosh(v - 1.0), 0.0, 3.0, 1e-10)
        # cosh is flat to rounding within 1e-8 of its minimum
        self.assertAlmostEqual(x, 1.0, places=7)
        self.assertAlmostEqual(fx, 1.0, places=14)


class TestHelpers(unittest.TestCase):

    def test_candidates_alternate(self):
        values = np.sin(np.linspace(0.0, 6 * math.pi, 300))
        kinds = [kind for _, kind in _candidates(values)]
        self.assertEqual(kinds, [ExtremumKind.MAX, ExtremumKind.MIN] * 3)

    def test_flat_segment_is_one_extremum(self):
        values = np.array([0.0, 1.0, 2.0, 2.0, 2.0, 1.0, 0.0])
        self.assertEqual(_candidates(values), [(4, ExtremumKind.MAX)])

    def test_ripple_is_removed(self):
        values = np.linspace(0.0, 1.0, 101)
        values[50] = values[51] + 1e-12
        candidates = _candidates(values)
        self.assertEqual(len(candidates), 2)
        self.assertEqual(_remove_ripple(values, candidates, 1e-9), [])

    def test_prominent_extrema_are_kept(self):
        values = np.sin(np.linspace(0.0, 4 * math.pi, 200))
        candidates = _candidates(values)
        self.assertEqual(_remove_ripple(values, candidates, 1e-9), candidates)


class TestFindExtrema(unittest.TestCase):

    def test_time_curves(self):
        expected = {(1.0, 0.0): (0.75, 3.15),
                    (1.5, 0.0): (0.4, 1.425),
                    (2.5, 0.0): (0.125, 0.45),
                    (1.0, math.pi / 2): (0.8, 2.675)}
        for (a, theta), (t_max, t_min) in expected.items():
            report = find_extrema(time_curve(a, theta))
            self.assertEqual(report.axis, 'tau')
            self.assertEqual(report.extrema[0].kind, ExtremumKind.MAX)
            self.assertAlmostEqual(report.maxima[0].location, t_max, delta=0.05, msg=f'a={a}, theta={theta}')
            self.assertAlmostEqual(report.minima[0].location, t_min, delta=0.05, msg=f'a={a}, theta={theta}')

    def test_ground_state_has_no_minimum(self):
        for a in [1.0, 1.5, 2.5]:
            report = find_extrema(time_curve(a, math.pi))
            self.assertEqual(report.minima, [], f'no dip expected for a={a} from the ground state')

    def test_extrema_are_local(self):
        curve = time_curve(1.0, 0.0)
        fn = curve.grid.function()
        report = find_extrema(curve)
        for e in report.extrema:
            sign = 1.0 if e.kind is ExtremumKind.MAX else -1.0
            for step in [1e-3, 1e-2]:
                self.assertGreaterEqual(sign * (e.value - fn(e.location + step)), 0.0)
                self.assertGreaterEqual(sign * (e.value - fn(e.location - step)), 0.0)
        kinds = [e.kind for e in report.extrema]
        self.assertTrue(all(k1 is not k2 for k1, k2 in zip(kinds, kinds[1:])), 'extrema should alternate')

    def test_acceleration_curves(self):
        report = find_extrema(acceleration_curve(4.0, math.pi))
        self.assertEqual(report.n_local_maxima, 1)
        report = find_extrema(acceleration_curve(0.5, 0.0))
        self.assertEqual(report.n_local_maxima, 2)
        self.assertAlmostEqual(report.maxima[0].location, 1.136, delta=0.01)
        self.assertAlmostEqual(report.maxima[1].location, 3.085, delta=0.01)
        self.assertEqual(report.global_max[1], max(e.value for e in report.maxima))

    def test_ground_state_peak_moves_and_settles(self):
        track = peak_track([0.5, 1.0, 4.0, 9.0], math.pi)
        self.assertEqual(track['peak'].tolist(), [0, 0, 0, 0])
        locations = track['a_peak'].tolist()
        self.assertGreater(locations[0], locations[1])
        self.assertGreater(locations[1], locations[2])
        self.assertLess(abs(locations[2] - locations[3]), 1e-3)
        self.assertAlmostEqual(locations[3], 1.5211, delta=1e-3)

    def test_resolution_independent(self):
        coarse = find_extrema(time_curve(1.0, 0.0, n_points=301), refine_tol=1e-6)
        fine = find_extrema(time_curve(1.0, 0.0, n_points=601), refine_tol=1e-6)
        self.assertEqual(len(coarse.extrema), len(fine.extrema))
        for c, f in zip(coarse.extrema, fine.extrema):
            self.assertLess(abs(c.location - f.location), 1e-5)

    def test_validation(self):
        with self.assertRaises(ValidationError):
            find_extrema(time_curve(1.0, 0.0, n_points=40))
        with self.assertRaises(ValidationError):
            find_extrema(Scan(scan_grid(['tau:0:15:60', 'a:0.1:6:60'], theta=0.0)))
        with self.assertRaises(ValidationError):
            find_extrema(time_curve(1.0, 0.0), refine_tol=1e-3)

    def test_optimal_detection_time(self):
        tau, value = optimal_detection_time(1.0, 0.0)
        self.assertAlmostEqual(tau, 0.75, delta=0.05)
        self.assertGreater(value, 0.0)
        tau, value = optimal_detection_time(1.0, math.pi, tau_max=3.0)
        self.assertLessEqual(tau, 3.0)
        self.assertGreater(value, 0.0)


class TestPeakSearch(unittest.TestCase):

    def test_csv_and_json(self):
        search = PeakSearch(time_curve(1.0, 0.0))
        self.assertTrue(search.to_csv().startswith('location,value,kind\n'))
        text = search.to_json()
        self.assertIn('"n_local_maxima"', text)
        self.assertEqual(search.report.axis, 'tau')
        self.assertEqual(repr(search), "PeakSearch(Scan(tau:0:15:601, field='em'))")


if __name__ == '__main__':
    unittest.main()
