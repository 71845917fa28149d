import unittest
import math
import os

import numpy as np

from qfiunruh.estimation import Estimation, MeasurementPlan, measurement_plan, simulate_estimation
from qfiunruh.physics import EvolutionParams, InitialState, evolve
from qfiunruh.errors import PreconditionError, ValidationError
from qfiunruh import config_log

config_log("test.log")

if os.getcwd().endswith('test'):
    os.chdir('..')


class TestMeasurementPlan(unittest.TestCase):

    def test_sld_projectors(self):
        state = evolve(InitialState(0.0), EvolutionParams(4.0, 1.0))
        plan = measurement_plan(state, n_shots=5000, seed=3)
        minus, plus = plan.projectors
        np.testing.assert_allclose(minus + plus, np.eye(2), atol=1e-12)
        self.assertAlmostEqual(np.linalg.norm(plan.direction), 1.0, places=12)
        p = plan.probability(state.omega)
        self.assertTrue(0.0 <= p <= 1.0)

    def test_invalid_plan(self):
        with self.assertRaises(ValidationError):
            MeasurementPlan(projectors=(np.eye(2), np.eye(2)))
        with self.assertRaises(ValidationError):
            MeasurementPlan(projectors=(np.array([[1.0, 1.0], [0.0, 0.0]]), np.array([[0.0, -1.0], [0.0, 1.0]])))
        half = np.diag([1.0, 0.0]).astype(complex)
        with self.assertRaises(ValidationError):
            MeasurementPlan(projectors=(half, np.eye(2) - half), n_shots=0)
        with self.assertRaises(ValidationError):
            MeasurementPlan(projectors=(half, np.eye(2) - half), seed=-1)


class TestSimulateEstimation(unittest.TestCase):

    def test_reference_run(self):
        report = simulate_estimation(1.0, 4.0, 0.0, n_shots=100000, n_trials=200, seed=42)
        self.assertEqual(report.n_trials, 200)
        self.assertAlmostEqual(report.a_hat_mean, 1.0, delta=0.01)
        self.assertGreaterEqual(report.crb_product, 0.8)
        self.assertLessEqual(report.crb_product, 1.5)
        self.assertEqual(report.boundary_hits, 0)

    def test_deterministic(self):
        first = simulate_estimation(1.5, 2.0, math.pi, n_shots=2000, n_trials=100, seed=7)
        second = simulate_estimation(1.5, 2.0, math.pi, n_shots=2000, n_trials=100, seed=7)
        threaded = simulate_estimation(1.5, 2.0, math.pi, n_shots=2000, n_trials=100, seed=7, threads=4)
        self.assertEqual(first, second)
        self.assertEqual(first, threaded)
        other = simulate_estimation(1.5, 2.0, math.pi, n_shots=2000, n_trials=100, seed=8)
        self.assertNotEqual(first.a_hat_var, other.a_hat_var)

    def test_bound_is_respected(self):
        for a, tau, theta in [(1.5, 2.0, math.pi), (1.0, 9.0, math.pi), (2.0, 1.0, math.pi)]:
            report = simulate_estimation(a, tau, theta, n_shots=20000, n_trials=400, seed=11)
            self.assertGreaterEqual(report.crb_product, 0.8, f'a={a}, tau={tau}, theta={theta}')

    def test_variance_scales_with_shots(self):
        few = simulate_estimation(1.5, 2.0, math.pi, n_shots=20000, n_trials=400, seed=5)
        many = simulate_estimation(1.5, 2.0, math.pi, n_shots=40000, n_trials=400, seed=6)
        ratio = few.a_hat_var / many.a_hat_var
        self.assertGreaterEqual(ratio, 1.4)
        self.assertLessEqual(ratio, 2.6)

    def test_preconditions(self):
        with self.assertRaises(PreconditionError):
            simulate_estimation(1.0, 0.0, 0.0, n_shots=1000, n_trials=100)
        with self.assertRaises(PreconditionError):
            simulate_estimation(1.0, 4.0, 0.0, n_shots=999, n_trials=100)
        with self.assertRaises(PreconditionError):
            simulate_estimation(1.0, 4.0, 0.0, n_shots=1000, n_trials=99)
        with self.assertRaises(PreconditionError):
            simulate_estimation(0.0, 4.0, 0.0, n_shots=1000, n_trials=100)
        with self.assertRaises(PreconditionError):
            simulate_estimation(0.05, 4.0, math.pi, n_shots=1000, n_trials=100)


class TestEstimation(unittest.TestCase):

    def test_record(self):
        rec = Estimation(1.5, 2.0, math.pi, n_shots=1000, n_trials=100, seed=1)
        self.assertEqual(rec.label, 'a1.5_tau2_seed1')
        self.assertIsNone(rec.report)
        text = rec.to_json()
        self.assertIn('"crb_product"', text)
        self.assertEqual(rec.data['n_shots'], 1000)
        self.assertEqual(rec.report.seed, 1)

    def test_error_is_stored(self):
        with self.assertLogs(level='ERROR'):
            rec = Estimation(1.0, 0.0, 0.0, n_shots=1000, n_trials=100)
            self.assertIsNone(rec.data)
        self.assertIn('QFI', rec.error_msg)


if __name__ == '__main__':
    unittest.main()
