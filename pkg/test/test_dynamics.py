import unittest
import itertools
import math
import os

import numpy as np

from qfiunruh.physics import (InitialState, EvolutionParams, BlochState, FieldModel, evolve, bloch_ode_oracle,
                              bloch_arrays, coefficients, tanh_ratio)
from qfiunruh.errors import DomainError
from qfiunruh import config_log

config_log("test.log")

if os.getcwd().endswith('test'):
    os.chdir('..')

THETAS = [0.0, math.pi / 2, math.pi]


class TestInitialState(unittest.TestCase):

    def test_bloch_vector(self):
        np.testing.assert_array_equal(InitialState(0.0).bloch_vector(), [0.0, 0.0, 1.0])
        np.testing.assert_array_equal(InitialState(math.pi).bloch_vector(), [0.0, 0.0, -1.0])
        v = InitialState(math.pi / 2, math.pi / 2).bloch_vector()
        self.assertAlmostEqual(v[1], 1.0, places=15)

    def test_domain(self):
        with self.assertRaises(DomainError):
            InitialState(-0.1)
        with self.assertRaises(DomainError):
            InitialState(3.2)
        with self.assertRaises(DomainError):
            InitialState(1.0, 2 * math.pi)
        with self.assertRaises(DomainError):
            EvolutionParams(-1.0, 1.0)
        with self.assertRaises(DomainError):
            EvolutionParams(1.0, -1.0)
        with self.assertRaises(DomainError):
            EvolutionParams(1.0, 1.0, 'dirac')
        with self.assertRaises(DomainError):
            EvolutionParams(1.0, 1.0, omega_ratio=0.0)


class TestEvolve(unittest.TestCase):

    def test_initial_time(self):
        for theta in THETAS + [math.pi / 4]:
            init = InitialState(theta, 0.3)
            s = evolve(init, EvolutionParams(0.0, 1.0))
            np.testing.assert_allclose(s.omega, init.bloch_vector(), atol=1e-15)
            np.testing.assert_array_equal(s.d_omega, np.zeros(3))

    def test_ground_state_has_no_transverse_part(self):
        s = evolve(InitialState(math.pi), EvolutionParams(2.0, 1.0))
        self.assertEqual(s.omega[0], 0.0)
        self.assertEqual(s.omega[1], 0.0)

    def test_inside_bloch_ball(self):
        for a, tau, theta in itertools.product([0.1, 1.0, 4.0], [0.1, 1.0, 10.0], THETAS):
            for field in FieldModel:
                self.assertLessEqual(evolve(InitialState(theta), EvolutionParams(tau, a, field)).norm, 1.0 + 1e-12)

    def test_transverse_part_decays(self):
        taus = np.linspace(0.0, 10.0, 201)
        for a, theta in itertools.product([0.5, 1.0, 2.5], [math.pi / 4, math.pi / 2]):
            for field in FieldModel:
                rate = 4 * coefficients(a, field).A
                init = InitialState(theta, 0.7)
                transverse = np.array([np.sum(evolve(init, EvolutionParams(tau, a, field)).omega[:2] ** 2)
                                       for tau in taus])
                self.assertTrue(np.all(np.diff(transverse) < 0), f'a={a}, theta={theta}, {field.value}')
                np.testing.assert_allclose(transverse, math.sin(theta) ** 2 * np.exp(-rate * taus), rtol=1e-12)

    def test_stationary_state(self):
        for a in [0.5, 1.0, 2.5]:
            for field in FieldModel:
                s = evolve(InitialState(math.pi / 3), EvolutionParams(60.0, a, field))
                np.testing.assert_allclose(s.omega, [0.0, 0.0, -tanh_ratio(a)], atol=1e-12)

    def test_rotation_does_not_change_length(self):
        reference = evolve(InitialState(1.0), EvolutionParams(2.0, 1.0))
        rotated = evolve(InitialState(1.0, 2.0), EvolutionParams(2.0, 1.0, omega_ratio=7.0))
        self.assertAlmostEqual(reference.norm, rotated.norm, places=14)
        self.assertEqual(reference.omega[2], rotated.omega[2])

    def test_vectorised_matches_scalar(self):
        a = np.array([0.5, 1.0, 2.0])
        omega, d_omega = bloch_arrays(a, 3.0, 1.2)
        for k, value in enumerate(a):
            s = evolve(InitialState(1.2), EvolutionParams(3.0, float(value)))
            np.testing.assert_allclose(omega[k], s.omega, rtol=1e-14, atol=1e-16)
            np.testing.assert_allclose(d_omega[k], s.d_omega, rtol=1e-14, atol=1e-16)

    def test_derivative_matches_finite_differences(self):
        h = 1e-5
        for a, tau, theta in itertools.product([0.5, 1.0, 1.5, 2.5, 4.0], [0.1, 0.5, 1.0, 4.0, 9.0], THETAS):
            for field in FieldModel:
                init = InitialState(theta)
                s = evolve(init, EvolutionParams(tau, a, field))
                upper = evolve(init, EvolutionParams(tau, a + h, field)).omega
                lower = evolve(init, EvolutionParams(tau, a - h, field)).omega
                np.testing.assert_allclose(s.d_omega, (upper - lower) / (2 * h), rtol=1e-5, atol=1e-9,
                                           err_msg=f'a={a}, tau={tau}, theta={theta}, {field.value}')

    def test_density_matrix(self):
        s = BlochState(omega=[0.1, -0.2, 0.3], d_omega=[1.0, 0.0, 0.0])
        rho = s.density_matrix()
        self.assertAlmostEqual(np.trace(rho).real, 1.0, places=15)
        np.testing.assert_allclose(rho, rho.conj().T)
        self.assertAlmostEqual(np.trace(s.density_matrix_derivative()).real, 0.0, places=15)


class TestOdeOracle(unittest.TestCase):

    def test_closed_form_matches_integration(self):
        worst = 0.0
        for tau, a, theta in itertools.product([0.5, 1.0, 4.0, 9.0], [0.5, 1.0, 2.5], THETAS):
            for field in FieldModel:
                init = InitialState(theta)
                params = EvolutionParams(tau, a, field)
                difference = np.max(np.abs(evolve(init, params).omega - bloch_ode_oracle(init, params, 1e-12).omega))
                worst = max(worst, difference)
        self.assertLess(worst, 1e-8, 'closed form and integration should agree')

    def test_zero_time(self):
        init = InitialState(1.0)
        np.testing.assert_array_equal(bloch_ode_oracle(init, EvolutionParams(0.0, 1.0)).omega, init.bloch_vector())

    def test_tolerance_range(self):
        with self.assertRaises(DomainError):
            bloch_ode_oracle(InitialState(0.0), EvolutionParams(1.0, 1.0), rtol=1e-3)
        with self.assertRaises(DomainError):
            bloch_ode_oracle(InitialState(0.0), EvolutionParams(1.0, 1.0), rtol=1e-14)


if __name__ == '__main__':
    unittest.main()
