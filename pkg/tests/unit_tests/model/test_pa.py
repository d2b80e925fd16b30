#!/usr/bin/env python
"""
This file is part of the package hstnbeam for beamforming design in
spectrum-sharing hybrid satellite-terrestrial networks.

Copyright (C) 2024 the hstnbeam developers.
All rights reserved.

hstnbeam is licensed under the Apache License, Version 2.0 (the "License");
you may not use this software except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
import types
import unittest

import numpy as np

from hstnbeam.model import (
    SalehParams,
    PaBank,
    BeamWeights,
    am_am,
    am_pm,
    am_am_derivative,
    amplify,
    saturation_input,
    max_output,
    am_am_inverse,
    pa_curve,
    curve_grid,
    DomainError,
    InfeasibleAmplitudeError,
    ParameterError,
    DimensionError,
    ConfigurationError,
)

np.random.seed(123456)


def random_params(rng, size):
    return PaBank(
        alpha=rng.uniform(0.5, 2.0, size),
        beta=rng.uniform(0.2, 3.0, size),
        alpha_phi=rng.uniform(-5.0, 5.0, size),
        beta_phi=rng.uniform(0.0, 10.0, size),
    )


class SalehResponseTest(unittest.TestCase):
    def test_am_am(self):
        unit = SalehParams(alpha=1.0, beta=1.0)
        assert am_am(unit, 0.0) == 0.0
        self.assertAlmostEqual(am_am(unit, 2.0), 0.4, places=15)

        base = SalehParams(alpha=0.9445, beta=0.5138)
        r_sat = np.sqrt(1.0 / 0.5138)
        self.assertAlmostEqual(r_sat, 1.395, delta=1e-3)
        self.assertAlmostEqual(am_am(base, r_sat), 0.65885, delta=1e-4)
        self.assertAlmostEqual(am_am(base, r_sat), base.z_max, places=14)

    def test_am_am_domain(self):
        unit = SalehParams(alpha=1.0, beta=1.0)
        with self.assertRaises(DomainError):
            am_am(unit, -0.1)
        with self.assertRaises(DomainError):
            am_am(unit, np.nan)
        with self.assertRaises(DomainError):
            am_pm(unit, np.inf)

    def test_am_pm(self):
        base = SalehParams(alpha=1.0, beta=1.0, alpha_phi=4.0033, beta_phi=9.1040)
        assert am_pm(base, 0.0) == 0.0
        self.assertAlmostEqual(am_pm(base, 1.0), 4.0033 / 10.1040, places=14)
        self.assertAlmostEqual(am_pm(base, 1.0), 0.39621, places=5)
        degenerate = SalehParams(alpha=1.0, beta=1.0, alpha_phi=4.0, beta_phi=0.0)
        self.assertAlmostEqual(am_pm(degenerate, 2.0), 16.0, places=14)

    def test_am_pm_asymptote(self):
        p = SalehParams(alpha=1.0, beta=1.0, alpha_phi=4.0, beta_phi=2.0)
        r = np.linspace(0.0, 50.0, 500)
        phase = am_pm(p, r)
        assert np.all(np.diff(phase) > 0.0)
        assert np.all(phase < 2.0)

    def test_parameter_checks(self):
        with self.assertRaises(ParameterError):
            SalehParams(alpha=0.0, beta=1.0)
        with self.assertRaises(ParameterError):
            SalehParams(alpha=1.0, beta=-1.0)
        with self.assertRaises(ParameterError):
            SalehParams(alpha=1.0, beta=1.0, beta_phi=-0.5)
        # any real alpha_phi is accepted
        SalehParams(alpha=1.0, beta=1.0, alpha_phi=-3.0)

    def test_saturation_input(self):
        self.assertAlmostEqual(saturation_input(SalehParams(1.0, 1.0)), 1.0, places=15)
        self.assertAlmostEqual(
            saturation_input(SalehParams(1.0, 0.5138)), 1.395, delta=1e-3
        )
        self.assertAlmostEqual(saturation_input(SalehParams(1.0, 4.0)), 0.5, places=15)
        with self.assertRaises(ParameterError):
            saturation_input(types.SimpleNamespace(beta=0.0))
        with self.assertRaises(ParameterError):
            saturation_input(types.SimpleNamespace(beta=-2.0))

    def test_max_output(self):
        p = SalehParams(alpha=0.9445, beta=0.5138)
        self.assertAlmostEqual(max_output(p), 0.9445 / (2.0 * np.sqrt(0.5138)), places=15)

    def test_monotone_regions(self):
        rng = np.random.default_rng(1)
        bank = random_params(rng, 50)
        for p in bank.params:
            rising = np.linspace(0.0, p.r_sat, 400)
            falling = np.linspace(p.r_sat, 6.0 * p.r_sat, 400)
            assert np.all(np.diff(am_am(p, rising)) > 0.0)
            assert np.all(np.diff(am_am(p, falling)) < 0.0)
            assert np.all(am_am(p, falling) <= p.z_max * (1.0 + 1e-12))

    def test_derivative(self):
        p = SalehParams(alpha=0.9, beta=0.6)
        r = np.linspace(0.1, 3.0, 30)
        h = 1e-6
        fd = (am_am(p, r + h) - am_am(p, r - h)) / (2.0 * h)
        np.testing.assert_allclose(am_am_derivative(p, r), fd, rtol=1e-6, atol=1e-9)
        self.assertAlmostEqual(am_am_derivative(p, p.r_sat), 0.0, places=14)


class InverseTest(unittest.TestCase):
    def test_inverse_examples(self):
        unit = SalehParams(alpha=1.0, beta=1.0)
        assert am_am_inverse(unit, 0.0) == 0.0
        self.assertAlmostEqual(am_am_inverse(unit, 0.5), 1.0, places=12)
        # z_max = 0.5 is the saturation endpoint
        self.assertEqual(am_am_inverse(unit, 0.5 * (1.0 + 1e-13)), 1.0)
        self.assertAlmostEqual(am_am_inverse(unit, 0.4), 0.5, places=14)

    def test_inverse_errors(self):
        unit = SalehParams(alpha=1.0, beta=1.0)
        with self.assertRaises(InfeasibleAmplitudeError):
            am_am_inverse(unit, 0.5 * (1.0 + 1e-9))
        with self.assertRaises(DomainError):
            am_am_inverse(unit, -1e-3)
        # infeasible amplitudes are a kind of domain error
        with self.assertRaises(DomainError):
            am_am_inverse(unit, 0.6)

    def test_round_trip(self):
        rng = np.random.default_rng(2)
        bank = random_params(rng, 10000)
        # the inverse is ill-conditioned right at saturation, where dA/dr = 0
        r = rng.uniform(0.0, 1.0 - 1e-4, 10000) * bank.r_sat
        recovered = am_am_inverse(bank, am_am(bank, r))
        assert np.max(np.abs(recovered - r)) <= 1e-10
        assert np.all(recovered <= bank.r_sat)

        # saturation endpoint itself
        endpoint = am_am_inverse(bank, am_am(bank, bank.r_sat))
        assert np.max(np.abs(endpoint - bank.r_sat)) <= 1e-6

    def test_forward_consistency(self):
        rng = np.random.default_rng(3)
        bank = random_params(rng, 1000)
        zbar = rng.uniform(0.0, 1.0, 1000) * bank.z_max
        recovered = am_am(bank, am_am_inverse(bank, zbar))
        np.testing.assert_allclose(recovered, zbar, rtol=1e-12, atol=0.0)

    def test_fold_equivalence(self):
        rng = np.random.default_rng(4)
        bank = random_params(rng, 1000)
        r = bank.r_sat * rng.uniform(1.0 + 1e-6, 20.0, 1000)
        folded = am_am_inverse(bank, am_am(bank, r))
        assert np.all(folded <= bank.r_sat)
        assert np.all(folded < r)
        np.testing.assert_allclose(am_am(bank, folded), am_am(bank, r), rtol=1e-12)


class AmplifyTest(unittest.TestCase):
    def test_zero_input(self):
        bank = PaBank.uniform(SalehParams(1.0, 1.0, 0.0, 0.0), 1)
        z = amplify(bank, BeamWeights([0.0], [0.0]), 0.0)
        assert z.shape == (1,)
        assert z[0] == 0.0 + 0.0j

    def test_unit_input(self):
        bank = PaBank.uniform(SalehParams(1.0, 1.0, 0.0, 1.0), 1)
        z = amplify(bank, BeamWeights([1.0], [0.0]), 0.0)
        self.assertAlmostEqual(z[0].real, 0.5, places=15)
        self.assertAlmostEqual(z[0].imag, 0.0, places=15)

    def test_opposite_phases(self):
        bank = PaBank.uniform(SalehParams(1.0, 1.0, 4.0, 9.0), 2)
        z = amplify(bank, BeamWeights([1.0, 1.0], [0.0, np.pi]), 0.0)
        self.assertAlmostEqual(abs(z[0]), abs(z[1]), places=14)
        self.assertAlmostEqual(abs(z[0] + z[1]), 0.0, places=14)

    def test_decomposition(self):
        rng = np.random.default_rng(5)
        bank = random_params(rng, 64)
        weights = BeamWeights(rng.uniform(0.0, 3.0, 64), rng.uniform(-np.pi, np.pi, 64))
        theta0 = 0.7
        z = amplify(bank, weights, theta0)
        np.testing.assert_allclose(np.abs(z), am_am(bank, weights.amplitudes), rtol=1e-12)
        distortion = np.angle(z) - theta0 - weights.phases
        wrapped = np.angle(np.exp(1j * (distortion - am_pm(bank, weights.amplitudes))))
        assert np.max(np.abs(wrapped)) <= 1e-12

    def test_dimension_error(self):
        bank = PaBank.uniform(SalehParams.default(), 3)
        with self.assertRaises(DimensionError):
            amplify(bank, BeamWeights([1.0, 1.0], [0.0, 0.0]), 0.0)


class PaBankTest(unittest.TestCase):
    def test_bank(self):
        params = [SalehParams(1.0, 1.0, 0.5, 0.5), SalehParams.default()]
        bank = PaBank.from_params(params)
        assert len(bank) == 2
        assert bank[1] == SalehParams.default()
        assert bank.params == params
        np.testing.assert_allclose(bank.r_sat, [1.0, np.sqrt(1.0 / 0.5138)])
        assert PaBank.from_dict(bank.to_dict()) == bank

    def test_bank_errors(self):
        with self.assertRaises(DimensionError):
            PaBank(alpha=[1.0, 1.0], beta=[1.0])
        with self.assertRaises(ParameterError):
            PaBank(alpha=[1.0, -1.0], beta=[1.0, 1.0])
        with self.assertRaises(DimensionError):
            PaBank(alpha=[], beta=[])

    def test_bank_immutable(self):
        bank = PaBank.uniform(SalehParams.default(), 4)
        with self.assertRaises(ValueError):
            bank.alpha[0] = 2.0


class PaCurveTest(unittest.TestCase):
    def test_row_count(self):
        r, out_am, out_pm = pa_curve(SalehParams.default(), 0.0, 3.0, 0.01)
        assert r.shape == (301,)
        assert out_am.shape == out_pm.shape == (301,)
        assert np.all(np.diff(r) > 0.0)

    def test_saturation_peak(self):
        p = SalehParams.default()
        step = 3.0 * p.r_sat / 600
        r, out_am, _ = pa_curve(p, 0.0, 3.0 * p.r_sat, step)
        peak = int(np.argmax(out_am))
        assert abs(r[peak] - p.r_sat) <= step
        # unique maximum
        assert np.sum(out_am == out_am[peak]) == 1

    def test_unit_value(self):
        r, out_am, _ = pa_curve(SalehParams(1.0, 1.0), 0.0, 2.0, 0.5)
        np.testing.assert_allclose(r, [0.0, 0.5, 1.0, 1.5, 2.0])
        self.assertAlmostEqual(out_am[2], 0.5, places=15)

    def test_invalid_range(self):
        p = SalehParams.default()
        with self.assertRaises(ConfigurationError):
            pa_curve(p, 1.0, 1.0, 0.01)
        with self.assertRaises(ConfigurationError):
            pa_curve(p, 0.0, 1.0, -0.1)
        with self.assertRaises(ConfigurationError):
            pa_curve(p, 0.0, 1.0, 5.0)

    def test_step_must_divide_range(self):
        with self.assertRaises(ConfigurationError):
            curve_grid(0.0, 1.0, 0.3)
        r = curve_grid(0.0, 1.2, 0.3)
        np.testing.assert_allclose(np.diff(r), 0.3, rtol=1e-12)
        assert curve_grid(0.0, 3.0, 0.01).shape == (301,)


if __name__ == "__main__":
    unittest.main()
