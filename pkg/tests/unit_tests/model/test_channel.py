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
import unittest

import numpy as np

from hstnbeam.model import (
    LargeScaleChannel,
    SmallScalePhase,
    UtGeometry,
    ChannelConfig,
    beam_gain_pattern,
    collapse,
    realize,
    sample_scenario,
    db_to_linear,
    dbm_to_watts,
    watts_to_dbm,
    ParameterError,
    ConfigurationError,
)


class BeamPatternTest(unittest.TestCase):
    def test_boresight(self):
        geom = UtGeometry(off_axis_angles=[0.0], angle_3db=np.deg2rad(0.2), peak_gain=5.0)
        self.assertAlmostEqual(beam_gain_pattern(geom)[0], 5.0, places=14)

    def test_3db_point(self):
        angle_3db = np.deg2rad(0.2)
        geom = UtGeometry(off_axis_angles=[angle_3db], angle_3db=angle_3db)
        self.assertAlmostEqual(beam_gain_pattern(geom)[0], 0.5, delta=1e-2)

    def test_far_sidelobe(self):
        angle_3db = np.deg2rad(0.2)
        geom = UtGeometry(off_axis_angles=[10.0 * angle_3db], angle_3db=angle_3db)
        assert beam_gain_pattern(geom)[0] < 0.01

    def test_main_lobe_decreasing(self):
        angle_3db = np.deg2rad(0.4)
        angles = np.linspace(0.0, angle_3db, 200)
        gain = beam_gain_pattern(UtGeometry(angles, angle_3db))
        assert np.all(np.diff(gain) < 0.0)
        assert np.all(gain > 0.0)

    def test_near_boresight_continuous(self):
        angle_3db = np.deg2rad(0.2)
        gain = beam_gain_pattern(UtGeometry([0.0, 1e-12, 1e-7], angle_3db))
        np.testing.assert_allclose(gain, 1.0, rtol=1e-8)

    def test_geometry_errors(self):
        with self.assertRaises(ParameterError):
            UtGeometry([-0.1], 0.01)
        with self.assertRaises(ParameterError):
            UtGeometry([0.1], 0.0)
        with self.assertRaises(ParameterError):
            UtGeometry([0.1], 0.01, peak_gain=0.0)


class ChannelTest(unittest.TestCase):
    def test_collapse(self):
        ch = LargeScaleChannel(path_loss_g=1.0, rain_fade_xi=1.0, beam_gains_b=[4.0, 9.0])
        np.testing.assert_allclose(collapse(ch), [2.0, 3.0], rtol=1e-15)
        ch = LargeScaleChannel(path_loss_g=0.01, rain_fade_xi=1.0, beam_gains_b=[1.0])
        np.testing.assert_allclose(ch.gain_vector, [0.1], rtol=1e-15)

    def test_realize(self):
        ch = LargeScaleChannel(path_loss_g=1.0, rain_fade_xi=1.0, beam_gains_b=[4.0, 9.0])
        h = realize(ch, 0.0)
        np.testing.assert_allclose(h, [2.0, 3.0], rtol=1e-15)
        h = realize(ch, SmallScalePhase(np.pi / 2.0))
        np.testing.assert_allclose(h, [-2.0j, -3.0j], atol=1e-15)

    def test_magnitude_invariance(self):
        rng = np.random.default_rng(10)
        ch = LargeScaleChannel(1e-3, 0.8, rng.uniform(0.0, 10.0, 8))
        for _ in range(20):
            phase = SmallScalePhase.draw(rng)
            assert 0.0 <= phase.phi < 2.0 * np.pi
            np.testing.assert_allclose(np.abs(realize(ch, phase)), collapse(ch), rtol=1e-14)

    def test_coherent_bound(self):
        rng = np.random.default_rng(11)
        ch = LargeScaleChannel(1.0, 1.0, rng.uniform(0.0, 2.0, 6))
        l = collapse(ch)
        for _ in range(200):
            z = rng.uniform(0.0, 1.0, 6) * np.exp(1j * rng.uniform(-np.pi, np.pi, 6))
            h = realize(ch, rng.uniform(0.0, 2.0 * np.pi))
            assert abs(np.vdot(h, z)) ** 2 <= np.dot(l, np.abs(z)) ** 2 * (1.0 + 1e-12)

    def test_channel_errors(self):
        with self.assertRaises(ParameterError):
            LargeScaleChannel(0.0, 1.0, [1.0])
        with self.assertRaises(ParameterError):
            LargeScaleChannel(1.0, -1.0, [1.0])
        with self.assertRaises(ParameterError):
            LargeScaleChannel(1.0, 1.0, [1.0, -1.0])

    def test_dict_round_trip(self):
        ch = LargeScaleChannel(1e-21, 0.5, [1.0, 2.0, 3.0], seed=9)
        data = ch.to_dict()
        self.assertAlmostEqual(data["g_db"], -210.0, places=10)
        other = LargeScaleChannel.from_dict(data)
        self.assertAlmostEqual(other.path_loss_g / ch.path_loss_g, 1.0, places=13)
        assert other.rain_fade_xi == 0.5
        assert other.seed == 9
        np.testing.assert_array_equal(other.beam_gains_b, ch.beam_gains_b)


class ScenarioTest(unittest.TestCase):
    def test_defaults(self):
        ch_ss, ch_st = sample_scenario(42, 16)
        for ch in (ch_ss, ch_st):
            assert len(ch) == 16
            assert ch.rain_fade_xi == 1.0
            self.assertAlmostEqual(ch.path_loss_g / 1e-21, 1.0, places=12)
            assert ch.seed == 42
            assert np.all(ch.beam_gains_b >= 0.0)
            assert np.all(ch.beam_gains_b <= db_to_linear(60.0) * (1.0 + 1e-12))
        # independent UT locations on the two links
        assert not np.array_equal(ch_ss.beam_gains_b, ch_st.beam_gains_b)

    def test_deterministic(self):
        first = sample_scenario(7, 8)
        second = sample_scenario(7, 8)
        assert first[0] == second[0]
        assert first[1] == second[1]
        third = sample_scenario(8, 8)
        assert not first[0] == third[0]

    def test_generator_seed(self):
        ch_ss, _ = sample_scenario(np.random.default_rng(3), 4)
        assert ch_ss.seed is None

    def test_lattice_layout(self):
        config = ChannelConfig(layout="lattice", angle_3db_deg=0.2)
        ch_ss, ch_st = sample_scenario(5, 9, config)
        assert len(ch_ss) == len(ch_st) == 9
        # the UT lies inside the lattice so some beam is within one spacing
        peak = db_to_linear(config.peak_gain_dbi)
        assert np.max(ch_ss.beam_gains_b) > 1e-3 * peak

    def test_rain_fade(self):
        config = ChannelConfig(xi_db_mean=-1.0, xi_db_std=2.0)
        fades = set()
        for seed in range(20):
            ch_ss, ch_st = sample_scenario(seed, 2, config)
            assert ch_ss.rain_fade_xi > 0.0
            fades.add(ch_ss.rain_fade_xi)
            fades.add(ch_st.rain_fade_xi)
        assert len(fades) == 40

    def test_config_errors(self):
        with self.assertRaises(ConfigurationError):
            sample_scenario(1, 0)
        with self.assertRaises(ConfigurationError):
            sample_scenario(1, 4, ChannelConfig(layout="ring"))
        with self.assertRaises(ConfigurationError) as context:
            sample_scenario(1, 4, ChannelConfig(xi_db_std=-1.0, angle_3db_deg=0.0))
        assert len(context.exception.messages) == 2

    def test_config_check(self):
        config = ChannelConfig(g_db="loud")
        messages = config.check()
        assert len(messages) == 1
        assert "g_db" in messages[0]
        # check leaves the config untouched
        assert config.g_db == "loud"
        assert ChannelConfig().check() == []

    def test_config_dict(self):
        config = ChannelConfig(g_db=-200.0, layout="lattice")
        assert ChannelConfig.from_dict(config.to_dict()) == config
        with self.assertRaises(ConfigurationError):
            ChannelConfig.from_dict({"gain": 1.0})


class UnitsTest(unittest.TestCase):
    def test_dbm(self):
        self.assertAlmostEqual(dbm_to_watts(30.0), 1.0, places=15)
        self.assertAlmostEqual(dbm_to_watts(-107.0) / 10.0 ** (-13.7), 1.0, places=12)
        self.assertAlmostEqual(watts_to_dbm(1e-3), 0.0, places=12)
        assert isinstance(dbm_to_watts(0.0), float)


if __name__ == "__main__":
    unittest.main()
