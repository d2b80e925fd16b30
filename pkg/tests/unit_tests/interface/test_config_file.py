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
import json
import os
import tempfile
import unittest

import numpy as np

from hstnbeam.model import ConfigurationError, SalehParams, dbw_to_watts, dbm_to_watts
from hstnbeam.sim import ExperimentConfig
from hstnbeam.interface import (
    read_document,
    parse_quantity,
    experiment_from_dict,
    problem_from_dict,
    curve_from_dict,
    load_experiment,
    load_problem,
    validate_document,
)

base_dir = os.path.dirname(os.path.abspath(__file__))
configs_folder = os.path.join(base_dir, "..", "..", "..", "configs")


def solve_document(**kwargs):
    data = {
        "M": 4,
        "seed": 7,
        "power_limit_dbw": 12,
        "eps_dbm": -107,
        "sigma2_dbm": -107,
    }
    data.update(kwargs)
    return data


class QuantityTest(unittest.TestCase):
    def test_units(self):
        messages = []
        self.assertAlmostEqual(parse_quantity({"p_w": 2.0}, "p", messages), 2.0, places=15)
        self.assertAlmostEqual(parse_quantity({"p_dbw": 10.0}, "p", messages), 10.0, places=12)
        self.assertAlmostEqual(parse_quantity({"p_dbm": 30.0}, "p", messages), 1.0, places=12)
        assert messages == []

    def test_problems(self):
        messages = []
        assert parse_quantity({}, "p", messages, default=3.0) == 3.0
        assert messages == []
        parse_quantity({}, "p", messages)
        parse_quantity({"p_w": 1.0, "p_dbw": 0.0}, "p", messages)
        parse_quantity({"p_w": -1.0}, "p", messages)
        parse_quantity({"p_dbm": "loud"}, "p", messages)
        assert len(messages) == 4
        assert "p_w must be > 0" in messages[2]


class ProblemDocumentTest(unittest.TestCase):
    def test_sampled(self):
        spec, h_ss, messages = problem_from_dict(solve_document())
        assert messages == []
        assert spec.M == 4
        self.assertAlmostEqual(spec.power_limit_P / dbw_to_watts(12.0), 1.0, places=14)
        self.assertAlmostEqual(spec.interference_eps / dbm_to_watts(-107.0), 1.0, places=14)
        np.testing.assert_allclose(np.abs(h_ss), spec.l_ss, rtol=1e-14)

    def test_deterministic(self):
        first, h_first, _ = problem_from_dict(solve_document())
        second, h_second, _ = problem_from_dict(solve_document())
        np.testing.assert_array_equal(first.l_ss, second.l_ss)
        np.testing.assert_array_equal(h_first, h_second)
        assert first.pa == second.pa
        other, _, _ = problem_from_dict(solve_document(), seed=8)
        assert not np.array_equal(first.l_ss, other.l_ss)

    def test_explicit_vectors(self):
        data = solve_document(
            l_ss=[1.0, 2.0, 3.0, 4.0],
            l_st=[0.1, 0.1, 0.1, 0.1],
            phi_s=0.0,
            power_limit_w=1.0,
        )
        del data["power_limit_dbw"]
        spec, h_ss, messages = problem_from_dict(data)
        assert messages == []
        np.testing.assert_array_equal(spec.l_ss, [1.0, 2.0, 3.0, 4.0])
        np.testing.assert_array_equal(h_ss, spec.l_ss)
        assert spec.power_limit_P == 1.0

    def test_nonpositive_power(self):
        data = solve_document(power_limit_w=-1.0)
        del data["power_limit_dbw"]
        spec, _, messages = problem_from_dict(data)
        assert spec is None
        assert len(messages) == 1
        assert "power_limit_w" in messages[0]

    def test_dimension_mismatch(self):
        data = solve_document(M=4, l_ss=[1.0, 2.0, 3.0], l_st=[1.0, 1.0, 1.0, 1.0])
        _, _, messages = problem_from_dict(data)
        assert messages == ["l_ss has length 3 but M = 4"]

    def test_pa_mismatch(self):
        data = solve_document(pa={"alpha": [1.0, 1.0], "beta": [1.0, 1.0]})
        _, _, messages = problem_from_dict(data)
        assert messages == ["pa has length 2 but M = 4"]

    def test_malformed_pa(self):
        data = solve_document(pa={"alpha": ["x", 1.0, 1.0, 1.0], "beta": [1.0] * 4})
        spec, h_ss, messages = problem_from_dict(data)
        assert spec is None and h_ss is None
        assert len(messages) == 1
        assert messages[0].startswith("pa: ")

    def test_unknown_key(self):
        _, _, messages = problem_from_dict(solve_document(power=3.0))
        assert messages == ["unknown config key 'power'"]

    def test_missing_quantity(self):
        data = solve_document()
        del data["eps_dbm"]
        _, _, messages = problem_from_dict(data)
        assert messages == ["missing eps_w, eps_dbw or eps_dbm"]


class ExperimentDocumentTest(unittest.TestCase):
    def test_presets(self):
        for name in ("fig3", "fig4", "fig5"):
            config = load_experiment(os.path.join(configs_folder, f"{name}.json"))
            assert config.name == name
            assert config.check() == []

    def test_negative_trials(self):
        data = read_document(os.path.join(configs_folder, "fig3.json"))
        data["trials"] = -1
        _, messages = experiment_from_dict(data)
        assert messages == ["trials must be ≥ 1"]

    def test_seed_override(self):
        data = read_document(os.path.join(configs_folder, "fig4.json"))
        config, messages = experiment_from_dict(data, seed=11)
        assert messages == []
        assert config.seed == 11

    def test_many_problems(self):
        data = {
            "sweep": {"variable": "eps_dbm", "values": "all"},
            "trials": 0,
            "seed": -3,
            "channel": {"layout": "ring"},
        }
        _, messages = experiment_from_dict(data)
        assert "sweep values must be a list of numbers" in messages
        assert "seed must be an integer >= 0" in messages
        assert "trials must be ≥ 1" in messages
        assert any("layout" in message for message in messages)

    def test_malformed_schemes(self):
        data = read_document(os.path.join(configs_folder, "fig3.json"))
        for schemes in (5, "proposed", ["proposed", 3]):
            data["schemes"] = schemes
            config, messages = experiment_from_dict(data)
            assert len(messages) == 1
            assert messages[0].startswith("schemes must be a list of scheme names")
            assert config.schemes == ExperimentConfig().schemes

    def test_validate_document(self):
        assert validate_document(read_document(os.path.join(configs_folder, "fig5.json"))) == []
        assert validate_document(solve_document()) == []
        assert validate_document(solve_document(M=0)) != []


class CurveDocumentTest(unittest.TestCase):
    def test_shipped_config(self):
        data = read_document(os.path.join(configs_folder, "pa_curve.json"))
        assert validate_document(data) == []
        params, grid, messages = curve_from_dict(data)
        assert messages == []
        assert params == SalehParams.default()
        assert grid == (0.0, 3.0, 0.01)

    def test_defaults(self):
        params, grid, messages = curve_from_dict({"alpha": 1.0, "beta": 1.0, "r_max": 2.0})
        assert messages == []
        assert params.alpha_phi == SalehParams.default().alpha_phi
        assert grid == (0.0, 2.0, 0.01)

    def test_problems(self):
        _, _, messages = curve_from_dict({"r_max": "far", "gamma": 1.0})
        assert messages == [
            "unknown pa-curve key 'gamma'",
            "r_max must be a number, got 'far'",
        ]
        messages = validate_document({"beta": -1.0, "r_max": 1.0, "step": 0.3})
        assert len(messages) == 2
        assert "does not divide" in messages[1]


class ReadDocumentTest(unittest.TestCase):
    def test_read_errors(self):
        with tempfile.TemporaryDirectory() as tmp:
            with self.assertRaises(ConfigurationError):
                read_document(os.path.join(tmp, "missing.json"))
            bad = os.path.join(tmp, "bad.json")
            with open(bad, "w") as fp:
                fp.write("{not json")
            with self.assertRaises(ConfigurationError):
                read_document(bad)
            array = os.path.join(tmp, "array.json")
            with open(array, "w") as fp:
                json.dump([1, 2], fp)
            with self.assertRaises(ConfigurationError):
                read_document(array)

    def test_load_problem(self):
        spec, h_ss = load_problem(os.path.join(configs_folder, "solve_example.json"))
        assert spec.M == 16
        assert h_ss.shape == (16,)
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "bad.json")
            with open(path, "w") as fp:
                json.dump(solve_document(sigma2_w=0.0), fp)
            with self.assertRaises(ConfigurationError) as context:
                load_problem(path)
            # sigma2 given in two units is reported once
            assert len(context.exception.messages) == 1


if __name__ == "__main__":
    unittest.main()
