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
import os
import unittest

import numpy as np

from hstnbeam.sim import ExperimentConfig, run_sweep

base_dir = os.path.dirname(os.path.abspath(__file__))
results_folder = os.path.join(base_dir, "results")
if not os.path.exists(results_folder):
    os.mkdir(results_folder)


class Fig5TrendTest(unittest.TestCase):
    """low power sweep from -50 to -10 dBw at eps = -107 dBm, 200 trials"""

    @classmethod
    def setUpClass(cls):
        cls.config = ExperimentConfig.preset("fig5")
        cls.result = run_sweep(
            cls.config,
            keep_trials=True,
            status_file=os.path.join(results_folder, "fig5_sweep.txt"),
        )

    def test_proposed_dominates(self):
        for value in self.config.sweep_values:
            proposed = self.result.trial_rates("proposed", value)
            mrt = self.result.trial_rates("mrt_scaled", value)
            assert proposed.shape == (self.config.trials,)
            # rates are of order 1e-5 b/s/Hz at the low end, compare relatively
            assert np.all(proposed >= mrt * (1.0 - 1e-6))

    def test_close_to_mrt_at_low_power(self):
        proposed = self.result.mean_rates("proposed")
        mrt = self.result.mean_rates("mrt_scaled")
        for k in range(2):
            assert proposed[k] > 0.0
            assert (proposed[k] - mrt[k]) / proposed[k] < 0.02

    def test_proposed_optimal(self):
        statuses = [rec.status for rec in self.result.records if rec.scheme == "proposed"]
        assert len(statuses) == self.config.trials * len(self.config.sweep_values)
        assert all(status == "optimal" for status in statuses)

    def test_interference_safety(self):
        for rec in self.result.records:
            if rec.scheme != "proposed":
                continue
            _, eps = self.config.operating_point(rec.sweep_value)
            assert rec.interference_w <= eps * (1.0 + 1e-6)


if __name__ == "__main__":
    unittest.main()
