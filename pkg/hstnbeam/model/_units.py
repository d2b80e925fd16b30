#!/usr/bin/env python

# This file is part of the package hstnbeam for beamforming design in
# spectrum-sharing hybrid satellite-terrestrial networks.

# Copyright (C) 2024 the hstnbeam developers.
# All rights reserved.

# hstnbeam is licensed under the Apache License, Version 2.0 (the "License");
# you may not use this software except in compliance with the License.
# You may obtain a copy of the License at

#   http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

__all__ = [
    "db_to_linear",
    "linear_to_db",
    "dbm_to_watts",
    "dbw_to_watts",
    "watts_to_dbm",
    "watts_to_dbw",
]

import numpy as np

# dB quantities are power ratios, dBm/dBw are absolute powers


def _as_output(value):
    value = np.asarray(value, dtype=float)
    return float(value) if value.ndim == 0 else value


def db_to_linear(value_db):
    return _as_output(np.power(10.0, np.asarray(value_db, dtype=float) / 10.0))


def linear_to_db(value):
    return _as_output(10.0 * np.log10(value))


def dbw_to_watts(value_dbw):
    return db_to_linear(value_dbw)


def dbm_to_watts(value_dbm):
    return db_to_linear(np.asarray(value_dbm, dtype=float) - 30.0)


def watts_to_dbw(watts):
    return linear_to_db(watts)


def watts_to_dbm(watts):
    return linear_to_db(watts) + 30.0
