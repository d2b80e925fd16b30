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
    "format_float",
    "write_sweep_csv",
    "write_sweep_json",
    "write_pa_curve_csv",
    "write_pa_curve_json",
    "read_sweep_json",
]

import csv
import json

from ..sim.monte_carlo import CSV_COLUMNS, SweepResult

PA_CURVE_COLUMNS = ("r", "am_am", "am_pm")


def format_float(value) -> str:
    """shortest repr that round trips, '.' decimal separator"""
    return repr(float(value))


def _csv_writer(stream):
    return csv.writer(stream, lineterminator="\n")


def write_sweep_csv(result: SweepResult, stream):
    writer = _csv_writer(stream)
    writer.writerow(CSV_COLUMNS)
    for row in result.rows:
        writer.writerow(
            [
                row.sweep_variable,
                format_float(row.sweep_value),
                row.scheme,
                format_float(row.mean_rate),
                format_float(row.stderr_rate),
                format_float(row.mean_interference_w),
                str(int(row.trials)),
            ]
        )


def write_sweep_json(result: SweepResult, stream):
    json.dump(result.to_rows(), stream, indent=2)
    stream.write("\n")


def read_sweep_json(stream, name="custom") -> SweepResult:
    return SweepResult.from_rows(json.load(stream), name=name)


def write_pa_curve_csv(r, am_am, am_pm, stream):
    writer = _csv_writer(stream)
    writer.writerow(PA_CURVE_COLUMNS)
    for values in zip(r, am_am, am_pm):
        writer.writerow([format_float(v) for v in values])


def write_pa_curve_json(r, am_am, am_pm, stream):
    rows = [
        dict(zip(PA_CURVE_COLUMNS, map(float, values))) for values in zip(r, am_am, am_pm)
    ]
    json.dump(rows, stream, indent=2)
    stream.write("\n")
