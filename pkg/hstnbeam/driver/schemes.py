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

__all__ = ["SCHEMES", "make_driver"]

from .beamformer import ProposedDriver
from .baselines import MrtScaledDriver, LinearIgnorantDriver

# comparison order used by sweeps and output files
SCHEMES = ("proposed", "mrt_scaled", "linear_ignorant_capped")

_DRIVERS = {
    ProposedDriver.SCHEME: ProposedDriver,
    MrtScaledDriver.SCHEME: MrtScaledDriver,
    LinearIgnorantDriver.SCHEME: LinearIgnorantDriver,
}


def make_driver(scheme: str, settings=None, comm=None, verbosity: int = 0):
    """
    build the driver of a named beamforming scheme

    Parameters
    ----------
    scheme: str
        one of SCHEMES
    settings: BarrierSettings, optional
        solver settings for the schemes that run the interior point method
    """
    if scheme not in _DRIVERS:
        raise ValueError(f"unknown beamforming scheme {scheme!r}, expected one of {SCHEMES}")
    cls = _DRIVERS[scheme]
    if cls is MrtScaledDriver:
        return cls(comm=comm, verbosity=verbosity)
    return cls(settings=settings, comm=comm, verbosity=verbosity)
