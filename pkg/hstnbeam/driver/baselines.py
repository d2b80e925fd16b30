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

__all__ = [
    "BaselineKind",
    "mrt_scaled",
    "linear_ignorant_capped",
    "MrtScaledDriver",
    "LinearIgnorantDriver",
]

from enum import Enum
import numpy as np

from ..model.pa import am_am
from ..model.errors import DimensionError
from ..model.problem import BeamWeights, ProblemSpec
from ..optimization.interior_point import BarrierSolver
from ..optimization.power_constraint import QuadraticPowerConstraint
from ._beamforming_driver import BeamformingDriver

# grid used to find the first interference crossing of the MRT scale
MRT_SCAN_POINTS = 256
MRT_BISECT_RTOL = 1e-10
MRT_BISECT_MAX = 4000


class BaselineKind(str, Enum):
    MRT_SCALED = "mrt_scaled"
    LINEAR_IGNORANT_CAPPED = "linear_ignorant_capped"


def _phases(spec, h_ss):
    h_ss = np.atleast_1d(np.asarray(h_ss, dtype=complex))
    if h_ss.shape[0] != spec.M:
        raise DimensionError(
            f"channel of length {h_ss.shape[0]} does not match {spec.M} antennas"
        )
    return h_ss, -spec.theta0 + np.angle(h_ss)


def mrt_scaled(spec: ProblemSpec, h_ss) -> BeamWeights:
    """
    Maximum ratio transmission matched to the realized channel h_ss, scaled by
    one constant c to meet the sum power limit and the interference threshold
    evaluated on the true nonlinear PA output.

    The interference l_st^T A(c r) is not monotone in c once some antenna passes
    saturation, so c is the largest scale of the feasible interval that starts
    at c = 0: a uniform scan locates the first infeasible scale, then bisection
    narrows the crossing to a relative bracket width of 1e-10.
    """
    h_ss, theta = _phases(spec, h_ss)
    magnitude = np.abs(h_ss)
    norm = float(np.linalg.norm(magnitude))
    if norm == 0.0:
        return BeamWeights(np.zeros(spec.M), theta)
    direction = magnitude / norm
    sqrt_eps = np.sqrt(spec.interference_eps)

    def feasible(scale):
        return float(spec.l_st @ am_am(spec.pa, scale * direction)) <= sqrt_eps

    # power limit, unit-norm direction
    c_power = np.sqrt(spec.power_limit_P)
    active = direction > 0.0
    c_mono = float(np.min(spec.pa.r_sat[active] / direction[active]))
    if c_power <= c_mono and feasible(c_power):
        return BeamWeights(c_power * direction, theta)

    scan = np.linspace(0.0, c_power, MRT_SCAN_POINTS + 1)[1:]
    infeasible = [scale for scale in scan if not feasible(scale)]
    if not infeasible:
        return BeamWeights(c_power * direction, theta)

    high = infeasible[0]
    low = 0.0
    for _ in range(MRT_BISECT_MAX):
        if high - low <= MRT_BISECT_RTOL * high:
            break
        mid = 0.5 * (low + high)
        if feasible(mid):
            low = mid
        else:
            high = mid
    return BeamWeights(low * direction, theta)


def linear_ignorant_capped(
    spec: ProblemSpec, h_ss, solver: BarrierSolver = None
) -> BeamWeights:
    """
    Linear PA design: maximize l_ss^T r subject to l_st^T r <= sqrt(eps),
    sum r_i^2 <= P and r >= 0, as if the PA output were z = r. The amplitudes are
    passed to the nonlinear PA unchanged, without folding, and the phases match
    the realized channel without AM/PM compensation.
    """
    h_ss, theta = _phases(spec, h_ss)
    if solver is None:
        solver = BarrierSolver()
    result = solver.solve(
        c=spec.l_ss,
        a=spec.l_st,
        b=np.sqrt(spec.interference_eps),
        constraint=QuadraticPowerConstraint(spec.M, spec.power_limit_P),
    )
    return BeamWeights(np.maximum(result.x, 0.0), theta)


class MrtScaledDriver(BeamformingDriver):
    """scaled MRT with perfect knowledge of the realized channel"""

    SCHEME = BaselineKind.MRT_SCALED.value

    def design(self, spec: ProblemSpec, h_ss=None):
        return mrt_scaled(spec, h_ss), None


class LinearIgnorantDriver(BeamformingDriver):
    """
    Interference capped design that treats the PA as linear, its achieved
    interference is reported but not enforced
    """

    SCHEME = BaselineKind.LINEAR_IGNORANT_CAPPED.value

    def __init__(self, settings=None, comm=None, verbosity: int = 0):
        super().__init__(comm=comm, verbosity=verbosity)
        self.solver = BarrierSolver(settings, comm=comm, verbosity=verbosity)

    def design(self, spec: ProblemSpec, h_ss=None):
        return linear_ignorant_capped(spec, h_ss, self.solver), None
