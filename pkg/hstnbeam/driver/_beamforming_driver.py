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

__all__ = ["BeamformingDriver", "BeamformingResult"]

from dataclasses import dataclass
import numpy as np

from ..model.pa import amplify
from ..model.link import evaluate_rate, interference_bound
from ..model.errors import DimensionError
from ..model.problem import BeamWeights, ProblemSpec, SolveReport


@dataclass(eq=False)
class BeamformingResult:
    """
    Beamformer output evaluated through the nonlinear PA bank.
    ``interference_w`` is the worst case (l_st^T |z|)^2 over the terrestrial link phase.
    """

    scheme: str
    weights: BeamWeights
    z: np.ndarray
    rate_bps_hz: float
    interference_w: float
    input_power_w: float
    report: SolveReport = None


class BeamformingDriver(object):
    """
    The beamforming driver base class holds the rate and interference evaluation
    shared by all schemes, subclasses only design the weights
    """

    SCHEME = None

    def __init__(self, comm=None, verbosity: int = 0):
        """
        Parameters
        ----------
        comm: mpi4py communicator or None
            only the root process prints
        verbosity: int
            0 silent, 1 summaries, 2 solver iterations
        """
        self.comm = comm
        self.verbosity = verbosity

    @property
    def root_proc(self) -> bool:
        return self.comm is None or self.comm.rank == 0

    @property
    def scheme(self) -> str:
        return self.SCHEME

    def _print(self, message, level=1):
        if self.root_proc and self.verbosity >= level:
            print(f"{self.scheme}: {message}", flush=True)

    def design(self, spec: ProblemSpec, h_ss=None):
        """
        Design the beamforming weights for one problem instance

        Returns
        -------
        (BeamWeights, SolveReport or None)
        """
        raise NotImplementedError

    def solve(self, spec: ProblemSpec, h_ss=None) -> BeamformingResult:
        """
        Design the weights and evaluate them through the nonlinear PA.

        Parameters
        ----------
        spec: ProblemSpec
        h_ss: complex array, optional
            realized satellite to satellite-UT channel, defaults to the
            large-scale vector l_ss with zero small-scale phase
        """
        if h_ss is None:
            h_ss = spec.l_ss.astype(complex)
        h_ss = np.atleast_1d(np.asarray(h_ss, dtype=complex))
        if h_ss.shape[0] != spec.M:
            raise DimensionError(
                f"channel of length {h_ss.shape[0]} does not match {spec.M} antennas"
            )
        weights, report = self.design(spec, h_ss)
        result = self.evaluate(spec, weights, h_ss, report=report)
        self._print(
            f"rate = {result.rate_bps_hz:.6f} b/s/Hz, interference = {result.interference_w:.6e} W",
            level=2,
        )
        return result

    def evaluate(self, spec: ProblemSpec, weights: BeamWeights, h_ss, report=None):
        """rate, interference and input power of given weights, through the PA bank"""
        z = amplify(spec.pa, weights, spec.theta0)
        return BeamformingResult(
            scheme=self.scheme,
            weights=weights,
            z=z,
            rate_bps_hz=evaluate_rate(h_ss, z, spec.noise_sigma2),
            interference_w=interference_bound(spec.l_st, z),
            input_power_w=weights.input_power,
            report=report,
        )
