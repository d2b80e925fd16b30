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

__all__ = ["evaluate_rate", "interference_bound", "estimate_interference"]

import numpy as np

from .pa import amplify
from .channel import as_generator
from .errors import DomainError


def evaluate_rate(gains, z, sigma2):
    """
    Achievable rate log2(1 + |gains^H z|^2 / sigma2) in bits/s/Hz.

    gains may be a real large-scale vector l paired with zbar, or a realized
    complex channel h paired with the complex PA output z.
    """
    if not sigma2 > 0.0:
        raise DomainError("noise power sigma2 must be > 0")
    amplitude = np.abs(np.vdot(np.asarray(gains), np.asarray(z)))
    return float(np.log2(1.0 + amplitude**2 / sigma2))


def interference_bound(l_st, z):
    """(l_st^T |z|)^2, an upper bound on |h_st^H z|^2 for any channel phase"""
    return float(np.dot(np.asarray(l_st, dtype=float), np.abs(z)) ** 2)


def estimate_interference(
    l_st, weights, pa, n_phase_samples=64, rng=None, theta0=0.0, return_stderr=False
):
    """
    Monte Carlo estimate of E_phi |h_st^H z|^2 over the small-scale phase of the
    satellite to terrestrial UT link.

    Parameters
    ----------
    l_st: array
        large-scale gain vector of the interfering link
    weights: BeamWeights
    pa: PaBank
    n_phase_samples: int
        number of phase draws, >= 1
    rng: int seed or numpy Generator
    theta0: float
        symbol phase
    return_stderr: bool
        also return the standard error of the estimate
    """
    if int(n_phase_samples) < 1:
        raise DomainError("n_phase_samples must be >= 1")
    rng = as_generator(rng)
    z = amplify(pa, weights, theta0)
    l_st = np.asarray(l_st, dtype=float)
    phis = rng.uniform(0.0, 2.0 * np.pi, size=int(n_phase_samples))
    # one row of realized channel per phase draw, h = l exp(-j phi)
    channels = l_st[None, :] * np.exp(-1j * phis)[:, None]
    samples = np.abs(channels.conj() @ z) ** 2
    mean = float(np.mean(samples))
    if not return_stderr:
        return mean
    if samples.shape[0] > 1:
        stderr = float(np.std(samples, ddof=1) / np.sqrt(samples.shape[0]))
    else:
        stderr = 0.0
    return mean, stderr
