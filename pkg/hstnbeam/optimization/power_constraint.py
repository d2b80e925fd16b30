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
    "power_constraint_f",
    "power_constraint_gradient",
    "power_constraint_hessian_diag",
    "PowerConstraint",
    "QuadraticPowerConstraint",
]

import numpy as np

from ..model.pa import am_am, am_am_inverse
from ..model.errors import DomainError, SingularDerivativeError, DimensionError


def _zbar_values(pa, zbar):
    values = getattr(zbar, "zbar", zbar)
    values = np.atleast_1d(np.asarray(values, dtype=float))
    if values.shape[0] != len(pa):
        raise DimensionError(
            f"zbar of length {values.shape[0]} does not match PA bank of length {len(pa)}"
        )
    return values


def _interior_inverse(pa, zbar):
    """nu(zbar) where zbar must stay strictly below z_max"""
    zbar = _zbar_values(pa, zbar)
    if np.any(zbar < 0.0):
        raise DomainError("zbar must be >= 0")
    if np.any(zbar >= pa.z_max):
        raise SingularDerivativeError(
            "power constraint derivatives are unbounded at zbar = alpha/(2 sqrt(beta))"
        )
    return np.asarray(am_am_inverse(pa, zbar))


def power_constraint_f(pa, zbar, P):
    """
    f(zbar) = sum_i nu_i(zbar_i)^2 - P, where nu_i is the monotone-region
    inverse of the AM/AM response of amplifier i.
    """
    nu = np.asarray(am_am_inverse(pa, _zbar_values(pa, zbar)))
    return float(np.sum(nu**2) - P)


def power_constraint_gradient(pa, zbar):
    """
    df/dzbar_i = 2 nu (1 + beta nu^2)^2 / (alpha (1 - beta nu^2)),
    i.e. 2 nu times the derivative of the inverse 1/A'(nu).
    """
    nu = _interior_inverse(pa, zbar)
    s = pa.beta * nu**2
    return 2.0 * nu * (1.0 + s) ** 2 / (pa.alpha * (1.0 - s))


def power_constraint_hessian_diag(pa, zbar):
    """
    d2f/dzbar_i^2 = 2 (1 + s)^3 (1 + 6 s - 3 s^2) / (alpha^2 (1 - s)^3),  s = beta nu^2.
    The Hessian is diagonal, f is separable.
    """
    nu = _interior_inverse(pa, zbar)
    s = pa.beta * nu**2
    return (
        2.0
        * (1.0 + s) ** 3
        * (1.0 + 6.0 * s - 3.0 * s**2)
        / (pa.alpha**2 * (1.0 - s) ** 3)
    )


class PowerConstraint:
    """
    Sum input power constraint of the substituted problem written in the PA
    output amplitudes, g(zbar) = sum nu_i(zbar_i)^2 - P <= 0 on 0 <= zbar <= z_max.
    """

    def __init__(self, pa, power_limit):
        self.pa = pa
        self.power_limit = float(power_limit)

    @property
    def scale(self) -> float:
        return self.power_limit

    @property
    def upper(self):
        return np.asarray(self.pa.z_max, dtype=float)

    def start_point(self, M):
        """per-antenna output of an equal power split, capped at saturation"""
        r_eq = np.minimum(np.sqrt(self.power_limit / M), self.pa.r_sat)
        return np.asarray(am_am(self.pa, r_eq), dtype=float)

    def value(self, x):
        return power_constraint_f(self.pa, x, self.power_limit)

    def gradient(self, x):
        return power_constraint_gradient(self.pa, x)

    def hessian_diag(self, x):
        return power_constraint_hessian_diag(self.pa, x)


class QuadraticPowerConstraint:
    """
    g(r) = sum r_i^2 - P <= 0, the power constraint of a linear PA design
    where no per-antenna upper bound applies.
    """

    def __init__(self, M, power_limit):
        self.M = int(M)
        self.power_limit = float(power_limit)

    @property
    def scale(self) -> float:
        return self.power_limit

    @property
    def upper(self):
        return np.full(self.M, np.inf)

    def start_point(self, M):
        return np.full(M, np.sqrt(self.power_limit / M))

    def value(self, x):
        return float(np.sum(np.asarray(x) ** 2) - self.power_limit)

    def gradient(self, x):
        return 2.0 * np.asarray(x, dtype=float)

    def hessian_diag(self, x):
        return np.full(np.shape(x), 2.0)
