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
    "SalehParams",
    "PaBank",
    "am_am",
    "am_pm",
    "am_am_derivative",
    "amplify",
    "saturation_input",
    "max_output",
    "curve_grid",
    "am_am_inverse",
    "pa_curve",
]

from dataclasses import dataclass
import numpy as np

from .errors import (
    DomainError,
    InfeasibleAmplitudeError,
    ParameterError,
    DimensionError,
    ConfigurationError,
)

# relative slack accepted on zbar above z_max before it counts as infeasible
ZMAX_TOL = 1e-12


@dataclass(frozen=True)
class SalehParams:
    """
    AM/AM and AM/PM coefficients of one Saleh model power amplifier

        A(r)   = alpha * r / (1 + beta * r^2)
        Phi(r) = alpha_phi * r^2 / (1 + beta_phi * r^2)

    Parameters
    ----------
    alpha: float
        AM/AM numerator coefficient, > 0
    beta: float
        AM/AM denominator coefficient in 1/amplitude^2, > 0
    alpha_phi: float
        AM/PM numerator coefficient in rad/amplitude^2, any real value
    beta_phi: float
        AM/PM denominator coefficient in 1/amplitude^2, >= 0
    """

    alpha: float
    beta: float
    alpha_phi: float = 0.0
    beta_phi: float = 0.0

    def __post_init__(self):
        _check_coefficients(self.alpha, self.beta, self.alpha_phi, self.beta_phi)

    @classmethod
    def default(cls):
        """base values of the Monte Carlo PA draws"""
        return cls(alpha=0.9445, beta=0.5138, alpha_phi=4.0033, beta_phi=9.1040)

    @property
    def r_sat(self) -> float:
        return float(np.sqrt(1.0 / self.beta))

    @property
    def z_max(self) -> float:
        return float(self.alpha / (2.0 * np.sqrt(self.beta)))

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "beta": self.beta,
            "alpha_phi": self.alpha_phi,
            "beta_phi": self.beta_phi,
        }

    @classmethod
    def from_dict(cls, data: dict):
        return cls(
            alpha=float(data["alpha"]),
            beta=float(data["beta"]),
            alpha_phi=float(data.get("alpha_phi", 0.0)),
            beta_phi=float(data.get("beta_phi", 0.0)),
        )


class PaBank:
    """
    Ordered bank of M Saleh amplifiers, one per RF chain.
    Coefficients are stored as length-M arrays so every PA operation in this
    module vectorizes over the bank.
    """

    def __init__(self, alpha, beta, alpha_phi=None, beta_phi=None):
        alpha = np.atleast_1d(np.asarray(alpha, dtype=float)).copy()
        beta = np.atleast_1d(np.asarray(beta, dtype=float)).copy()
        M = alpha.shape[0]
        alpha_phi = (
            np.zeros(M)
            if alpha_phi is None
            else np.atleast_1d(np.asarray(alpha_phi, dtype=float)).copy()
        )
        beta_phi = (
            np.zeros(M)
            if beta_phi is None
            else np.atleast_1d(np.asarray(beta_phi, dtype=float)).copy()
        )
        for name, arr in (("beta", beta), ("alpha_phi", alpha_phi), ("beta_phi", beta_phi)):
            if arr.shape != alpha.shape:
                raise DimensionError(
                    f"PA bank {name} has length {arr.shape[0]}, expected {M}"
                )
        if M < 1:
            raise DimensionError("PA bank needs at least one amplifier")
        _check_coefficients(alpha, beta, alpha_phi, beta_phi)

        for arr in (alpha, beta, alpha_phi, beta_phi):
            arr.setflags(write=False)
        self.alpha = alpha
        self.beta = beta
        self.alpha_phi = alpha_phi
        self.beta_phi = beta_phi

    @classmethod
    def from_params(cls, params):
        """build a bank from a sequence of SalehParams"""
        params = list(params)
        return cls(
            alpha=[p.alpha for p in params],
            beta=[p.beta for p in params],
            alpha_phi=[p.alpha_phi for p in params],
            beta_phi=[p.beta_phi for p in params],
        )

    @classmethod
    def uniform(cls, params: SalehParams, M: int):
        """M identical amplifiers"""
        return cls.from_params([params] * M)

    def __len__(self):
        return self.alpha.shape[0]

    def __getitem__(self, index) -> SalehParams:
        return SalehParams(
            alpha=float(self.alpha[index]),
            beta=float(self.beta[index]),
            alpha_phi=float(self.alpha_phi[index]),
            beta_phi=float(self.beta_phi[index]),
        )

    def __eq__(self, other):
        if not isinstance(other, PaBank):
            return NotImplemented
        return all(
            np.array_equal(a, b)
            for a, b in zip(
                (self.alpha, self.beta, self.alpha_phi, self.beta_phi),
                (other.alpha, other.beta, other.alpha_phi, other.beta_phi),
            )
        )

    @property
    def params(self):
        return [self[i] for i in range(len(self))]

    @property
    def r_sat(self):
        return np.sqrt(1.0 / self.beta)

    @property
    def z_max(self):
        return self.alpha / (2.0 * np.sqrt(self.beta))

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.tolist(),
            "beta": self.beta.tolist(),
            "alpha_phi": self.alpha_phi.tolist(),
            "beta_phi": self.beta_phi.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict):
        return cls(
            alpha=data["alpha"],
            beta=data["beta"],
            alpha_phi=data.get("alpha_phi"),
            beta_phi=data.get("beta_phi"),
        )

    def __repr__(self):
        return f"PaBank(M={len(self)})"


def _check_coefficients(alpha, beta, alpha_phi, beta_phi):
    for name, value in (
        ("alpha", alpha),
        ("beta", beta),
        ("alpha_phi", alpha_phi),
        ("beta_phi", beta_phi),
    ):
        if not np.all(np.isfinite(value)):
            raise ParameterError(f"Saleh parameter {name} must be finite")
    if np.any(np.asarray(alpha) <= 0.0):
        raise ParameterError("Saleh parameter alpha must be > 0")
    if np.any(np.asarray(beta) <= 0.0):
        raise ParameterError("Saleh parameter beta must be > 0")
    if np.any(np.asarray(beta_phi) < 0.0):
        raise ParameterError("Saleh parameter beta_phi must be >= 0")


def _as_output(value):
    return float(value) if np.ndim(value) == 0 else value


def _check_amplitude(r, name="r"):
    r = np.asarray(r, dtype=float)
    if not np.all(np.isfinite(r)):
        raise DomainError(f"input amplitude {name} must be finite")
    if np.any(r < 0.0):
        raise DomainError(f"input amplitude {name} must be >= 0")
    return r


def am_am(p, r):
    """
    Saleh AM/AM response alpha*r/(1 + beta*r^2).
    p is a SalehParams or a PaBank (elementwise over the bank).
    """
    r = _check_amplitude(r)
    return _as_output(p.alpha * r / (1.0 + p.beta * r**2))


def am_pm(p, r):
    """Saleh AM/PM phase distortion alpha_phi*r^2/(1 + beta_phi*r^2) in radians"""
    r = _check_amplitude(r)
    r2 = r**2
    return _as_output(p.alpha_phi * r2 / (1.0 + p.beta_phi * r2))


def am_am_derivative(p, r):
    """dA/dr = alpha*(1 - beta*r^2)/(1 + beta*r^2)^2"""
    r = _check_amplitude(r)
    br2 = p.beta * r**2
    return _as_output(p.alpha * (1.0 - br2) / (1.0 + br2) ** 2)


def saturation_input(p):
    """input amplitude sqrt(1/beta) where the AM/AM output peaks"""
    beta = np.asarray(p.beta, dtype=float)
    if np.any(~np.isfinite(beta)) or np.any(beta <= 0.0):
        raise ParameterError("saturation input requires beta > 0")
    return _as_output(np.sqrt(1.0 / beta))


def max_output(p):
    """peak AM/AM output alpha/(2 sqrt(beta)) reached at the saturation input"""
    return _as_output(p.alpha / (2.0 * np.sqrt(p.beta)))


def am_am_inverse(p, zbar):
    """
    Inverse of the AM/AM response on the monotone region [0, r_sat].

    Uses the rationalized root 2z/(alpha + sqrt(alpha^2 - 4 beta z^2)), equal to
    (alpha - sqrt(alpha^2 - 4 beta z^2))/(2 beta z) but without the 0/0 at z = 0.

    Parameters
    ----------
    p: SalehParams or PaBank
    zbar: float or array
        output amplitudes in [0, z_max]; values up to z_max*(1+1e-12) are clamped

    Returns
    -------
    input amplitude(s) in [0, r_sat]
    """
    zbar = np.asarray(zbar, dtype=float)
    if not np.all(np.isfinite(zbar)):
        raise DomainError("output amplitude zbar must be finite")
    if np.any(zbar < 0.0):
        raise DomainError("output amplitude zbar must be >= 0")
    z_max = np.asarray(p.alpha / (2.0 * np.sqrt(p.beta)))
    if np.any(zbar > z_max * (1.0 + ZMAX_TOL)):
        raise InfeasibleAmplitudeError(
            "output amplitude zbar exceeds the PA maximum output alpha/(2 sqrt(beta))"
        )
    zbar = np.minimum(zbar, z_max)

    # factored discriminant, clamped at the saturation endpoint
    two_sb_z = 2.0 * np.sqrt(p.beta) * zbar
    disc = np.maximum((p.alpha - two_sb_z) * (p.alpha + two_sb_z), 0.0)
    r = 2.0 * zbar / (p.alpha + np.sqrt(disc))
    return _as_output(np.minimum(r, np.sqrt(1.0 / np.asarray(p.beta))))


def amplify(bank: PaBank, weights, theta0=0.0):
    """
    Pass beamforming weights through the PA bank.

        z_i = A_i(r_i) * exp(j*(theta0 + theta_i + Phi_i(r_i)))

    Parameters
    ----------
    bank: PaBank
    weights: BeamWeights
        amplitudes r and phases theta, both of length M
    theta0: float
        symbol (carrier) phase in radians

    Returns
    -------
    complex numpy array of length M
    """
    r = np.atleast_1d(np.asarray(weights.amplitudes, dtype=float))
    theta = np.atleast_1d(np.asarray(weights.phases, dtype=float))
    M = len(bank)
    if r.shape[0] != M or theta.shape[0] != M:
        raise DimensionError(
            f"beam weights of length {r.shape[0]} do not match PA bank of length {M}"
        )
    magnitude = am_am(bank, r)
    phase = theta0 + theta + am_pm(bank, r)
    return magnitude * np.exp(1j * phase)


def curve_grid(r_min=0.0, r_max=3.0, step=0.01):
    """
    Uniform amplitude grid from r_min to r_max inclusive. The step must divide
    r_max - r_min up to a relative 1e-9, the grid then holds
    round((r_max - r_min)/step) + 1 points.
    """
    if not (np.isfinite(r_min) and np.isfinite(r_max) and np.isfinite(step)):
        raise ConfigurationError("pa curve range must be finite")
    if r_min < 0.0:
        raise ConfigurationError("pa curve r_min must be >= 0")
    if step <= 0.0:
        raise ConfigurationError("pa curve step must be > 0")
    if r_max <= r_min:
        raise ConfigurationError("pa curve r_max must be greater than r_min")
    intervals = (r_max - r_min) / step
    npts = int(round(intervals)) + 1
    if npts < 2:
        raise ConfigurationError("pa curve range must hold at least 2 sample points")
    if abs(intervals - (npts - 1)) > 1e-9 * (npts - 1):
        raise ConfigurationError(
            f"pa curve step {step} does not divide the range [{r_min}, {r_max}]"
        )
    return np.linspace(r_min, r_max, npts)


def pa_curve(p, r_min=0.0, r_max=3.0, step=0.01):
    """
    Sample the AM/AM and AM/PM responses on the uniform grid of curve_grid.

    Returns
    -------
    r, am_am(r), am_pm(r) as numpy arrays
    """
    r = curve_grid(r_min, r_max, step)
    return r, am_am(p, r), am_pm(p, r)
