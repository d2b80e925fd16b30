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
    "ProblemSpec",
    "BeamWeights",
    "SubstitutedPoint",
    "SolveStatus",
    "SolveReport",
]

from dataclasses import dataclass, field
from enum import Enum
import json
import numpy as np

from .pa import PaBank
from .channel import LargeScaleChannel, collapse
from .errors import DomainError, DimensionError, ConfigurationError


def _frozen_vector(values):
    arr = np.atleast_1d(np.asarray(values, dtype=float)).copy()
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class BeamWeights:
    """
    Beamforming weights w_i = r_i exp(j theta_i) split into amplitudes and phases.
    """

    amplitudes: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        r = _frozen_vector(self.amplitudes)
        theta = _frozen_vector(self.phases)
        if r.shape != theta.shape:
            raise DimensionError(
                f"{r.shape[0]} amplitudes do not match {theta.shape[0]} phases"
            )
        if not np.all(np.isfinite(r)) or np.any(r < 0.0):
            raise DomainError("beam amplitudes must be finite and >= 0")
        if not np.all(np.isfinite(theta)):
            raise DomainError("beam phases must be finite")
        object.__setattr__(self, "amplitudes", r)
        object.__setattr__(self, "phases", theta)

    @classmethod
    def zeros(cls, M: int):
        return cls(np.zeros(M), np.zeros(M))

    def __len__(self):
        return self.amplitudes.shape[0]

    @property
    def w(self):
        return self.amplitudes * np.exp(1j * self.phases)

    @property
    def input_power(self) -> float:
        return float(np.sum(self.amplitudes**2))

    def to_dict(self) -> dict:
        return {
            "amplitudes": self.amplitudes.tolist(),
            "phases": self.phases.tolist(),
        }

    @classmethod
    def from_dict(cls, data: dict):
        return cls(data["amplitudes"], data["phases"])


@dataclass(frozen=True, eq=False)
class SubstitutedPoint:
    """PA output amplitudes zbar, the variables of the convex substituted problem"""

    zbar: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "zbar", _frozen_vector(self.zbar))

    def __len__(self):
        return self.zbar.shape[0]

    def in_box(self, pa: PaBank, rtol=1e-12) -> bool:
        return bool(
            np.all(self.zbar >= 0.0) and np.all(self.zbar <= pa.z_max * (1.0 + rtol))
        )


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """
    One instance of the interference-constrained beamforming problem.

    Parameters
    ----------
    l_ss: array
        large-scale gain vector from the satellite to its own UT
    l_st: array
        large-scale gain vector from the satellite to the terrestrial UT
    pa: PaBank
        one Saleh amplifier per antenna
    power_limit_P: float
        sum input power limit sum(r_i^2) in watts
    interference_eps: float
        interference power threshold at the terrestrial UT in watts
    noise_sigma2: float
        noise power at the satellite UT in watts
    theta0: float
        symbol phase in radians

    The constructor only stores the values, call ``check`` for the list of
    violated invariants or ``validate`` to raise on them.
    """

    l_ss: np.ndarray
    l_st: np.ndarray
    pa: PaBank
    power_limit_P: float
    interference_eps: float
    noise_sigma2: float
    theta0: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "l_ss", _frozen_vector(self.l_ss))
        object.__setattr__(self, "l_st", _frozen_vector(self.l_st))

    @classmethod
    def from_channels(
        cls,
        ch_ss: LargeScaleChannel,
        ch_st: LargeScaleChannel,
        pa: PaBank,
        power_limit_P: float,
        interference_eps: float,
        noise_sigma2: float,
        theta0: float = 0.0,
    ):
        return cls(
            l_ss=collapse(ch_ss),
            l_st=collapse(ch_st),
            pa=pa,
            power_limit_P=power_limit_P,
            interference_eps=interference_eps,
            noise_sigma2=noise_sigma2,
            theta0=theta0,
        )

    @property
    def M(self) -> int:
        return self.l_ss.shape[0]

    def replace(self, **kwargs):
        """copy of the spec with some fields swapped out"""
        data = {
            "l_ss": self.l_ss,
            "l_st": self.l_st,
            "pa": self.pa,
            "power_limit_P": self.power_limit_P,
            "interference_eps": self.interference_eps,
            "noise_sigma2": self.noise_sigma2,
            "theta0": self.theta0,
        }
        data.update(kwargs)
        return ProblemSpec(**data)

    def check(self):
        """list every violated invariant, empty when the spec is valid"""
        messages = []
        for name in ("power_limit_P", "interference_eps", "noise_sigma2"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0.0):
                messages.append(f"{name} must be a finite value > 0, got {value}")
        if not np.isfinite(self.theta0):
            messages.append("theta0 must be finite")
        M = self.M
        if M < 1:
            messages.append("antenna count M must be >= 1")
        if self.l_st.shape[0] != M:
            messages.append(
                f"l_st has length {self.l_st.shape[0]} but l_ss has length {M}"
            )
        if len(self.pa) != M:
            messages.append(f"PA bank has length {len(self.pa)} but l_ss has length {M}")
        for name in ("l_ss", "l_st"):
            vec = getattr(self, name)
            if not np.all(np.isfinite(vec)) or np.any(vec < 0.0):
                messages.append(f"{name} entries must be finite and >= 0")
        return messages

    def validate(self):
        messages = self.check()
        if messages:
            raise ConfigurationError(messages)
        return self

    def to_dict(self) -> dict:
        return {
            "l_ss": self.l_ss.tolist(),
            "l_st": self.l_st.tolist(),
            "pa": self.pa.to_dict(),
            "power_limit_w": float(self.power_limit_P),
            "eps_w": float(self.interference_eps),
            "sigma2_w": float(self.noise_sigma2),
            "theta0": float(self.theta0),
        }


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    MAX_ITERATIONS = "max-iterations"
    INFEASIBLE_INPUT = "infeasible-input"


@dataclass(eq=False)
class SolveReport:
    """
    Outcome of one beamforming solve.

    ``objective`` is l_ss^T zbar*, ``rate_bps_hz`` the achievable rate
    log2(1 + objective^2/sigma^2), and ``kkt_residual`` the largest scaled
    violation of the KKT conditions of the substituted problem.
    """

    weights: BeamWeights
    zbar_star: SubstitutedPoint
    objective: float
    rate_bps_hz: float
    kkt_residual: float
    iterations: int
    status: SolveStatus
    interference_w: float = 0.0
    input_power_w: float = 0.0
    messages: list = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return self.status == SolveStatus.OPTIMAL

    def to_dict(self) -> dict:
        return {
            "status": SolveStatus(self.status).value,
            "objective": float(self.objective),
            "rate_bps_hz": float(self.rate_bps_hz),
            "kkt_residual": None
            if self.kkt_residual is None
            else float(self.kkt_residual),
            "iterations": int(self.iterations),
            "interference_w": float(self.interference_w),
            "input_power_w": float(self.input_power_w),
            "zbar": self.zbar_star.zbar.tolist(),
            "amplitudes": self.weights.amplitudes.tolist(),
            "phases": self.weights.phases.tolist(),
            "messages": list(self.messages),
        }

    def to_json(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent) + "\n"

    @classmethod
    def from_dict(cls, data: dict):
        return cls(
            weights=BeamWeights(data["amplitudes"], data["phases"]),
            zbar_star=SubstitutedPoint(data["zbar"]),
            objective=data["objective"],
            rate_bps_hz=data["rate_bps_hz"],
            kkt_residual=data["kkt_residual"],
            iterations=data["iterations"],
            status=SolveStatus(data["status"]),
            interference_w=data.get("interference_w", 0.0),
            input_power_w=data.get("input_power_w", 0.0),
            messages=list(data.get("messages", [])),
        )
