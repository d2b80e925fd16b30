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

__all__ = ["SalehDistribution", "draw_saleh_bank", "ExperimentConfig", "SWEEP_VARIABLES"]

from dataclasses import dataclass, field
import numpy as np

from ..model._units import dbm_to_watts, dbw_to_watts
from ..model.channel import ChannelConfig, as_generator
from ..model.errors import ConfigurationError
from ..model.pa import PaBank, SalehParams
from ..driver.schemes import SCHEMES

SWEEP_VARIABLES = ("eps_dbm", "power_dbw")


@dataclass
class SalehDistribution:
    """
    Per-chain Saleh parameters drawn as base + jitter * U[0, 1] for each of
    alpha, beta, alpha_phi and beta_phi independently.
    """

    base: SalehParams = field(default_factory=SalehParams.default)
    jitter: tuple = (0.1, 0.1, 1.0, 1.0)

    def check(self):
        messages = []
        jitter = np.asarray(self.jitter, dtype=float)
        if jitter.shape != (4,):
            messages.append("saleh jitter needs 4 entries (alpha, beta, alpha_phi, beta_phi)")
        elif not np.all(np.isfinite(jitter)) or np.any(jitter < 0.0):
            messages.append("saleh jitter entries must be finite and >= 0")
        return messages

    def draw(self, rng, M):
        return draw_saleh_bank(rng, M, self.base, self.jitter)

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "jitter": dict(zip(("alpha", "beta", "alpha_phi", "beta_phi"), map(float, self.jitter))),
        }


def draw_saleh_bank(seed, M: int, base: SalehParams = None, jitter=(0.1, 0.1, 1.0, 1.0)):
    """
    Draw M independent Saleh amplifiers,
    alpha = base.alpha + jitter[0] * u, beta = base.beta + jitter[1] * v, ...
    with u, v uniform on [0, 1].

    Parameters
    ----------
    seed: int or numpy Generator
    M: int
    base: SalehParams
    jitter: sequence of 4 floats >= 0
    """
    if base is None:
        base = SalehParams.default()
    jitter = np.asarray(jitter, dtype=float)
    rng = as_generator(seed)
    u = rng.uniform(0.0, 1.0, size=(4, M))
    return PaBank(
        alpha=base.alpha + jitter[0] * u[0],
        beta=base.beta + jitter[1] * u[1],
        alpha_phi=base.alpha_phi + jitter[2] * u[2],
        beta_phi=base.beta_phi + jitter[3] * u[3],
    )


@dataclass
class ExperimentConfig:
    """
    Monte Carlo sweep settings.

    Parameters
    ----------
    name: str
        label carried into output files
    M: int
        number of satellite antennas
    trials: int
        Monte Carlo repetitions per sweep value
    sweep_variable: str
        "eps_dbm" sweeps the interference threshold, "power_dbw" the power limit
    sweep_values: list
        ascending values in the unit of the sweep variable
    power_limit_w: float
        sum input power limit, used when the power is not swept
    eps_w: float
        interference threshold, used when it is not swept
    sigma2_w: float
        noise power at the satellite UT
    saleh: SalehDistribution
    channel: ChannelConfig
    seed: int
        root of the per-trial seed sequence
    theta0: float
        symbol phase
    schemes: tuple
        beamforming schemes compared on every trial
    n_phase_samples: int
        phase draws of the Monte Carlo interference estimate
    """

    name: str = "custom"
    M: int = 16
    trials: int = 200
    sweep_variable: str = "eps_dbm"
    sweep_values: list = field(default_factory=list)
    power_limit_w: float = float(dbw_to_watts(12.0))
    eps_w: float = float(dbm_to_watts(-107.0))
    sigma2_w: float = float(dbm_to_watts(-107.0))
    saleh: SalehDistribution = field(default_factory=SalehDistribution)
    channel: ChannelConfig = field(default_factory=ChannelConfig)
    seed: int = 0
    theta0: float = 0.0
    schemes: tuple = SCHEMES
    n_phase_samples: int = 16

    @classmethod
    def fig3(cls, trials=200, seed=3):
        """P = 12 dBw fixed, interference threshold swept over [-120, -95] dBm"""
        return cls(
            name="fig3",
            trials=trials,
            sweep_variable="eps_dbm",
            sweep_values=[-120.0, -115.0, -110.0, -105.0, -100.0, -95.0],
            power_limit_w=float(dbw_to_watts(12.0)),
            seed=seed,
        )

    @classmethod
    def fig4(cls, trials=200, seed=4):
        """eps = -107 dBm fixed, power limit swept over [-10, 20] dBw"""
        return cls(
            name="fig4",
            trials=trials,
            sweep_variable="power_dbw",
            sweep_values=[-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0],
            eps_w=float(dbm_to_watts(-107.0)),
            seed=seed,
        )

    @classmethod
    def fig5(cls, trials=200, seed=5):
        """eps = -107 dBm fixed, low power regime -50 to -10 dBw"""
        return cls(
            name="fig5",
            trials=trials,
            sweep_variable="power_dbw",
            sweep_values=[-50.0, -45.0, -40.0, -35.0, -30.0, -25.0, -20.0, -15.0, -10.0],
            eps_w=float(dbm_to_watts(-107.0)),
            seed=seed,
        )

    @classmethod
    def preset(cls, name, **kwargs):
        presets = {"fig3": cls.fig3, "fig4": cls.fig4, "fig5": cls.fig5}
        if name not in presets:
            raise ConfigurationError(f"unknown preset {name!r}, expected one of {sorted(presets)}")
        return presets[name](**kwargs)

    def set_trials(self, trials):
        """
        trials setter with method cascading
        """
        self.trials = trials
        return self

    def set_seed(self, seed):
        """
        seed setter with method cascading
        """
        self.seed = seed
        return self

    def operating_point(self, value):
        """(P, eps) in watts for one sweep value"""
        if self.sweep_variable == "eps_dbm":
            return self.power_limit_w, float(dbm_to_watts(value))
        return float(dbw_to_watts(value)), self.eps_w

    def check(self):
        """list every violated setting, empty when the config is clean"""
        messages = []
        if not isinstance(self.trials, (int, np.integer)) or self.trials < 1:
            messages.append("trials must be ≥ 1")
        if not isinstance(self.M, (int, np.integer)) or self.M < 1:
            messages.append("M must be an integer ≥ 1")
        if self.sweep_variable not in SWEEP_VARIABLES:
            messages.append(
                f"sweep variable must be one of {list(SWEEP_VARIABLES)}, got {self.sweep_variable!r}"
            )
        values = np.asarray(self.sweep_values, dtype=float)
        if values.size == 0:
            messages.append("sweep values must not be empty")
        elif not np.all(np.isfinite(values)):
            messages.append("sweep values must be finite")
        elif np.any(np.diff(values) <= 0.0):
            messages.append("sweep values must be sorted ascending without repeats")
        for name in ("power_limit_w", "eps_w", "sigma2_w"):
            value = getattr(self, name)
            if not (np.isfinite(value) and value > 0.0):
                messages.append(f"{name} must be a finite value > 0, got {value}")
        if not np.isfinite(self.theta0):
            messages.append("theta0 must be finite")
        if not isinstance(self.n_phase_samples, (int, np.integer)) or self.n_phase_samples < 1:
            messages.append("n_phase_samples must be ≥ 1")
        unknown = [scheme for scheme in self.schemes if scheme not in SCHEMES]
        if unknown or len(self.schemes) == 0:
            messages.append(f"schemes must be a non-empty subset of {list(SCHEMES)}")
        messages += self.saleh.check()
        messages += self.channel.check()
        return messages

    def validate(self):
        messages = self.check()
        if messages:
            raise ConfigurationError(messages)
        return self

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "M": self.M,
            "trials": self.trials,
            "seed": self.seed,
            "sweep": {"variable": self.sweep_variable, "values": list(self.sweep_values)},
            "power_limit_w": self.power_limit_w,
            "eps_w": self.eps_w,
            "sigma2_w": self.sigma2_w,
            "theta0": self.theta0,
            "saleh": self.saleh.to_dict(),
            "channel": self.channel.to_dict(),
            "schemes": list(self.schemes),
            "n_phase_samples": self.n_phase_samples,
        }
