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
    "LargeScaleChannel",
    "SmallScalePhase",
    "UtGeometry",
    "ChannelConfig",
    "beam_gain_pattern",
    "collapse",
    "realize",
    "sample_scenario",
    "as_generator",
]

from dataclasses import dataclass
import numbers
import numpy as np
from scipy import special

from ._units import db_to_linear, linear_to_db
from .errors import ConfigurationError, ParameterError

# u = BESSEL_U_3DB * sin(phi)/sin(phi_3db) puts the pattern 3 dB point at phi_3db
BESSEL_U_3DB = 2.07123


def as_generator(seed):
    """accept an int seed, a SeedSequence or a Generator"""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


@dataclass(frozen=True, eq=False)
class LargeScaleChannel:
    """
    Large-scale fading of one satellite link: path loss g, rain fade xi
    and the per-antenna beam gains b, all linear power quantities.
    """

    path_loss_g: float
    rain_fade_xi: float
    beam_gains_b: np.ndarray
    seed: int = None

    def __post_init__(self):
        gains = np.atleast_1d(np.asarray(self.beam_gains_b, dtype=float)).copy()
        gains.setflags(write=False)
        object.__setattr__(self, "beam_gains_b", gains)
        if not (np.isfinite(self.path_loss_g) and self.path_loss_g > 0.0):
            raise ParameterError("path loss g must be a finite value > 0")
        if not (np.isfinite(self.rain_fade_xi) and self.rain_fade_xi > 0.0):
            raise ParameterError("rain fade xi must be a finite value > 0")
        if not np.all(np.isfinite(gains)) or np.any(gains < 0.0):
            raise ParameterError("beam gains b must be finite and >= 0")

    def __len__(self):
        return self.beam_gains_b.shape[0]

    def __eq__(self, other):
        if not isinstance(other, LargeScaleChannel):
            return NotImplemented
        return (
            self.path_loss_g == other.path_loss_g
            and self.rain_fade_xi == other.rain_fade_xi
            and np.array_equal(self.beam_gains_b, other.beam_gains_b)
            and self.seed == other.seed
        )

    @property
    def gain_vector(self):
        return collapse(self)

    def to_dict(self) -> dict:
        return {
            "g_db": float(linear_to_db(self.path_loss_g)),
            "xi": float(self.rain_fade_xi),
            "beam_gains": self.beam_gains_b.tolist(),
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict):
        return cls(
            path_loss_g=float(db_to_linear(data["g_db"])),
            rain_fade_xi=float(data.get("xi", 1.0)),
            beam_gains_b=data["beam_gains"],
            seed=data.get("seed"),
        )


@dataclass(frozen=True)
class SmallScalePhase:
    """common phase of the antenna feeds on one link, radians in [0, 2pi)"""

    phi: float = 0.0

    @classmethod
    def draw(cls, rng):
        return cls(phi=float(as_generator(rng).uniform(0.0, 2.0 * np.pi)))


@dataclass(frozen=True, eq=False)
class UtGeometry:
    """
    Pointing geometry of one user terminal against the M satellite beams.

    Parameters
    ----------
    off_axis_angles: array
        angle in radians between each beam boresight and the UT direction
    angle_3db: float
        one-sided 3 dB beamwidth in radians
    peak_gain: float
        linear boresight power gain
    """

    off_axis_angles: np.ndarray
    angle_3db: float
    peak_gain: float = 1.0

    def __post_init__(self):
        angles = np.atleast_1d(np.asarray(self.off_axis_angles, dtype=float))
        object.__setattr__(self, "off_axis_angles", angles)
        if not np.all(np.isfinite(angles)) or np.any(angles < 0.0):
            raise ParameterError("off-axis angles must be finite and >= 0")
        if not self.angle_3db > 0.0:
            raise ParameterError("3 dB beamwidth must be > 0")
        if not self.peak_gain > 0.0:
            raise ParameterError("peak gain must be > 0")


def beam_gain_pattern(geom: UtGeometry):
    """
    Tapered-aperture multibeam pattern

        b(phi) = G * (J1(u)/(2u) + 36*J3(u)/u^3)^2,  u = 2.07123 sin(phi)/sin(phi_3db)

    The bracket tends to 1/4 + 36/48 = 1 as u -> 0, so b(0) = G.
    """
    u = BESSEL_U_3DB * np.abs(np.sin(geom.off_axis_angles)) / np.sin(geom.angle_3db)
    small = u < 1e-8
    u_safe = np.where(small, 1.0, u)
    bracket = special.jv(1, u_safe) / (2.0 * u_safe) + 36.0 * special.jv(
        3, u_safe
    ) / u_safe**3
    bracket = np.where(small, 1.0, bracket)
    return geom.peak_gain * bracket**2


def collapse(ch: LargeScaleChannel):
    """large-scale gain vector l_i = sqrt(g * xi * b_i)"""
    return np.sqrt(ch.path_loss_g * ch.rain_fade_xi * ch.beam_gains_b)


def realize(ch: LargeScaleChannel, phi):
    """complex channel h = l * exp(-j phi) for a small-scale phase draw"""
    if isinstance(phi, SmallScalePhase):
        phi = phi.phi
    return collapse(ch) * np.exp(-1j * phi)


@dataclass
class ChannelConfig:
    """
    Scenario generator settings for the two satellite links.

    Parameters
    ----------
    g_db: float
        path loss in dB, same on both links
    xi_db_mean, xi_db_std: float
        rain fade drawn lognormally as 10^(N(mean, std)/10), std = 0 fixes it
    layout: str
        "cone" draws each beam's off-axis angle uniformly in [0, cone],
        "lattice" places beam centers on a square grid 2*angle_3db apart and
        drops the UT uniformly inside the grid
    peak_gain_dbi: float
        boresight beam gain
    angle_3db_deg: float
        one-sided 3 dB beamwidth in degrees
    cone_deg: float
        off-axis cone half-angle for the "cone" layout in degrees
    """

    LAYOUTS = ("cone", "lattice")

    g_db: float = -210.0
    xi_db_mean: float = 0.0
    xi_db_std: float = 0.0
    layout: str = "cone"
    peak_gain_dbi: float = 60.0
    angle_3db_deg: float = 0.2
    cone_deg: float = 0.6

    def check(self):
        """list every invalid setting, empty when the config is clean"""
        messages = []
        values = {}
        for name in (
            "g_db",
            "xi_db_mean",
            "xi_db_std",
            "peak_gain_dbi",
            "angle_3db_deg",
            "cone_deg",
        ):
            value = getattr(self, name)
            if not isinstance(value, numbers.Real) or isinstance(value, bool):
                messages.append(f"channel {name} must be a number, got {value!r}")
            elif not np.isfinite(value):
                messages.append(f"channel {name} must be finite")
            else:
                values[name] = value
        if values.get("xi_db_std", 0.0) < 0.0:
            messages.append("channel xi_db_std must be >= 0")
        if values.get("angle_3db_deg", 1.0) <= 0.0:
            messages.append("channel angle_3db_deg must be > 0")
        if values.get("cone_deg", 0.0) < 0.0:
            messages.append("channel cone_deg must be >= 0")
        if self.layout not in self.LAYOUTS:
            messages.append(
                f"channel layout must be one of {list(self.LAYOUTS)}, got {self.layout!r}"
            )
        return messages

    def to_dict(self) -> dict:
        return {
            "g_db": self.g_db,
            "xi_db_mean": self.xi_db_mean,
            "xi_db_std": self.xi_db_std,
            "layout": self.layout,
            "peak_gain_dbi": self.peak_gain_dbi,
            "angle_3db_deg": self.angle_3db_deg,
            "cone_deg": self.cone_deg,
        }

    @classmethod
    def from_dict(cls, data: dict):
        known = cls().to_dict().keys()
        unknown = [key for key in data if key not in known]
        if unknown:
            raise ConfigurationError(
                [f"unknown channel key {key!r}" for key in sorted(unknown)]
            )
        return cls(**data)

    def _draw_angles(self, rng, M):
        cone = np.deg2rad(self.cone_deg)
        if self.layout == "cone":
            return rng.uniform(0.0, cone, size=M)

        # square lattice of beam centers in the angular plane
        spacing = 2.0 * np.deg2rad(self.angle_3db_deg)
        nside = int(np.ceil(np.sqrt(M)))
        index = np.arange(M)
        centers = spacing * np.column_stack([index % nside, index // nside])
        low = centers.min(axis=0)
        high = centers.max(axis=0)
        ut = rng.uniform(low, high)
        return np.hypot(centers[:, 0] - ut[0], centers[:, 1] - ut[1])

    def _draw_link(self, rng, M, seed):
        geom = UtGeometry(
            off_axis_angles=self._draw_angles(rng, M),
            angle_3db=np.deg2rad(self.angle_3db_deg),
            peak_gain=db_to_linear(self.peak_gain_dbi),
        )
        if self.xi_db_std > 0.0:
            xi = db_to_linear(rng.normal(self.xi_db_mean, self.xi_db_std))
        else:
            xi = db_to_linear(self.xi_db_mean)
        return LargeScaleChannel(
            path_loss_g=db_to_linear(self.g_db),
            rain_fade_xi=xi,
            beam_gains_b=beam_gain_pattern(geom),
            seed=seed,
        )


def sample_scenario(seed, M: int, config: ChannelConfig = None):
    """
    Draw the satellite-to-satellite-UT and satellite-to-terrestrial-UT
    large-scale channels, with independent UT locations on each link.

    Parameters
    ----------
    seed: int or numpy Generator
        an int seed is stored on both channels for reproducible re-runs
    M: int
        number of satellite antennas (beams)
    config: ChannelConfig

    Returns
    -------
    (LargeScaleChannel, LargeScaleChannel) for the s->s and s->t links
    """
    if config is None:
        config = ChannelConfig()
    messages = config.check()
    if int(M) != M or M < 1:
        messages.append("antenna count M must be an integer >= 1")
    if messages:
        raise ConfigurationError(messages)

    stored_seed = int(seed) if isinstance(seed, (int, np.integer)) else None
    rng = as_generator(seed)
    ch_ss = config._draw_link(rng, int(M), stored_seed)
    ch_st = config._draw_link(rng, int(M), stored_seed)
    return ch_ss, ch_st
