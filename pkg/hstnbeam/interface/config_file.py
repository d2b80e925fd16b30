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
    "read_document",
    "parse_quantity",
    "experiment_from_dict",
    "problem_from_dict",
    "curve_from_dict",
    "CURVE_DEFAULTS",
    "load_experiment",
    "load_problem",
    "validate_document",
]

import json
import numbers
import numpy as np

from ..model._units import dbm_to_watts, dbw_to_watts
from ..model.channel import ChannelConfig, sample_scenario, SmallScalePhase
from ..model.errors import ConfigurationError, HstnError
from ..model.pa import PaBank, SalehParams, curve_grid
from ..model.problem import ProblemSpec
from ..sim.experiment import ExperimentConfig, SalehDistribution, draw_saleh_bank

# each physical quantity may be given in exactly one of these units
_UNIT_SUFFIXES = {"_w": float, "_dbw": dbw_to_watts, "_dbm": dbm_to_watts}

_EXPERIMENT_KEYS = {
    "name",
    "M",
    "trials",
    "seed",
    "sweep",
    "theta0",
    "saleh",
    "channel",
    "schemes",
    "n_phase_samples",
}
_PROBLEM_KEYS = {"M", "seed", "theta0", "phi_s", "l_ss", "l_st", "pa", "saleh", "channel"}
_QUANTITY_STEMS = ("power_limit", "eps", "sigma2")

# pa-curve documents hold only these keys, missing ones take the default
CURVE_DEFAULTS = dict(SalehParams.default().to_dict(), r_min=0.0, r_max=3.0, step=0.01)


def read_document(path) -> dict:
    """load a JSON config document, any read or parse failure is a configuration error"""
    try:
        with open(path, "r") as fp:
            data = json.load(fp)
    except OSError as err:
        raise ConfigurationError(f"cannot read config file {path}: {err.strerror}")
    except json.JSONDecodeError as err:
        raise ConfigurationError(f"config file {path} is not valid JSON: {err}")
    if not isinstance(data, dict):
        raise ConfigurationError(f"config file {path} must hold a JSON object")
    return data


def _is_number(value):
    return isinstance(value, numbers.Real) and not isinstance(value, bool)


def _is_integer(value):
    return isinstance(value, numbers.Integral) and not isinstance(value, bool)


def parse_quantity(data: dict, stem: str, messages: list, default=None):
    """
    Read one physical quantity given under a unit-suffixed key (stem_w, stem_dbw
    or stem_dbm) and convert it to watts. Problems are appended to messages.
    """
    present = [stem + suffix for suffix in _UNIT_SUFFIXES if stem + suffix in data]
    if len(present) > 1:
        messages.append(f"give only one of {present}")
        return default
    if not present:
        if default is None:
            messages.append(f"missing {stem}_w, {stem}_dbw or {stem}_dbm")
        return default
    key = present[0]
    value = data[key]
    if not _is_number(value) or not np.isfinite(value):
        messages.append(f"{key} must be a finite number, got {value!r}")
        return default
    if key.endswith("_w") and value <= 0.0:
        messages.append(f"{key} must be > 0, got {value}")
        return default
    return float(_UNIT_SUFFIXES[key[len(stem):]](value))


def _unknown_keys(data, known, messages, where="config"):
    quantity_keys = {stem + suffix for stem in _QUANTITY_STEMS for suffix in _UNIT_SUFFIXES}
    for key in sorted(data):
        if key not in known and key not in quantity_keys:
            messages.append(f"unknown {where} key {key!r}")


def _saleh_from_dict(data, messages):
    if data is None:
        return SalehDistribution()
    base = SalehParams.default()
    jitter = SalehDistribution().jitter
    try:
        if "base" in data:
            base = SalehParams.from_dict(data["base"])
        if "jitter" in data:
            raw = data["jitter"]
            if isinstance(raw, dict):
                jitter = tuple(
                    float(raw.get(name, 0.0))
                    for name in ("alpha", "beta", "alpha_phi", "beta_phi")
                )
            else:
                jitter = tuple(float(v) for v in raw)
    except (HstnError, KeyError, TypeError, ValueError) as err:
        messages.append(f"saleh: {err}")
    return SalehDistribution(base=base, jitter=jitter)


def _channel_from_dict(data, messages):
    if data is None:
        return ChannelConfig()
    try:
        return ChannelConfig.from_dict(data)
    except ConfigurationError as err:
        messages.extend(err.messages)
    except TypeError as err:
        messages.append(f"channel: {err}")
    return ChannelConfig()


def experiment_from_dict(data: dict, seed=None):
    """
    Build an ExperimentConfig from a parsed document.

    Returns
    -------
    (ExperimentConfig, list of messages), the messages hold every problem found
    """
    messages = []
    _unknown_keys(data, _EXPERIMENT_KEYS, messages)
    defaults = ExperimentConfig()

    sweep = data.get("sweep")
    if not isinstance(sweep, dict):
        messages.append("missing sweep section with variable and values")
        sweep = {}
    values = sweep.get("values", [])
    if not isinstance(values, list) or not all(_is_number(v) for v in values):
        messages.append("sweep values must be a list of numbers")
        values = []

    config = ExperimentConfig(
        name=str(data.get("name", defaults.name)),
        M=data.get("M", defaults.M),
        trials=data.get("trials", defaults.trials),
        sweep_variable=sweep.get("variable", ""),
        sweep_values=[float(v) for v in values],
        power_limit_w=parse_quantity(data, "power_limit", messages, defaults.power_limit_w),
        eps_w=parse_quantity(data, "eps", messages, defaults.eps_w),
        sigma2_w=parse_quantity(data, "sigma2", messages, defaults.sigma2_w),
        saleh=_saleh_from_dict(data.get("saleh"), messages),
        channel=_channel_from_dict(data.get("channel"), messages),
        seed=data.get("seed", defaults.seed) if seed is None else seed,
        theta0=_theta0(data, messages),
        schemes=_schemes(data, messages, defaults.schemes),
        n_phase_samples=data.get("n_phase_samples", defaults.n_phase_samples),
    )
    if not _is_integer(config.seed) or config.seed < 0:
        messages.append("seed must be an integer >= 0")
    messages += config.check()
    return config, messages


def _schemes(data, messages, default):
    value = data.get("schemes", default)
    if not isinstance(value, (list, tuple)) or not all(isinstance(v, str) for v in value):
        messages.append(f"schemes must be a list of scheme names, got {value!r}")
        return default
    return tuple(value)


def _theta0(data, messages):
    value = data.get("theta0", 0.0)
    if not _is_number(value):
        messages.append(f"theta0 must be a number, got {value!r}")
        return 0.0
    return float(value)


def _vector(data, key, messages):
    values = data[key]
    if not isinstance(values, list) or not all(_is_number(v) for v in values):
        messages.append(f"{key} must be a list of numbers")
        return None
    return np.asarray(values, dtype=float)


def problem_from_dict(data: dict, seed=None):
    """
    Build one ProblemSpec from a parsed document. Gain vectors and the PA bank
    are taken from the document when given, otherwise drawn from the seed
    (PA bank first, then the two channels, then the small-scale phase).

    Returns
    -------
    (ProblemSpec or None, complex h_ss or None, list of messages)
    """
    messages = []
    _unknown_keys(data, _PROBLEM_KEYS, messages)
    seed = data.get("seed", 0) if seed is None else seed
    if not _is_integer(seed) or seed < 0:
        messages.append("seed must be an integer >= 0")
        seed = 0

    P = parse_quantity(data, "power_limit", messages)
    eps = parse_quantity(data, "eps", messages)
    sigma2 = parse_quantity(data, "sigma2", messages)

    l_ss = _vector(data, "l_ss", messages) if "l_ss" in data else None
    l_st = _vector(data, "l_st", messages) if "l_st" in data else None
    M = data.get("M")
    if M is None:
        M = len(l_ss) if l_ss is not None else (len(l_st) if l_st is not None else None)
    if M is None:
        messages.append("M must be given when the gain vectors are sampled")
        return None, None, messages
    if not _is_integer(M) or M < 1:
        messages.append(f"M must be an integer >= 1, got {M!r}")
        return None, None, messages
    for key, vec in (("l_ss", l_ss), ("l_st", l_st)):
        if vec is not None and vec.shape[0] != M:
            messages.append(f"{key} has length {vec.shape[0]} but M = {M}")

    rng = np.random.default_rng(seed)
    pa = None
    if "pa" in data:
        try:
            pa = PaBank.from_dict(data["pa"])
        except (HstnError, KeyError, TypeError, ValueError) as err:
            messages.append(f"pa: {err}")
        else:
            if len(pa) != M:
                messages.append(f"pa has length {len(pa)} but M = {M}")
    else:
        saleh = _saleh_from_dict(data.get("saleh"), messages)
        jitter_messages = saleh.check()
        messages += jitter_messages
        if not jitter_messages:
            pa = draw_saleh_bank(rng, M, saleh.base, saleh.jitter)

    channel = _channel_from_dict(data.get("channel"), messages)
    channel_messages = channel.check()
    messages += channel_messages
    if (l_ss is None or l_st is None) and not channel_messages:
        ch_ss, ch_st = sample_scenario(rng, M, channel)
        l_ss = ch_ss.gain_vector if l_ss is None else l_ss
        l_st = ch_st.gain_vector if l_st is None else l_st

    phi = data.get("phi_s")
    if phi is None:
        phi = SmallScalePhase.draw(rng).phi
    elif not _is_number(phi):
        messages.append("phi_s must be a number")
        phi = 0.0

    if messages:
        return None, None, messages
    spec = ProblemSpec(
        l_ss=l_ss,
        l_st=l_st,
        pa=pa,
        power_limit_P=P,
        interference_eps=eps,
        noise_sigma2=sigma2,
        theta0=_theta0(data, messages),
    )
    messages += spec.check()
    h_ss = spec.l_ss * np.exp(-1j * phi)
    return spec, h_ss, messages


def curve_from_dict(data: dict, defaults: dict = None):
    """
    Saleh parameters and amplitude range of a pa-curve document. Keys the
    document leaves out take the given defaults.

    Returns
    -------
    (SalehParams or None, (r_min, r_max, step) or None, list of messages)
    """
    values = dict(CURVE_DEFAULTS if defaults is None else defaults)
    messages = [
        f"unknown pa-curve key {key!r}" for key in sorted(data) if key not in CURVE_DEFAULTS
    ]
    for key in CURVE_DEFAULTS:
        value = data.get(key, values[key])
        if not _is_number(value):
            messages.append(f"{key} must be a number, got {value!r}")
        else:
            values[key] = float(value)
    if messages:
        return None, None, messages

    params = None
    grid = (values["r_min"], values["r_max"], values["step"])
    try:
        params = SalehParams(
            values["alpha"], values["beta"], values["alpha_phi"], values["beta_phi"]
        )
    except HstnError as err:
        messages.append(str(err))
    try:
        curve_grid(*grid)
    except ConfigurationError as err:
        messages.extend(err.messages)
    return params, grid, messages


def load_experiment(path, seed=None) -> ExperimentConfig:
    config, messages = experiment_from_dict(read_document(path), seed=seed)
    if messages:
        raise ConfigurationError(messages)
    return config


def load_problem(path, seed=None):
    """(ProblemSpec, h_ss) of a solve config, raises ConfigurationError on any problem"""
    spec, h_ss, messages = problem_from_dict(read_document(path), seed=seed)
    if messages:
        raise ConfigurationError(messages)
    return spec, h_ss


def validate_document(data: dict):
    """
    every violation of an experiment (has a sweep section), pa-curve (only
    curve keys) or solve document
    """
    if "sweep" in data:
        return experiment_from_dict(data)[1]
    if data and all(key in CURVE_DEFAULTS for key in data):
        return curve_from_dict(data)[2]
    return problem_from_dict(data)[2]
