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
    "HstnError",
    "DomainError",
    "InfeasibleAmplitudeError",
    "ParameterError",
    "DimensionError",
    "SingularDerivativeError",
    "ConfigurationError",
    "NonConvergenceError",
]


class HstnError(Exception):
    """base class for every error raised inside hstnbeam"""

    pass


class DomainError(HstnError, ValueError):
    """an amplitude or point outside the domain of an operation"""

    pass


class InfeasibleAmplitudeError(DomainError):
    """output amplitude above the maximum PA output z_max"""

    pass


class ParameterError(HstnError, ValueError):
    """invalid Saleh model or geometry parameters"""

    pass


class DimensionError(HstnError, ValueError):
    """vectors and PA banks of mismatched length"""

    pass


class SingularDerivativeError(DomainError):
    """derivative requested at or beyond the saturation endpoint z_max"""

    pass


class ConfigurationError(HstnError, ValueError):
    """
    Invalid configuration document or problem instance.
    Holds the full list of violations so they can all be reported at once.
    """

    def __init__(self, messages):
        if isinstance(messages, str):
            messages = [messages]
        self.messages = list(messages)
        super().__init__("; ".join(self.messages))


class NonConvergenceError(HstnError, RuntimeError):
    """solver hit its iteration cap, holds the best-iterate report"""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
