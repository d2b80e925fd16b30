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
    "solve_substituted",
    "recover_amplitudes",
    "recover_phases",
    "fold_to_monotone_region",
    "closed_form_single",
    "solve",
    "ProposedDriver",
]

import numpy as np

from ..model.pa import am_am, am_pm, am_am_inverse
from ..model.link import evaluate_rate
from ..model.problem import (
    BeamWeights,
    ProblemSpec,
    SolveReport,
    SolveStatus,
    SubstitutedPoint,
)
from ..optimization.interior_point import BarrierResult, BarrierSolver
from ..optimization.power_constraint import PowerConstraint
from ._beamforming_driver import BeamformingDriver


def solve_substituted(spec: ProblemSpec, solver: BarrierSolver = None, full_output=False):
    """
    Solve the convex substituted problem in the PA output amplitudes

        maximize    l_ss^T zbar
        subject to  l_st^T zbar <= sqrt(eps)
                    sum_i nu_i(zbar_i)^2 <= P
                    0 <= zbar_i <= alpha_i/(2 sqrt(beta_i))

    Parameters
    ----------
    spec: ProblemSpec
    solver: BarrierSolver, optional
    full_output: bool
        also return the BarrierResult with status and KKT residual

    An invalid spec gives the zero point and, with full_output, the
    infeasible-input status.
    """
    if solver is None:
        solver = BarrierSolver()
    messages = spec.check()
    if messages:
        point = SubstitutedPoint(np.zeros(spec.M))
        result = BarrierResult(
            x=point.zbar,
            objective=0.0,
            kkt_residual=None,
            iterations=0,
            outer_iterations=0,
            mu=0.0,
            status=SolveStatus.INFEASIBLE_INPUT,
        )
        return (point, result) if full_output else point

    result = solver.solve(
        c=spec.l_ss,
        a=spec.l_st,
        b=np.sqrt(spec.interference_eps),
        constraint=PowerConstraint(spec.pa, spec.power_limit_P),
    )
    point = SubstitutedPoint(result.x)
    return (point, result) if full_output else point


def recover_amplitudes(pa, zbar):
    """optimal input amplitudes r_i = nu_i(zbar_i), all at or below saturation"""
    return np.atleast_1d(np.asarray(am_am_inverse(pa, getattr(zbar, "zbar", zbar))))


def recover_phases(pa, r, theta0=0.0):
    """phases -theta0 - Phi_i(r_i) that cancel the carrier and AM/PM rotation"""
    return -theta0 - np.atleast_1d(np.asarray(am_pm(pa, r)))


def fold_to_monotone_region(pa, r):
    """
    Map every amplitude beyond saturation onto the input below saturation with
    the same AM/AM output. Amplitudes at or below saturation are returned unchanged.
    """
    r = np.atleast_1d(np.asarray(r, dtype=float))
    over = r > pa.r_sat
    if not np.any(over):
        return r.copy()
    folded = np.atleast_1d(np.asarray(am_am_inverse(pa, am_am(pa, r))))
    return np.where(over, folded, r)


def closed_form_single(spec: ProblemSpec) -> float:
    """
    Optimal zbar of a single antenna instance,
    min(z_max, sqrt(eps)/l_st, A(min(sqrt(P), r_sat)))
    """
    assert spec.M == 1
    p = spec.pa[0]
    candidates = [p.z_max, am_am(p, min(np.sqrt(spec.power_limit_P), p.r_sat))]
    if spec.l_st[0] > 0.0:
        candidates.append(np.sqrt(spec.interference_eps) / spec.l_st[0])
    return float(min(candidates))


def solve(spec: ProblemSpec, solver: BarrierSolver = None) -> SolveReport:
    """
    Optimal beamforming weights: solve the substituted problem, recover the
    input amplitudes by the AM/AM inverse and the phases by AM/PM compensation.
    """
    point, result = solve_substituted(spec, solver, full_output=True)
    if result.status == SolveStatus.INFEASIBLE_INPUT:
        return SolveReport(
            weights=BeamWeights.zeros(spec.M),
            zbar_star=point,
            objective=0.0,
            rate_bps_hz=0.0,
            kkt_residual=None,
            iterations=0,
            status=SolveStatus.INFEASIBLE_INPUT,
            messages=spec.check(),
        )

    r = recover_amplitudes(spec.pa, point)
    theta = recover_phases(spec.pa, r, spec.theta0)
    objective = float(spec.l_ss @ point.zbar)
    return SolveReport(
        weights=BeamWeights(r, theta),
        zbar_star=point,
        objective=objective,
        rate_bps_hz=evaluate_rate(spec.l_ss, point.zbar, spec.noise_sigma2),
        kkt_residual=result.kkt_residual,
        iterations=result.iterations,
        status=result.status,
        interference_w=float(spec.l_st @ point.zbar) ** 2,
        input_power_w=float(np.sum(r**2)),
    )


class ProposedDriver(BeamformingDriver):
    """
    Nonlinearity-aware beamformer built on the convex output amplitude
    substitution, needs only the large-scale channel
    """

    SCHEME = "proposed"

    def __init__(self, settings=None, comm=None, verbosity: int = 0):
        super().__init__(comm=comm, verbosity=verbosity)
        self.solver = BarrierSolver(settings, comm=comm, verbosity=verbosity)

    def design(self, spec: ProblemSpec, h_ss=None):
        report = solve(spec, self.solver)
        if report.status != SolveStatus.OPTIMAL:
            self._print(
                f"solve ended with status {report.status.value}, kkt residual {report.kkt_residual}"
            )
        return report.weights, report
