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
    "TrialDraw",
    "TrialRecord",
    "SweepRow",
    "SweepResult",
    "draw_trial",
    "run_sweep",
    "CSV_COLUMNS",
]

from dataclasses import dataclass, field, asdict
import numpy as np

from ..model.channel import realize, sample_scenario, SmallScalePhase
from ..model.link import estimate_interference
from ..model.problem import ProblemSpec, SolveStatus
from ..driver.schemes import make_driver
from .experiment import ExperimentConfig

CSV_COLUMNS = (
    "sweep_variable",
    "sweep_value",
    "scheme",
    "mean_rate",
    "stderr_rate",
    "mean_interference_w",
    "trials",
)


@dataclass(eq=False)
class TrialDraw:
    """random draws of one trial, shared by every scheme and sweep value"""

    index: int
    pa: object
    ch_ss: object
    ch_st: object
    phi_s: SmallScalePhase
    phase_seed: int

    @property
    def h_ss(self):
        return realize(self.ch_ss, self.phi_s)


@dataclass
class TrialRecord:
    trial: int
    sweep_value: float
    scheme: str
    rate_bps_hz: float
    interference_w: float
    interference_bound_w: float
    input_power_w: float
    status: str = ""


@dataclass
class SweepRow:
    sweep_variable: str
    sweep_value: float
    scheme: str
    mean_rate: float
    stderr_rate: float
    mean_interference_w: float
    trials: int


@dataclass
class SweepResult:
    """
    Aggregated Monte Carlo sweep, one row per (sweep value, scheme) in sweep
    order, plus the per-trial records when they were kept.
    """

    name: str
    sweep_variable: str
    rows: list = field(default_factory=list)
    records: list = field(default_factory=list)

    def to_rows(self):
        return [asdict(row) for row in self.rows]

    @classmethod
    def from_rows(cls, rows, name="custom"):
        rows = [
            SweepRow(
                sweep_variable=str(row["sweep_variable"]),
                sweep_value=float(row["sweep_value"]),
                scheme=str(row["scheme"]),
                mean_rate=float(row["mean_rate"]),
                stderr_rate=float(row["stderr_rate"]),
                mean_interference_w=float(row["mean_interference_w"]),
                trials=int(row["trials"]),
            )
            for row in rows
        ]
        sweep_variable = rows[0].sweep_variable if rows else ""
        return cls(name=name, sweep_variable=sweep_variable, rows=rows)

    @property
    def schemes(self):
        seen = []
        for row in self.rows:
            if row.scheme not in seen:
                seen.append(row.scheme)
        return seen

    @property
    def sweep_values(self):
        seen = []
        for row in self.rows:
            if row.sweep_value not in seen:
                seen.append(row.sweep_value)
        return seen

    def row(self, sweep_value, scheme) -> SweepRow:
        for row in self.rows:
            if row.sweep_value == sweep_value and row.scheme == scheme:
                return row
        raise KeyError((sweep_value, scheme))

    def mean_rates(self, scheme):
        """mean rate of one scheme over the sweep values, in sweep order"""
        return np.array([row.mean_rate for row in self.rows if row.scheme == scheme])

    def trial_rates(self, scheme, sweep_value):
        """per-trial rates of one scheme at one sweep value, ordered by trial"""
        return np.array(
            [
                rec.rate_bps_hz
                for rec in self.records
                if rec.scheme == scheme and rec.sweep_value == sweep_value
            ]
        )


def draw_trial(config: ExperimentConfig, index: int, seed_seq) -> TrialDraw:
    """PA bank, large-scale channels and small-scale phase of one trial"""
    rng = np.random.default_rng(seed_seq)
    pa = config.saleh.draw(rng, config.M)
    ch_ss, ch_st = sample_scenario(rng, config.M, config.channel)
    phi_s = SmallScalePhase.draw(rng)
    phase_seed = int(rng.integers(0, 2**32))
    return TrialDraw(index, pa, ch_ss, ch_st, phi_s, phase_seed)


def _run_trial(config, draw, drivers):
    records = []
    h_ss = draw.h_ss
    for value in config.sweep_values:
        P, eps = config.operating_point(value)
        spec = ProblemSpec.from_channels(
            draw.ch_ss,
            draw.ch_st,
            draw.pa,
            power_limit_P=P,
            interference_eps=eps,
            noise_sigma2=config.sigma2_w,
            theta0=config.theta0,
        )
        for driver in drivers:
            result = driver.solve(spec, h_ss)
            interference = estimate_interference(
                spec.l_st,
                result.weights,
                spec.pa,
                config.n_phase_samples,
                rng=draw.phase_seed,
                theta0=spec.theta0,
            )
            status = "" if result.report is None else SolveStatus(result.report.status).value
            records.append(
                TrialRecord(
                    trial=draw.index,
                    sweep_value=float(value),
                    scheme=driver.scheme,
                    rate_bps_hz=result.rate_bps_hz,
                    interference_w=interference,
                    interference_bound_w=result.interference_w,
                    input_power_w=result.input_power_w,
                    status=status,
                )
            )
    return records


def _aggregate(config, records):
    rows = []
    for value in config.sweep_values:
        for scheme in config.schemes:
            subset = [
                rec
                for rec in records
                if rec.scheme == scheme and rec.sweep_value == float(value)
            ]
            rates = np.array([rec.rate_bps_hz for rec in subset])
            interference = np.array([rec.interference_w for rec in subset])
            n = rates.shape[0]
            stderr = float(np.std(rates, ddof=1) / np.sqrt(n)) if n > 1 else 0.0
            rows.append(
                SweepRow(
                    sweep_variable=config.sweep_variable,
                    sweep_value=float(value),
                    scheme=scheme,
                    mean_rate=float(np.mean(rates)),
                    stderr_rate=stderr,
                    mean_interference_w=float(np.mean(interference)),
                    trials=n,
                )
            )
    return rows


def run_sweep(
    config: ExperimentConfig,
    comm=None,
    verbosity: int = 0,
    keep_trials: bool = False,
    status_file=None,
    settings=None,
) -> SweepResult:
    """
    Run every scheme on every trial and sweep value.

    Each trial draws its PA bank, channels and phases once from its own child
    of SeedSequence(config.seed), and those draws are reused for every sweep
    value and scheme. With an mpi4py communicator, rank k runs trials
    k, k + size, ... and the records are merged by trial index on all ranks.

    Parameters
    ----------
    config: ExperimentConfig
    comm: mpi4py communicator or None
    verbosity: int
        1 prints a line per trial and per sweep point on the root process
    keep_trials: bool
        keep the per-trial records on the result
    status_file: str, optional
        path of a summary file written by the root process
    settings: BarrierSettings, optional
    """
    config.validate()
    root_proc = comm is None or comm.rank == 0
    rank, size = (0, 1) if comm is None else (comm.rank, comm.size)

    drivers = [make_driver(scheme, settings=settings, comm=comm) for scheme in config.schemes]
    children = np.random.SeedSequence(config.seed).spawn(config.trials)

    local = []
    for index in range(rank, config.trials, size):
        draw = draw_trial(config, index, children[index])
        local += _run_trial(config, draw, drivers)
        if root_proc and verbosity >= 1:
            print(f"{config.name}: trial {index + 1}/{config.trials} done", flush=True)

    if comm is not None:
        local = [rec for chunk in comm.allgather(local) for rec in chunk]
    scheme_order = {scheme: i for i, scheme in enumerate(config.schemes)}
    value_order = {float(value): i for i, value in enumerate(config.sweep_values)}
    records = sorted(
        local,
        key=lambda rec: (rec.trial, value_order[rec.sweep_value], scheme_order[rec.scheme]),
    )

    rows = _aggregate(config, records)
    if root_proc and verbosity >= 1:
        solved = [rec.status for rec in records if rec.status]
        unconverged = sum(status != SolveStatus.OPTIMAL.value for status in solved)
        print(
            f"{config.name}: {unconverged} of {len(solved)} barrier solves "
            "ended without an optimal status",
            flush=True,
        )
        for row in rows:
            print(
                f"{config.name}: {row.sweep_variable} = {row.sweep_value:g} {row.scheme:>24s} "
                f"rate = {row.mean_rate:.6f} +- {row.stderr_rate:.6f}",
                flush=True,
            )
    if status_file is not None and root_proc:
        with open(status_file, "w") as status_hdl:
            status_hdl.write(f"Monte Carlo sweep {config.name} with {config.trials} trials\n")
            for row in rows:
                status_hdl.write(
                    f"{row.sweep_variable} = {row.sweep_value} scheme = {row.scheme} "
                    f"mean rate = {row.mean_rate} stderr = {row.stderr_rate} "
                    f"mean interference = {row.mean_interference_w}\n"
                )
            status_hdl.flush()

    return SweepResult(
        name=config.name,
        sweep_variable=config.sweep_variable,
        rows=rows,
        records=records if keep_trials else [],
    )
