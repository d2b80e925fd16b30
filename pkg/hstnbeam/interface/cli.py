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
    "EXIT_OK",
    "EXIT_CONFIG",
    "EXIT_NONCONVERGENCE",
    "build_parser",
    "cmd_solve",
    "cmd_sweep",
    "cmd_pa_curve",
    "cmd_validate",
    "main",
]

import argparse
import contextlib
import json
import sys

from ..model.errors import ConfigurationError, HstnError, NonConvergenceError
from ..model.pa import SalehParams, pa_curve
from ..model.problem import SolveStatus
from ..driver.beamformer import solve
from ..optimization.interior_point import BarrierSolver
from ..sim.monte_carlo import run_sweep
from .config_file import (
    curve_from_dict,
    load_experiment,
    load_problem,
    read_document,
    validate_document,
)
from .writers import (
    write_pa_curve_csv,
    write_pa_curve_json,
    write_sweep_csv,
    write_sweep_json,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NONCONVERGENCE = 3


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output file, stdout when omitted")
    common.add_argument(
        "--format", choices=["csv", "json"], default=None, help="output format"
    )
    common.add_argument("--seed", type=int, default=None, help="override the config seed")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="print progress, repeat for more"
    )

    parser = argparse.ArgumentParser(
        prog="hstnbeam",
        description="Beamforming for spectrum-sharing hybrid satellite-terrestrial "
        "networks under Saleh PA nonlinearity",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve_parser = subparsers.add_parser(
        "solve", parents=[common], help="solve one beamforming problem"
    )
    solve_parser.add_argument("--config", required=True, help="solve config (JSON)")
    solve_parser.set_defaults(handler=cmd_solve)

    sweep_parser = subparsers.add_parser(
        "sweep", parents=[common], help="run a Monte Carlo parameter sweep"
    )
    sweep_parser.add_argument("--config", required=True, help="experiment config (JSON)")
    sweep_parser.add_argument(
        "--trials", type=int, default=None, help="override the number of trials"
    )
    sweep_parser.add_argument(
        "--status-file", default=None, help="write a per-point summary to this file"
    )
    sweep_parser.set_defaults(handler=cmd_sweep)

    curve_parser = subparsers.add_parser(
        "pa-curve", parents=[common], help="sample the Saleh AM/AM and AM/PM curves"
    )
    curve_parser.add_argument("--config", default=None, help="PA curve config (JSON)")
    defaults = SalehParams.default()
    curve_parser.add_argument("--alpha", type=float, default=defaults.alpha)
    curve_parser.add_argument("--beta", type=float, default=defaults.beta)
    curve_parser.add_argument("--alpha-phi", type=float, default=defaults.alpha_phi)
    curve_parser.add_argument("--beta-phi", type=float, default=defaults.beta_phi)
    curve_parser.add_argument("--r-min", type=float, default=0.0)
    curve_parser.add_argument("--r-max", type=float, default=3.0)
    curve_parser.add_argument("--step", type=float, default=0.01)
    curve_parser.set_defaults(handler=cmd_pa_curve)

    validate_parser = subparsers.add_parser(
        "validate", parents=[common], help="check a config file without running it"
    )
    validate_parser.add_argument("--config", required=True, help="config file (JSON)")
    validate_parser.set_defaults(handler=cmd_validate)
    return parser


@contextlib.contextmanager
def _output(path):
    """output stream, progress prints move to stderr when results go to stdout"""
    if path is None:
        stream = sys.stdout
        with contextlib.redirect_stdout(sys.stderr):
            yield stream
    else:
        with open(path, "w", newline="") as stream:
            yield stream


def cmd_solve(args):
    if args.format == "csv":
        raise ConfigurationError("solve writes a JSON report, use --format json")
    spec, _ = load_problem(args.config, seed=args.seed)
    solver = BarrierSolver(verbosity=args.verbose)
    with _output(args.out) as stream:
        report = solve(spec, solver)
        stream.write(report.to_json())
        stream.flush()
    if report.status != SolveStatus.OPTIMAL:
        raise NonConvergenceError(
            f"solver stopped with status {report.status.value}, "
            f"kkt residual {report.kkt_residual}",
            report=report,
        )
    return EXIT_OK


def cmd_sweep(args):
    config = load_experiment(args.config, seed=args.seed)
    if args.trials is not None:
        config.set_trials(args.trials).validate()
    with _output(args.out) as stream:
        result = run_sweep(config, verbosity=args.verbose, status_file=args.status_file)
        if args.format == "json":
            write_sweep_json(result, stream)
        else:
            write_sweep_csv(result, stream)
        stream.flush()
    return EXIT_OK


def cmd_pa_curve(args):
    defaults = {
        "alpha": args.alpha,
        "beta": args.beta,
        "alpha_phi": args.alpha_phi,
        "beta_phi": args.beta_phi,
        "r_min": args.r_min,
        "r_max": args.r_max,
        "step": args.step,
    }
    data = read_document(args.config) if args.config is not None else {}
    params, grid, messages = curve_from_dict(data, defaults)
    if messages:
        raise ConfigurationError(messages)
    r, out_am, out_pm = pa_curve(params, *grid)
    with _output(args.out) as stream:
        if args.format == "json":
            write_pa_curve_json(r, out_am, out_pm, stream)
        else:
            write_pa_curve_csv(r, out_am, out_pm, stream)
        stream.flush()
    return EXIT_OK


def cmd_validate(args):
    data = read_document(args.config)
    messages = validate_document(data)
    with _output(args.out) as stream:
        if args.format == "json":
            json.dump({"config": args.config, "violations": messages}, stream, indent=2)
            stream.write("\n")
        elif messages:
            for message in messages:
                stream.write(f"{args.config}: {message}\n")
        else:
            stream.write(f"{args.config}: ok\n")
        stream.flush()
    return EXIT_OK if not messages else EXIT_CONFIG


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConfigurationError as err:
        for message in err.messages:
            print(f"hstnbeam {args.command}: configuration error: {message}", file=sys.stderr)
        return EXIT_CONFIG
    except NonConvergenceError as err:
        print(f"hstnbeam {args.command}: {err}", file=sys.stderr)
        return EXIT_NONCONVERGENCE
    except HstnError as err:
        print(f"hstnbeam {args.command}: {err}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
