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

__all__ = ["BarrierSettings", "BarrierResult", "BarrierSolver"]

from dataclasses import dataclass, field
import numpy as np

from ..model.errors import DimensionError, DomainError
from ..model.problem import SolveStatus

# smallest scaled objective used when measuring the relative duality gap
OBJ_FLOOR = 1e-12


class BarrierSettings:
    def __init__(
        self,
        mu0: float = 1.0,
        mu_factor: float = 0.2,
        gap_tol: float = 1e-9,
        kkt_tol: float = 1e-6,
        newton_tol: float = 1e-12,
        max_newton: int = 60,
        max_outer: int = 80,
        armijo: float = 1e-4,
        backtrack: float = 0.5,
        min_step: float = 1e-14,
    ):
        """
        Settings of the log-barrier interior point method
        Parameters
        ---------------------------------
        mu0: initial barrier weight
        mu_factor: geometric decrease of the barrier weight after each centering
        gap_tol: stop once (number of barrier terms) * mu <= gap_tol * |objective| in the scaled problem
        kkt_tol: largest scaled KKT residual reported as optimal
        newton_tol: centering stops once half the squared Newton decrement, measured in barrier units, drops below this
        max_newton: Newton step cap for one centering
        max_outer: cap on the number of barrier weight updates
        armijo: sufficient decrease constant of the backtracking line search
        backtrack: step shrink factor of the line search
        min_step: smallest line search step, below it the centering is reported as stalled
        """
        assert 0.0 < mu_factor < 1.0
        assert 0.0 < backtrack < 1.0
        self.mu0 = mu0
        self.mu_factor = mu_factor
        self.gap_tol = gap_tol
        self.kkt_tol = kkt_tol
        self.newton_tol = newton_tol
        self.max_newton = max_newton
        self.max_outer = max_outer
        self.armijo = armijo
        self.backtrack = backtrack
        self.min_step = min_step

    def tolerance(self, kkt_tol):
        """
        kkt tolerance setter with method cascading
        """
        self.kkt_tol = kkt_tol
        return self


@dataclass
class BarrierResult:
    x: np.ndarray
    objective: float
    kkt_residual: float
    iterations: int
    outer_iterations: int
    mu: float
    status: SolveStatus
    multipliers: dict = field(default_factory=dict)


class BarrierSolver:
    """
    Primal log-barrier interior point method for

        maximize    c^T x
        subject to  a^T x <= b
                    g(x) <= 0          g convex and separable
                    0 <= x <= u        u may hold inf

    The Hessian of the barrier objective is diagonal plus the two rank-one
    terms mu/s_k^2 w_k w_k^T of the coupling and power constraints. Near an
    active constraint the rank-one term swamps the diagonal, so the Newton
    step is taken from the bordered system

        [ diag(D)   W  ] [dx]   [-grad]
        [   W^T    -C  ] [ y] = [  0  ],    C = diag(s_k^2 / mu)

    which stays well conditioned as the slacks go to zero.
    """

    def __init__(self, settings: BarrierSettings = None, comm=None, verbosity=0):
        self.settings = settings if settings is not None else BarrierSettings()
        self.comm = comm
        self.verbosity = verbosity

    @property
    def root_proc(self) -> bool:
        return self.comm is None or self.comm.rank == 0

    def _print(self, message, level=2):
        if self.root_proc and self.verbosity >= level:
            print(message, flush=True)

    def solve(self, c, a, b, constraint, x0=None):
        """
        Parameters
        ----------
        c: array
            objective weights, >= 0
        a: array
            coupling constraint weights, >= 0, all zeros drops the constraint
        b: float
            coupling constraint bound, > 0, inf drops the constraint
        constraint: PowerConstraint or QuadraticPowerConstraint
            separable convex constraint that also supplies the upper bounds u
        x0: array, optional
            strictly interior start point
        """
        c = np.atleast_1d(np.asarray(c, dtype=float))
        a = np.atleast_1d(np.asarray(a, dtype=float))
        M = c.shape[0]
        if a.shape[0] != M:
            raise DimensionError(f"coupling weights of length {a.shape[0]}, expected {M}")
        if np.any(c < 0.0) or np.any(a < 0.0):
            raise DomainError("objective and coupling weights must be >= 0")
        u = np.broadcast_to(np.asarray(constraint.upper, dtype=float), (M,))
        s = self.settings

        # zero objective, x = 0 is optimal
        c_max = float(np.max(c))
        if c_max == 0.0:
            return BarrierResult(
                x=np.zeros(M),
                objective=0.0,
                kkt_residual=0.0,
                iterations=0,
                outer_iterations=0,
                mu=0.0,
                status=SolveStatus.OPTIMAL,
            )

        # scaled data
        c_s = c / c_max
        a_max = float(np.max(a))
        coupled = a_max > 0.0 and np.isfinite(b)
        a_s = a / a_max if coupled else np.zeros(M)
        b_s = b / a_max if coupled else np.inf
        finite_u = np.isfinite(u)
        nterms = M + int(np.sum(finite_u)) + 1 + int(coupled)

        if x0 is None:
            x0 = self._start_point(M, a_s, b_s, u, constraint, coupled)
        x = np.array(x0, dtype=float)
        if not self._interior(x, a_s, b_s, u, constraint, coupled):
            raise DomainError("barrier start point is not strictly interior")

        mu = s.mu0
        iterations = 0
        outer = 0
        stalls = 0
        while True:
            newton_steps, stalled = self._center(x, mu, c_s, a_s, b_s, u, constraint, coupled)
            iterations += newton_steps
            outer += 1
            stalls += int(stalled)
            obj_s = float(c_s @ x)
            self._print(
                f"barrier outer {outer:3d} mu = {mu:.3e} newton = {newton_steps:3d} obj = {obj_s:.12e}"
                + (" line search stalled" if stalled else "")
            )
            if nterms * mu <= s.gap_tol * max(abs(obj_s), OBJ_FLOOR):
                break
            if outer >= s.max_outer:
                break
            mu *= s.mu_factor

        kkt, multipliers = self._kkt_residual(x, mu, c_s, a_s, b_s, u, constraint, coupled)
        status = SolveStatus.OPTIMAL if kkt <= s.kkt_tol else SolveStatus.MAX_ITERATIONS
        if status != SolveStatus.OPTIMAL:
            self._print(
                f"barrier solver stopped with kkt residual {kkt:.3e} after {iterations} Newton steps"
                f" and {stalls} stalled centerings",
                level=1,
            )
        return BarrierResult(
            x=x,
            objective=float(c @ x),
            kkt_residual=kkt,
            iterations=iterations,
            outer_iterations=outer,
            mu=mu,
            status=status,
            multipliers=multipliers,
        )

    def _start_point(self, M, a_s, b_s, u, constraint, coupled):
        cap = np.asarray(constraint.start_point(M), dtype=float)
        cap = np.minimum(cap, u)
        if coupled:
            cap = np.minimum(cap, b_s / (M * np.max(a_s) + np.finfo(float).tiny))
        return 0.25 * cap

    def _slacks(self, x, a_s, b_s, u, constraint, coupled):
        s_a = b_s - a_s @ x if coupled else np.inf
        s_g = -constraint.value(x)
        return s_a, s_g, x, u - x

    def _interior(self, x, a_s, b_s, u, constraint, coupled):
        if np.any(x <= 0.0) or np.any(x >= u):
            return False
        if coupled and b_s - a_s @ x <= 0.0:
            return False
        return -constraint.value(x) > 0.0

    def _merit(self, x, mu, c_s, a_s, b_s, u, constraint, coupled):
        s_a, s_g, s_lo, s_hi = self._slacks(x, a_s, b_s, u, constraint, coupled)
        barrier = -np.log(s_g) - np.sum(np.log(s_lo))
        finite = np.isfinite(s_hi)
        barrier -= np.sum(np.log(s_hi[finite]))
        if coupled:
            barrier -= np.log(s_a)
        return -c_s @ x + mu * barrier

    def _newton_system(self, x, mu, c_s, a_s, b_s, u, constraint, coupled):
        s_a, s_g, s_lo, s_hi = self._slacks(x, a_s, b_s, u, constraint, coupled)
        grad_g = constraint.gradient(x)
        hess_g = constraint.hessian_diag(x)
        inv_hi = np.where(np.isfinite(s_hi), 1.0 / s_hi, 0.0)

        grad = -c_s + mu * (grad_g / s_g - 1.0 / s_lo + inv_hi)
        diag = mu * (hess_g / s_g + 1.0 / s_lo**2 + inv_hi**2)
        cols = [grad_g]
        border = [s_g**2 / mu]
        if coupled:
            grad = grad + mu * a_s / s_a
            cols.append(a_s)
            border.append(s_a**2 / mu)
        return grad, diag, np.column_stack(cols), np.array(border)

    @staticmethod
    def _equilibrated_solve(K, rhs):
        # |K_ij| / sqrt(row_i row_j) <= 1
        row = np.max(np.abs(K), axis=1)
        scale = 1.0 / np.sqrt(np.where(row > 0.0, row, 1.0))
        return scale * np.linalg.solve(K * scale[:, None] * scale[None, :], scale * rhs)

    @staticmethod
    def _bordered_solve(diag, W, C, rhs, pivot_tol=0.1):
        """
        solve (diag(D) + W C^-1 W^T) dx = rhs through the bordered system

            [diag(D)  W] [dx]   [rhs]
            [W^T     -C] [ y] = [ 0 ]

        Coordinates whose diagonal dominates their equilibrated border entries
        are eliminated first at O(M k) cost. The remaining coordinates, pinned
        by active constraints, go with the border into a small pivoted dense
        solve. One step of iterative refinement follows.
        """
        M, k = W.shape
        row = np.maximum(diag, np.max(np.abs(W), axis=1))
        border_row = np.maximum(C, np.max(np.abs(W), axis=0))
        W_eq = np.abs(W) / np.sqrt(row[:, None] * border_row[None, :])
        pivot = diag / row >= pivot_tol * np.max(W_eq, axis=1)
        free = ~pivot
        m = int(np.count_nonzero(free))

        W_p, D_p = W[pivot], diag[pivot]
        T = np.zeros((m + k, m + k))
        T[np.arange(m), np.arange(m)] = diag[free]
        T[:m, m:] = W[free]
        T[m:, :m] = W[free].T
        T[m:, m:] = -np.diag(C) - W_p.T @ (W_p / D_p[:, None])

        def solve(r_x, r_y):
            sol = BarrierSolver._equilibrated_solve(
                T, np.concatenate([r_x[free], r_y - W_p.T @ (r_x[pivot] / D_p)])
            )
            y = sol[m:]
            dx = np.empty(M)
            dx[free] = sol[:m]
            dx[pivot] = (r_x[pivot] - W_p @ y) / D_p
            return dx, y

        dx, y = solve(rhs, np.zeros(k))
        ddx, _ = solve(rhs - diag * dx - W @ y, C * y - W.T @ dx)
        return dx + ddx

    def _center(self, x, mu, c_s, a_s, b_s, u, constraint, coupled):
        """
        damped Newton centering for one barrier weight, updates x in place

        Returns
        -------
        the number of Newton steps and whether the line search stalled
        """
        s = self.settings
        for step_count in range(1, s.max_newton + 1):
            grad, diag, W, C = self._newton_system(x, mu, c_s, a_s, b_s, u, constraint, coupled)
            dx = self._bordered_solve(diag, W, C, -grad)
            slope = float(grad @ dx)
            decrement = -slope / mu
            if 0.5 * decrement <= s.newton_tol:
                return step_count - 1, False

            # keep the trial point strictly interior
            step = 1.0
            while not self._interior(x + step * dx, a_s, b_s, u, constraint, coupled):
                step *= s.backtrack
                if step < s.min_step:
                    return step_count, True

            # full steps inside the quadratic convergence region, Armijo otherwise
            if decrement > 0.0625:
                merit = self._merit(x, mu, c_s, a_s, b_s, u, constraint, coupled)
                while (
                    self._merit(x + step * dx, mu, c_s, a_s, b_s, u, constraint, coupled)
                    > merit + s.armijo * step * slope
                ):
                    step *= s.backtrack
                    if step < s.min_step:
                        return step_count, True
            x_new = x + step * dx
            if np.array_equal(x_new, x):
                return step_count, False
            x[:] = x_new
        return s.max_newton, False

    def _kkt_residual(self, x, mu, c_s, a_s, b_s, u, constraint, coupled):
        """
        largest of the scaled stationarity, complementarity and primal
        infeasibility residuals with multipliers mu/slack
        """
        s_a, s_g, s_lo, s_hi = self._slacks(x, a_s, b_s, u, constraint, coupled)
        grad_g = constraint.gradient(x)
        lam_g = mu / s_g
        lam_lo = mu / s_lo
        lam_hi = np.where(np.isfinite(s_hi), mu / s_hi, 0.0)
        lam_a = mu / s_a if coupled else 0.0

        residual = c_s - lam_a * a_s - lam_g * grad_g + lam_lo - lam_hi
        scale = (
            1.0
            + np.abs(c_s)
            + np.abs(lam_a * a_s)
            + np.abs(lam_g * grad_g)
            + lam_lo
            + lam_hi
        )
        stationarity = float(np.max(np.abs(residual) / scale))

        obj_scale = max(abs(float(c_s @ x)), OBJ_FLOOR)
        complementarity = mu / obj_scale

        infeasibility = max(
            0.0,
            constraint.value(x) / constraint.scale,
            float(np.max(-x)),
            float(np.max(np.where(np.isfinite(u), x - u, 0.0))),
        )
        if coupled:
            infeasibility = max(infeasibility, -s_a / b_s)

        multipliers = {
            "coupling": float(lam_a),
            "power": float(lam_g),
            "lower": lam_lo,
            "upper": lam_hi,
        }
        return max(stationarity, complementarity, infeasibility), multipliers
