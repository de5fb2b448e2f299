"""Runs bound instances through quadrature and compares against closed
forms; also hosts the finite-difference oracle for the complex
Fibonacci/Lucas derivatives.

Pass criterion:  abs_err <= max(case tolerance, RTOL * |rhs|) with
RTOL = 1e-8, and the quadrature must have converged.  Failures never
abort a run; the report is total and deterministically ordered, so two
runs of the same filter are bitwise identical (timestamps live only in
serialization metadata, never in results).
"""

from __future__ import annotations

import fnmatch
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping

from . import fib_complex, quad, registry

RTOL = 1e-8
_QUAD_SAFETY = 0.25


class EmptyFilterError(ValueError):
    """Filter matched no catalog entry."""


@dataclass(frozen=True)
class VerificationResult:
    case_id: str
    assignment: tuple[tuple[str, int], ...]
    lhs: float
    rhs: float
    abs_err: float
    tol: float
    passed: bool
    quad_evals: int
    note: str = ""

    def sort_key(self):
        return (self.case_id, self.assignment)


@dataclass(frozen=True)
class Report:
    results: tuple[VerificationResult, ...]
    n_pass: int
    n_fail: int
    wall_time: float


def pass_threshold(tol: float, rhs: float) -> float:
    return max(tol, RTOL * abs(rhs))


def _quad_tol(threshold: float) -> float:
    return min(max(_QUAD_SAFETY * threshold, quad.TOL_MIN), quad.TOL_MAX)


def verify_instance(inst: registry.BoundInstance) -> VerificationResult:
    """Integrate one bound instance and compare to its closed form."""
    threshold = pass_threshold(inst.tol, inst.rhs)
    qtol = _quad_tol(threshold)
    note = ""
    try:
        strat = inst.strategy
        if strat.kind == "FINITE":
            res = quad.integrate_finite(inst.integrand, strat.a, strat.b, qtol)
        elif strat.kind == "HALF_LINE":
            res = quad.integrate_half_line(inst.integrand, qtol)
        elif strat.kind == "TAN_HALFPI":
            res = quad.integrate_tan_halfpi(inst.integrand, qtol)
        else:
            raise RuntimeError(f"unknown strategy {strat.kind}")
    except Exception as exc:  # a failed instance is a result, not a crash
        return VerificationResult(
            case_id=inst.case_id,
            assignment=tuple(sorted(inst.assignment.items())),
            lhs=math.nan,
            rhs=inst.rhs,
            abs_err=math.inf,
            tol=threshold,
            passed=False,
            quad_evals=0,
            note=f"integration error: {exc}",
        )
    abs_err = abs(res.value - inst.rhs)
    passed = res.converged and abs_err <= threshold
    if not res.converged:
        note = "quadrature did not converge"
    return VerificationResult(
        case_id=inst.case_id,
        assignment=tuple(sorted(inst.assignment.items())),
        lhs=res.value,
        rhs=inst.rhs,
        abs_err=abs_err,
        tol=threshold,
        passed=passed,
        quad_evals=res.evals,
        note=note,
    )


def _thread_count(threads: int | None) -> int:
    if threads is not None:
        return max(1, threads)
    env = os.environ.get("FIBINT_THREADS", "")
    if env:
        try:
            value = int(env)
        except ValueError:
            raise ValueError(f"FIBINT_THREADS must be a positive integer, got {env!r}")
        if value < 1:
            raise ValueError(f"FIBINT_THREADS must be a positive integer, got {env!r}")
        return value
    return 1


def match_ids(pattern: str) -> list[str]:
    ids = [c.id for c in registry.catalog() if fnmatch.fnmatchcase(c.id, pattern)]
    if not ids:
        raise EmptyFilterError(f"filter {pattern!r} matches no catalog entry")
    return ids


def run(
    pattern: str = "*",
    grid_override: Mapping[str, tuple[int, int]] | None = None,
    tol_override: float | None = None,
    threads: int | None = None,
) -> Report:
    """Verify every instance of every catalog entry matching the glob."""
    t0 = time.perf_counter()
    instances: list[registry.BoundInstance] = []
    for cid in match_ids(pattern):
        for assignment in registry.default_grid(cid, grid_override):
            inst = registry.instantiate(cid, assignment)
            if tol_override is not None:
                inst = registry.BoundInstance(
                    inst.case_id, inst.assignment, inst.integrand, inst.rhs, tol_override, inst.strategy
                )
            instances.append(inst)
    n = _thread_count(threads)
    if n == 1:
        results = [verify_instance(inst) for inst in instances]
    else:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(verify_instance, instances))
    results.sort(key=VerificationResult.sort_key)
    n_pass = sum(1 for r in results if r.passed)
    return Report(
        results=tuple(results),
        n_pass=n_pass,
        n_fail=len(results) - n_pass,
        wall_time=time.perf_counter() - t0,
    )


@dataclass(frozen=True)
class Lemma2Residual:
    j: int
    fib_resid: float
    lucas_resid: float


def lemma2_check(j_lo: int, j_hi: int, h: float = 1e-5) -> list[Lemma2Residual]:
    """Central-difference residuals of the closed-form derivatives.

    For each integer j, |FD(f)(j) - f'(j)| and |FD(l)(j) - l'(j)| in
    complex modulus; second-order in h.
    """
    if not (1e-7 <= h <= 1e-3):
        raise ValueError(f"h must lie in [1e-7, 1e-3], got {h}")
    if j_lo > j_hi:
        raise ValueError("empty index interval")
    out = []
    for j in range(j_lo, j_hi + 1):
        rf, rl = fib_complex.deriv_residual(float(j), h)
        out.append(Lemma2Residual(j, rf, rl))
    return out


__all__ = [
    "RTOL",
    "EmptyFilterError",
    "VerificationResult",
    "Report",
    "pass_threshold",
    "verify_instance",
    "match_ids",
    "run",
    "Lemma2Residual",
    "lemma2_check",
]
