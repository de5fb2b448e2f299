"""Shared numeric building blocks for the identity catalog.

Closed-form right sides are assembled from exact Fibonacci/Lucas integers
(converted to binary64 late), golden-ratio powers built from those exact
integers, and the special-function evaluators.  Algebraically equivalent
but cancellation-free rewrites are preferred where the printed form would
subtract nearly equal quantities, e.g. 1 - sqrt(5) F_r / L_r is computed
as 2 beta^r / L_r.
"""

from __future__ import annotations

import math
from typing import Callable, Mapping

from ..exact_seq import fib, lucas, golden_powers
from ..quad import Integrand
from ..registry import FINITE, HALF_LINE, TAN_HALFPI, IdentityCase, ParamSpec, Strategy
from ..specfun import cl2, constants, li2_real

PI = math.pi
PI2 = PI * PI
PI3 = PI * PI2
SQRT5 = math.sqrt(5.0)
SQRT2 = math.sqrt(2.0)
ALPHA = (1.0 + SQRT5) / 2.0
BETA = (1.0 - SQRT5) / 2.0
LN_ALPHA = math.log(ALPHA)
LN2 = math.log(2.0)
LN3_2 = math.log(1.5)

HALF_PI = PI / 2.0

li2 = li2_real

# default absolute tolerances by strategy family
TOL_FINITE = 1e-7
TOL_TRANSFORMED = 5e-7


def F(n: int) -> float:
    return float(fib(n))


def L(n: int) -> float:
    return float(lucas(n))


def apow(r: int) -> float:
    return golden_powers(r).alpha_pow


def bpow(r: int) -> float:
    return golden_powers(r).beta_pow


def catalan() -> float:
    return constants().catalan


def case(
    cid: str,
    anchor: str,
    strategy: Strategy,
    params: tuple[ParamSpec, ...],
    lhs: Callable[[Mapping[str, int]], Callable[[float], float]],
    rhs: Callable[[Mapping[str, int]], float],
    tol: float | None = None,
    splits: tuple[float, ...] = (),
    note: str = "",
) -> IdentityCase:
    """Wrap a bare-integrand builder into an IdentityCase."""
    if tol is None:
        tol = TOL_FINITE if strategy.kind == "FINITE" else TOL_TRANSFORMED

    def build(p: Mapping[str, int]) -> Integrand:
        return Integrand(lhs(p), splits)

    return IdentityCase(
        id=cid,
        anchor=anchor,
        params=params,
        strategy=strategy,
        lhs_builder=build,
        rhs_eval=lambda p: float(rhs(p)),
        default_tol=tol,
        note=note,
    )


def P(name: str, lo: int, hi: int, parity: str = "any", exclude: tuple[int, ...] = ()) -> ParamSpec:
    return ParamSpec(name, lo, hi, parity, exclude)


R_ANY = P("r", 1, 10)
R_EVEN = P("r", 2, 10, "even")
R_ODD = P("r", 1, 9, "odd")
NO_PARAMS: tuple[ParamSpec, ...] = ()


def qsel(values: tuple[float, ...]) -> Callable[[Mapping[str, int]], float]:
    """Look up a real grid value by the 1-based index parameter k."""

    def pick(p: Mapping[str, int]) -> float:
        return values[p["k"] - 1]

    return pick


__all__ = [
    "PI",
    "PI2",
    "PI3",
    "SQRT5",
    "SQRT2",
    "ALPHA",
    "BETA",
    "LN_ALPHA",
    "LN2",
    "LN3_2",
    "HALF_PI",
    "TOL_FINITE",
    "TOL_TRANSFORMED",
    "F",
    "L",
    "apow",
    "bpow",
    "catalan",
    "li2",
    "cl2",
    "case",
    "P",
    "R_ANY",
    "R_EVEN",
    "R_ODD",
    "NO_PARAMS",
    "qsel",
    "FINITE",
    "HALF_LINE",
    "TAN_HALFPI",
    "Integrand",
    "math",
]
