"""Catalog of verifiable integral identities: parameter domains, integrand
builders, closed-form evaluators, and the machinery binding them.

Each catalog entry pairs a left-hand integrand family with the matching
closed-form right side, quantified over small integer parameters (r, n,
m, k), frequently with a parity split between even and odd r.  Entries
carry an anchor string naming the identity, a quadrature strategy, and a
default absolute tolerance.  default_grid() enumerates the verification
assignments; instantiate() binds one assignment, evaluating all exact
sequence values and converting to binary64 as late as possible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping

from .quad import Integrand

PARAM_NAMES = ("r", "n", "m", "k")


class CatalogError(KeyError):
    """Unknown catalog identifier."""


class ParamError(ValueError):
    """Assignment violates a parameter specification."""


@dataclass(frozen=True)
class ParamSpec:
    """Validity/verification range of one integer parameter."""

    name: str
    min: int
    max: int
    parity: str = "any"
    exclusions: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.name not in PARAM_NAMES:
            raise ValueError(f"parameter name must be one of {PARAM_NAMES}")
        if self.min > self.max:
            raise ValueError(f"{self.name}: min {self.min} > max {self.max}")
        if self.parity not in ("any", "even", "odd"):
            raise ValueError(f"{self.name}: bad parity {self.parity!r}")
        for x in self.exclusions:
            if not (self.min <= x <= self.max):
                raise ValueError(f"{self.name}: exclusion {x} outside range")

    def admits(self, value: int) -> bool:
        if not (self.min <= value <= self.max):
            return False
        if self.parity == "even" and value % 2 != 0:
            return False
        if self.parity == "odd" and value % 2 == 0:
            return False
        return value not in self.exclusions

    def values(self, lo: int | None = None, hi: int | None = None) -> list[int]:
        lo = self.min if lo is None else max(lo, self.min)
        hi = self.max if hi is None else min(hi, self.max)
        return [v for v in range(lo, hi + 1) if self.admits(v)]

    def describe(self, value: int) -> str:
        parts = [f"{self.min}..{self.max}"]
        if self.parity != "any":
            parts.append(self.parity)
        if self.exclusions:
            parts.append("excluding " + ",".join(map(str, self.exclusions)))
        return f"{self.name}={value} violates {self.name} in {' '.join(parts)}"


@dataclass(frozen=True)
class Strategy:
    """How the left side is integrated."""

    kind: str  # FINITE | HALF_LINE | TAN_HALFPI
    a: float = 0.0
    b: float = 0.0

    def label(self) -> str:
        if self.kind == "FINITE":
            return f"FINITE({self.a:g},{self.b:g})"
        return self.kind


def FINITE(a: float, b: float) -> Strategy:
    return Strategy("FINITE", a, b)


HALF_LINE = Strategy("HALF_LINE")
TAN_HALFPI = Strategy("TAN_HALFPI")


@dataclass(frozen=True)
class IdentityCase:
    """One catalog row: integrand family, closed form, parameter domain."""

    id: str
    anchor: str
    params: tuple[ParamSpec, ...]
    strategy: Strategy
    lhs_builder: Callable[[Mapping[str, int]], Integrand]
    rhs_eval: Callable[[Mapping[str, int]], float]
    default_tol: float
    note: str = ""


@dataclass(frozen=True)
class BoundInstance:
    """A catalog row bound to one concrete assignment."""

    case_id: str
    assignment: dict[str, int]
    integrand: Integrand
    rhs: float
    tol: float
    strategy: Strategy


_CATALOG: list[IdentityCase] | None = None
_INDEX: dict[str, IdentityCase] = {}


def catalog() -> list[IdentityCase]:
    """The full identity catalog, in stable declaration order."""
    global _CATALOG
    if _CATALOG is None:
        from .catalog import build_catalog

        cases = build_catalog()
        seen: set[str] = set()
        for c in cases:
            if c.id in seen:
                raise RuntimeError(f"duplicate catalog id {c.id}")
            seen.add(c.id)
            _INDEX[c.id] = c
        _CATALOG = cases
    return _CATALOG


def get_case(case_id: str) -> IdentityCase:
    catalog()
    try:
        return _INDEX[case_id]
    except KeyError:
        raise CatalogError(f"unknown catalog id {case_id!r}") from None


def _validate(case: IdentityCase, assignment: Mapping[str, int]) -> dict[str, int]:
    wanted = {p.name for p in case.params}
    got = set(assignment)
    if got - wanted:
        raise ParamError(
            f"{case.id}: unexpected parameter(s) {sorted(got - wanted)}; expects {sorted(wanted)}"
        )
    if wanted - got:
        raise ParamError(f"{case.id}: missing parameter(s) {sorted(wanted - got)}")
    clean: dict[str, int] = {}
    for spec in case.params:
        value = assignment[spec.name]
        if not isinstance(value, int):
            raise ParamError(f"{case.id}: {spec.name} must be an int")
        if not spec.admits(value):
            raise ParamError(f"{case.id}: {spec.describe(value)}")
        clean[spec.name] = value
    return clean


def instantiate(case_id: str, assignment: Mapping[str, int]) -> BoundInstance:
    """Bind a catalog row to one assignment; validates parity/range."""
    case = get_case(case_id)
    clean = _validate(case, assignment)
    return BoundInstance(
        case_id=case.id,
        assignment=clean,
        integrand=case.lhs_builder(clean),
        rhs=case.rhs_eval(clean),
        tol=case.default_tol,
        strategy=case.strategy,
    )


def default_grid(
    case_id: str, overrides: Mapping[str, tuple[int, int]] | None = None
) -> list[dict[str, int]]:
    """Cross product of the per-parameter verification ranges.

    overrides maps a parameter name to an inclusive (lo, hi) window that
    is intersected with the declared range; parity and exclusions always
    stay in force.
    """
    case = get_case(case_id)
    axes: list[list[tuple[str, int]]] = []
    for spec in case.params:
        lo = hi = None
        if overrides and spec.name in overrides:
            lo, hi = overrides[spec.name]
        values = spec.values(lo, hi)
        axes.append([(spec.name, v) for v in values])
    if not axes:
        return [{}]
    grid = [dict(combo) for combo in itertools.product(*axes)]
    return grid


def catalog_entries() -> list[dict]:
    """Export view: id, anchor, params, strategy, default_tol per row."""
    rows = []
    for c in catalog():
        rows.append(
            {
                "id": c.id,
                "anchor": c.anchor,
                "params": [
                    {
                        "name": p.name,
                        "parity": p.parity,
                        "min": p.min,
                        "max": p.max,
                        "exclusions": list(p.exclusions),
                    }
                    for p in c.params
                ],
                "strategy": c.strategy.label(),
                "default_tol": c.default_tol,
            }
        )
    return rows


__all__ = [
    "CatalogError",
    "ParamError",
    "ParamSpec",
    "Strategy",
    "FINITE",
    "HALF_LINE",
    "TAN_HALFPI",
    "IdentityCase",
    "BoundInstance",
    "catalog",
    "get_case",
    "instantiate",
    "default_grid",
    "catalog_entries",
]
