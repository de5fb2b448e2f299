"""Assembly of the full identity catalog, grouped by integrand family."""

from __future__ import annotations

from ..registry import IdentityCase
from . import halfline, lewin, sine, stewart, tangent, xcos, xsine, xsq_cos2x, xsq_halfpi, xsq_pi

_SECTIONS = (
    lewin,
    stewart,
    tangent,
    halfline,
    sine,
    xsine,
    xsq_halfpi,
    xsq_pi,
    xsq_cos2x,
    xcos,
)


def build_catalog() -> list[IdentityCase]:
    cases: list[IdentityCase] = []
    for section in _SECTIONS:
        cases.extend(section.cases())
    return cases
