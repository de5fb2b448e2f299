import math

import pytest

from fibint import registry
from fibint.exact_seq import SQRT5, fib, lucas
from fibint.registry import CatalogError, ParamError, ParamSpec
from fibint.specfun import LN_ALPHA, constants

PI = math.pi


def test_catalog_size_and_ids():
    cases = registry.catalog()
    assert len(cases) >= 60
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids))
    assert "S2.BJU5530" in ids
    assert "LEWIN.E11" in ids
    assert registry.get_case("S2.BJU5530").anchor == "eq. (bju5530)"


def test_catalog_entries_export_fields():
    entries = registry.catalog_entries()
    assert len(entries) == len(registry.catalog())
    for e in entries:
        assert set(e) == {"id", "anchor", "params", "strategy", "default_tol"}
        for p in e["params"]:
            assert set(p) == {"name", "parity", "min", "max", "exclusions"}


def test_instantiate_known_values():
    inst = registry.instantiate("S6.RLJJ8TO", {"r": 1})
    assert inst.rhs == pytest.approx(2.0 * PI * SQRT5 * LN_ALPHA / (5.0 * fib(4)), rel=1e-14)

    inst = registry.instantiate("S5.FOURG", {})
    assert inst.rhs == pytest.approx(4.0 * constants().catalan, rel=1e-14)

    inst = registry.instantiate("S6.FMK6KRX.PART", {})
    assert inst.rhs == pytest.approx(PI / 2.0 * math.atan(2.0), rel=1e-14)

    # degree-one polynomial instance, cross-checked by expanding the integrand:
    # (1 + x sqrt5)(sqrt5 + x) integrates to (8/3) sqrt5 over (-1, 1)
    inst = registry.instantiate("S2.BJU5530", {"k": 1, "n": 3})
    expected = 2.0**3 / (2.0 * SQRT5) * (lucas(3) / 1.0 - fib(3) * lucas(1) / 3.0)
    assert inst.rhs == pytest.approx(expected, rel=1e-14)
    assert inst.rhs == pytest.approx(8.0 * SQRT5 / 3.0, rel=1e-14)


def test_instantiate_rejects_bad_assignments():
    with pytest.raises(CatalogError):
        registry.instantiate("NOSUCH.ID", {})
    with pytest.raises(ParamError, match="n"):
        registry.instantiate("S2.BJU5530", {"k": 2, "n": 1})
    with pytest.raises(ParamError):
        registry.instantiate("S2.BJU5530", {"k": 2})
    with pytest.raises(ParamError):
        registry.instantiate("S5.FOURG", {"r": 1})
    with pytest.raises(ParamError):
        registry.instantiate("S2.BJU5530", {"k": 2, "n": 3, "m": 1})


def test_parity_gates_every_constrained_case():
    for case in registry.catalog():
        for spec in case.params:
            if spec.parity == "any":
                continue
            bad = spec.min + 1  # flips parity, stays in range for our grids
            assert spec.min <= bad <= spec.max
            assignment = {}
            for other in case.params:
                assignment[other.name] = other.values()[0]
            assignment[spec.name] = bad
            with pytest.raises(ParamError, match=spec.name):
                registry.instantiate(case.id, assignment)


def test_default_grids():
    grid = registry.default_grid("S3.M6BI7TA")
    assert [g["r"] for g in grid] == list(range(1, 11))

    grid = registry.default_grid("S2.DJFHEP4")
    assert [g["n"] for g in grid] == list(range(1, 9))

    grid = registry.default_grid("S4.KJ2W249")
    assert len(grid) == 5 * 8
    assert {g["m"] for g in grid} == set(range(0, 5))
    assert {g["r"] for g in grid} == set(range(2, 10))

    assert registry.default_grid("S5.FOURG") == [{}]


def test_grid_overrides_respect_parity_and_range():
    grid = registry.default_grid("S3.M6BI7TA", {"r": (2, 6)})
    assert [g["r"] for g in grid] == [2, 3, 4, 5, 6]
    grid = registry.default_grid("S5.J7HZXMA.E", {"r": (1, 7)})
    assert [g["r"] for g in grid] == [2, 4, 6]
    grid = registry.default_grid("S3.M6BI7TA", {"r": (8, 99)})
    assert [g["r"] for g in grid] == [8, 9, 10]
    with pytest.raises(CatalogError):
        registry.default_grid("NOSUCH")


def test_param_spec_validation():
    with pytest.raises(ValueError):
        ParamSpec("x", 0, 1)
    with pytest.raises(ValueError):
        ParamSpec("r", 3, 1)
    with pytest.raises(ValueError):
        ParamSpec("r", 1, 5, "sometimes")
    with pytest.raises(ValueError):
        ParamSpec("r", 1, 5, exclusions=(9,))
    spec = ParamSpec("r", 1, 9, "odd", exclusions=(5,))
    assert spec.values() == [1, 3, 7, 9]


def test_rhs_finite_over_all_grids():
    for case in registry.catalog():
        for assignment in registry.default_grid(case.id):
            rhs = case.rhs_eval(assignment)
            assert math.isfinite(rhs), f"{case.id} {assignment}"


def test_strategies_are_well_formed():
    for case in registry.catalog():
        assert case.strategy.kind in ("FINITE", "HALF_LINE", "TAN_HALFPI")
        if case.strategy.kind == "FINITE":
            assert case.strategy.a < case.strategy.b
        assert 1e-13 <= case.default_tol <= 1e-3


def test_ambiguous_branch_case_is_flagged():
    assert registry.get_case("S3.K2XKUE3").note != ""
