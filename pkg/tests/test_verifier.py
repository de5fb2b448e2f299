import math

import pytest

from fibint import registry, verifier
from fibint.quad import Integrand, integrate_finite
from fibint.specfun import LN_ALPHA, constants

PI = math.pi
SQRT5 = math.sqrt(5.0)


def test_verify_instance_catalan_anchor():
    inst = registry.instantiate("S5.FOURG", {})
    res = verifier.verify_instance(inst)
    assert res.passed
    assert res.rhs == pytest.approx(4.0 * constants().catalan, rel=1e-14)
    assert res.abs_err <= 1e-7
    assert res.quad_evals > 0


def test_verify_instance_pi_cubed_anchor():
    inst = registry.instantiate("S8.AEKFMPM.PART", {})
    assert inst.rhs == pytest.approx(2.0 * PI**3 / (5.0 * SQRT5) - PI * LN_ALPHA**2 / SQRT5, rel=1e-14)
    res = verifier.verify_instance(inst)
    assert res.passed and res.abs_err <= 1e-7


def test_verify_instance_polynomial_cross_check():
    inst = registry.instantiate("S2.BJU5530", {"k": 1, "n": 3})
    res = verifier.verify_instance(inst)
    assert res.passed
    assert res.lhs == pytest.approx(8.0 * SQRT5 / 3.0, abs=1e-9)


def test_run_section_filters():
    rep = verifier.run("S5.*")
    assert rep.n_fail == 0 and rep.n_pass > 0
    rep = verifier.run("LEWIN.*")
    assert rep.n_fail == 0
    with pytest.raises(verifier.EmptyFilterError):
        verifier.run("NOSUCH")


def test_report_counts_consistent():
    rep = verifier.run("S1.*")
    assert rep.n_pass + rep.n_fail == len(rep.results)
    assert rep.wall_time >= 0.0


def test_determinism_and_thread_equivalence():
    a = verifier.run("S7.*")
    b = verifier.run("S7.*")
    assert a.results == b.results  # bitwise-identical payloads
    c = verifier.run("S7.*", threads=4)
    assert a.results == c.results


def test_results_sorted_by_case_then_assignment():
    rep = verifier.run("S4.KJ2W249*")
    keys = [r.sort_key() for r in rep.results]
    assert keys == sorted(keys)


def test_tolerance_discipline():
    inst = registry.instantiate("S2.BJU5530", {"k": 5, "n": 8})
    res = verifier.verify_instance(inst)
    assert res.tol == pytest.approx(max(inst.tol, verifier.RTOL * abs(inst.rhs)))
    assert res.passed


def test_negative_control_flips():
    inst = registry.instantiate("S5.FOURG", {})
    res = verifier.verify_instance(inst)
    assert res.passed
    wrong = registry.BoundInstance(
        inst.case_id, inst.assignment, inst.integrand, inst.rhs * (1.0 + 1e-5), inst.tol, inst.strategy
    )
    res_wrong = verifier.verify_instance(wrong)
    assert not res_wrong.passed


def test_grid_and_tol_overrides():
    rep = verifier.run("S3.M6BI7TA", grid_override={"r": (2, 4)})
    assert len(rep.results) == 3
    rep = verifier.run("S5.FOURG", tol_override=1e-5)
    assert rep.results[0].tol == pytest.approx(1e-5)


def test_failure_is_reported_not_raised():
    bad = registry.BoundInstance(
        "SYNTH.BAD",
        {},
        Integrand(lambda x: float("nan")),
        1.0,
        1e-7,
        registry.FINITE(0.0, 1.0),
    )
    res = verifier.verify_instance(bad)
    assert not res.passed
    assert res.note != ""


def test_structural_lemma_from_own_quadratures():
    # recombination of the two half-kernels equals the combined kernel,
    # as a relation among this engine's own integral values
    from fibint.exact_seq import fib

    for r in range(1, 7):
        a = fib(r) * SQRT5

        def minus(x, _a=a):
            return x * x * math.cos(x) / (_a - 2.0 * math.cos(2.0 * x))

        def plus(x, _a=a):
            return x * x * math.cos(x) / (_a + 2.0 * math.cos(2.0 * x))

        def combined(x, _a=a):
            c = math.cos(2.0 * x)
            return x * x * math.cos(x) / (_a * _a - 4.0 * c * c)

        im = integrate_finite(Integrand(minus), 0.0, PI, 1e-12).value
        ip = integrate_finite(Integrand(plus, (PI / 2.0,)), 0.0, PI, 1e-12).value
        ic = integrate_finite(Integrand(combined, (PI / 2.0,)), 0.0, PI, 1e-12).value
        assert (im + ip) / (2.0 * a) == pytest.approx(ic, abs=1e-9)


def test_half_full_interval_relation():
    rep = verifier.run("S6.FM2DODR")
    assert rep.n_fail == 0
    assert all(r.tol <= 1e-8 for r in rep.results)


def test_lemma2_check():
    res = verifier.lemma2_check(0, 10, 1e-5)
    assert len(res) == 11
    assert all(r.fib_resid <= 1e-6 and r.lucas_resid <= 1e-6 for r in res)
    coarse = verifier.lemma2_check(0, 10, 1e-4)
    fine = verifier.lemma2_check(0, 10, 5e-5)
    for c, f in zip(coarse, fine):
        if c.fib_resid > 1e-12:
            assert f.fib_resid == pytest.approx(c.fib_resid / 4.0, rel=0.2)
    with pytest.raises(ValueError):
        verifier.lemma2_check(0, 5, 1e-8)
    with pytest.raises(ValueError):
        verifier.lemma2_check(5, 0)


def test_thread_env_parsing(monkeypatch):
    monkeypatch.setenv("FIBINT_THREADS", "3")
    rep = verifier.run("S5.FOURG")
    assert rep.n_fail == 0
    monkeypatch.setenv("FIBINT_THREADS", "zero")
    with pytest.raises(ValueError):
        verifier.run("S5.FOURG")
    monkeypatch.setenv("FIBINT_THREADS", "-2")
    with pytest.raises(ValueError):
        verifier.run("S5.FOURG")
