import cmath
import math

import pytest

from fibint.exact_seq import fib, golden_powers, lucas
from fibint.fib_complex import (
    LN_ALPHA,
    central_difference,
    deriv_residual,
    fib_fn,
    fib_fn_deriv,
    lucas_fn,
    lucas_fn_deriv,
)

SQRT5 = math.sqrt(5.0)


def test_integer_values():
    assert fib_fn(7) == pytest.approx(13 + 0j, abs=1e-9)
    assert fib_fn(0) == pytest.approx(0j, abs=1e-12)
    assert lucas_fn(4) == pytest.approx(7 + 0j, abs=1e-9)
    assert lucas_fn(0) == pytest.approx(2 + 0j, abs=1e-12)
    assert lucas_fn(-3) == pytest.approx(-4 + 0j, abs=1e-9)


def test_interpolates_sequences_on_range():
    for j in range(-20, 21):
        f = fib_fn(j)
        l = lucas_fn(j)
        assert abs(f.real - fib(j)) < 1e-8 and abs(f.imag) < 1e-8
        assert abs(l.real - lucas(j)) < 1e-8 and abs(l.imag) < 1e-8


def test_half_integer_consistency():
    # l^2 - 5 f^2 = 4 (alpha beta)^x = 4 e^{i pi x} under the principal branch
    x = 0.5
    val = lucas_fn(x) ** 2 - 5.0 * fib_fn(x) ** 2
    assert val == pytest.approx(4.0 * cmath.exp(1j * math.pi * x), abs=1e-10)


def test_derivative_closed_forms_at_integers():
    d0 = fib_fn_deriv(0)
    assert d0.real == pytest.approx(2.0 * LN_ALPHA / SQRT5, abs=1e-12)
    assert d0.imag == pytest.approx(-math.pi / SQRT5, abs=1e-12)

    l0 = lucas_fn_deriv(0)
    assert l0.real == pytest.approx(0.0, abs=1e-12)
    assert l0.imag == pytest.approx(math.pi, abs=1e-12)

    b2 = golden_powers(2).beta_pow
    assert fib_fn_deriv(2).imag == pytest.approx(-math.pi * b2 / SQRT5, abs=1e-12)

    l3 = lucas_fn_deriv(3)
    assert l3.real == pytest.approx(2.0 * SQRT5 * LN_ALPHA, abs=1e-12)
    assert l3.imag == pytest.approx(math.pi * golden_powers(3).beta_pow, abs=1e-12)

    for j in range(0, 11):
        df = fib_fn_deriv(j)
        dl = lucas_fn_deriv(j)
        bj = golden_powers(j).beta_pow
        assert df.real == pytest.approx(lucas(j) * LN_ALPHA / SQRT5, rel=1e-12, abs=1e-12)
        assert df.imag == pytest.approx(-math.pi * bj / SQRT5, rel=1e-12, abs=1e-12)
        assert dl.real == pytest.approx(fib(j) * SQRT5 * LN_ALPHA, rel=1e-12, abs=1e-12)
        assert dl.imag == pytest.approx(math.pi * bj, rel=1e-12, abs=1e-12)


def test_finite_difference_oracle():
    for j in range(0, 13):
        for h in (1e-4, 1e-5, 1e-6):
            rf, rl = deriv_residual(float(j), h)
            assert rf <= 1e-6 or rf <= 10.0 * h * h * abs(fib_fn(j))
            assert rf < 1e-4 and rl < 1e-4
        rf5, rl5 = deriv_residual(float(j), 1e-5)
        assert rf5 <= 1e-6 and rl5 <= 1e-6


def test_second_order_convergence():
    # halving h shrinks the central-difference residual about 4x until rounding
    for j in (0, 3, 7):
        r1, _ = deriv_residual(float(j), 1e-4)
        r2, _ = deriv_residual(float(j), 5e-5)
        assert r2 == pytest.approx(r1 / 4.0, rel=0.15)


def test_branch_continuity():
    # no jumps along the real axis at step 1e-3
    h = 1e-3
    x = -5.0
    prev = fib_fn(x)
    while x < 5.0:
        x += h
        cur = fib_fn(x)
        bound = 10.0 * h * abs(fib_fn_deriv(x)) + 1e-9
        assert abs(cur - prev) <= bound
        prev = cur


def test_central_difference_helper():
    d = central_difference(fib_fn, 2.0, 1e-6)
    assert abs(d - fib_fn_deriv(2.0)) < 1e-8
    with pytest.raises(ValueError):
        central_difference(fib_fn, 2.0, 0.0)


def test_argument_domain():
    with pytest.raises(ValueError):
        fib_fn(201.0)
    with pytest.raises(ValueError):
        lucas_fn_deriv(math.inf)
