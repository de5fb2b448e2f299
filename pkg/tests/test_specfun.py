import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fibint.exact_seq import fib, golden_powers, lucas
from fibint.quad import Integrand, integrate_finite
from fibint.specfun import (
    ALPHA,
    BETA,
    LN_ALPHA,
    SpecFunConfig,
    cl2,
    constants,
    li2_complex,
    li2_real,
)

PI = math.pi


def _li2_series_oracle(x, terms=5000):
    return sum(x**k / (k * k) for k in range(1, terms + 1))


def _li2_series_oracle_c(z, terms=5000):
    total = 0j
    zk = z
    for k in range(1, terms + 1):
        total += zk / (k * k)
        zk *= z
    return total


def test_li2_special_points():
    assert li2_real(0.0) == 0.0
    assert li2_real(1.0) == pytest.approx(PI * PI / 6.0, abs=1e-15)
    assert li2_real(-1.0) == pytest.approx(-PI * PI / 12.0, abs=1e-14)


def test_li2_closed_values():
    b = BETA
    assert li2_real(0.5) == pytest.approx(PI * PI / 12.0 - 0.5 * math.log(2.0) ** 2, abs=1e-12)
    assert li2_real(b * b) == pytest.approx(PI * PI / 15.0 - LN_ALPHA**2, abs=1e-12)
    assert li2_real(-b) == pytest.approx(PI * PI / 10.0 - LN_ALPHA**2, abs=1e-12)
    assert li2_real(b) == pytest.approx(-PI * PI / 15.0 + 0.5 * LN_ALPHA**2, abs=1e-12)


def test_li2_matches_brute_force_series():
    x = -0.95
    while x <= 0.95:
        assert li2_real(x) == pytest.approx(_li2_series_oracle(x), abs=1e-12)
        x += 0.05


def test_li2_matches_defining_integral():
    # Li2(x) = -int_0^x ln(1-t)/t dt, an oracle independent of the series path
    for x in (-30.0, -2.0, -0.7, 0.3, 0.9):
        def f(u, _x=x):
            return -math.log1p(-_x * u) / u

        res = integrate_finite(Integrand(f), 0.0, 1.0, 1e-12)
        assert res.converged
        assert li2_real(x) == pytest.approx(res.value, abs=5e-12)


def test_li2_domain():
    with pytest.raises(ValueError):
        li2_real(1.0 + 1e-9)
    with pytest.raises(ValueError):
        li2_real(math.nan)


def test_li2_duplication_fixed_points():
    for x in (0.1, 0.3, BETA * BETA, -BETA):
        assert 0.5 * li2_real(x * x) - li2_real(x) - li2_real(-x) == pytest.approx(0.0, abs=1e-12)


@given(st.floats(min_value=-0.99, max_value=0.99))
@settings(max_examples=120, deadline=None)
def test_li2_duplication_property(x):
    assert 0.5 * li2_real(x * x) - li2_real(x) - li2_real(-x) == pytest.approx(0.0, abs=1e-12)


def test_li2_complex_series_agreement():
    for re in (-0.6, -0.2, 0.1, 0.5):
        for im in (-0.7, -0.1, 0.4, 0.8):
            z = complex(re, im)
            if abs(z) <= 0.95:
                assert abs(li2_complex(z) - _li2_series_oracle_c(z)) < 1e-12


def test_li2_complex_imaginary_axis():
    # real part halves into Li2(-x^2)/4; imaginary part mixes arctan, log, Cl2
    for x in (0.2, 0.5, 0.9, 1.0):
        v = li2_complex(complex(0.0, x))
        assert v.real == pytest.approx(0.25 * li2_real(-x * x), abs=1e-12)
        t = math.atan(x)
        expected = t * math.log(x) + 0.5 * cl2(2.0 * t) + 0.5 * cl2(PI - 2.0 * t)
        assert v.imag == pytest.approx(expected, abs=1e-12)
        vm = li2_complex(complex(0.0, -x))
        assert vm.real == pytest.approx(v.real, abs=1e-12)
        assert vm.imag == pytest.approx(-v.imag, abs=1e-12)


def test_li2_complex_domain():
    with pytest.raises(ValueError):
        li2_complex(1.2 + 0.1j)


def test_cl2_zeros_and_catalan():
    assert cl2(0.0) == 0.0
    assert cl2(PI) == pytest.approx(0.0, abs=1e-15)
    assert cl2(2.0 * PI) == pytest.approx(0.0, abs=1e-12)
    assert cl2(PI / 2.0) == pytest.approx(constants().catalan, abs=1e-13)
    assert cl2(3.0 * PI / 2.0) == pytest.approx(-constants().catalan, abs=1e-13)


def test_cl2_oddness():
    for t in (0.3, 1.1, 2.9):
        assert cl2(t) + cl2(2.0 * PI - t) == pytest.approx(0.0, abs=1e-12)
    for k in range(1, 100):
        t = PI * k / 100.0
        assert cl2(t) + cl2(-t) == pytest.approx(0.0, abs=1e-12)


def test_cl2_duplication_grid():
    for k in range(1, 100):
        t = PI * k / 100.0
        assert 0.5 * cl2(2.0 * t) - cl2(t) + cl2(PI - t) == pytest.approx(0.0, abs=1e-12)


def test_cl2_matches_defining_integral():
    # Cl2(t) = -int_0^t ln|2 sin(u/2)| du
    for t in (0.4, PI / 2.0, 2.2, 3.0):
        res = integrate_finite(Integrand(lambda u: -math.log(2.0 * math.sin(0.5 * u))), 0.0, t, 1e-12)
        assert res.converged
        assert cl2(t) == pytest.approx(res.value, abs=1e-11)


@given(st.floats(min_value=-20.0, max_value=20.0))
@settings(max_examples=100, deadline=None)
def test_cl2_periodicity(t):
    assert cl2(t + 2.0 * PI) == pytest.approx(cl2(t), abs=1e-11)


def test_arctan_beta_power_relations():
    for s in (2, 4, 6, 8):
        b = golden_powers(s).beta_pow
        assert math.atan(b) == pytest.approx(0.5 * math.atan(2.0 / (fib(s) * math.sqrt(5.0))), abs=1e-14)
    for s in (1, 3, 5, 7):
        b = golden_powers(s).beta_pow
        assert math.atan(-b) == pytest.approx(0.5 * math.atan(2.0 / lucas(s)), abs=1e-14)


def test_half_angle_triple_parity_split():
    # cos z = F_r sqrt5/L_r and sin z = 2 i^r/L_r, handled as a real check per parity
    sqrt5 = math.sqrt(5.0)
    for r in range(1, 9):
        b = golden_powers(r).beta_pow
        lr = lucas(r)
        fr = fib(r)
        if r % 2 == 0:
            z = 2.0 * math.atan(b)
            assert math.cos(z) == pytest.approx(fr * sqrt5 / lr, abs=1e-12)
            assert abs(math.sin(z)) == pytest.approx(2.0 / lr, abs=1e-12)
        else:
            # algebraic forms with q^2 = i^{2r} = -1
            b2 = golden_powers(2 * r).beta_pow
            assert (1.0 + b2) / (1.0 - b2) == pytest.approx(fr * sqrt5 / lr, abs=1e-12)
            assert 2.0 * b / (b2 - 1.0) == pytest.approx(2.0 / lr, abs=1e-12)


def test_constants_record():
    c = constants()
    assert c.alpha == pytest.approx(1.6180339887498949, abs=1e-15)
    assert c.beta == pytest.approx(-0.6180339887498949, abs=1e-15)
    assert c.ln_alpha == pytest.approx(0.48121182505960347, abs=1e-15)
    assert c.sqrt5 == math.sqrt(5.0)
    # oracle: accelerated alternating series against the direct partial sum bound
    direct = sum((-1.0) ** j / (2 * j + 1) ** 2 for j in range(200000))
    assert c.catalan == pytest.approx(direct, abs=1e-10)
    assert c.alpha == ALPHA


def test_config_validation():
    with pytest.raises(ValueError):
        SpecFunConfig(series_tol=0.0)
    with pytest.raises(ValueError):
        SpecFunConfig(series_tol=1e-7)
    with pytest.raises(ValueError):
        SpecFunConfig(max_terms=8)
    cfg = SpecFunConfig(series_tol=1e-12, max_terms=64)
    assert li2_real(0.4, cfg) == pytest.approx(li2_real(0.4), abs=1e-11)
