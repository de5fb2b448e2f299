"""Dilogarithm, Clausen's function and named constants.

li2_real covers every real argument x <= 1, including large negative x:
the defining series Li2(z) = sum z^k/k^2 is used on |x| <= 1/2, the
reflection Li2(x) + Li2(1-x) = pi^2/6 - ln(x)ln(1-x) on (1/2, 1], a
Landen step Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2 on (-1, -1/2), and the
inversion Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x) for x < -1.

li2_complex works on the closed unit disk: direct series near 0,
reflection near 1, and otherwise the Bernoulli-number series in
u = -ln(1-z), which converges for |u| < 2*pi.

cl2 evaluates Clausen's function Cl2(t) = sum sin(n t)/n^2 through two
Bernoulli-type expansions, one about t = 0 (leading behaviour
t - t*ln|t|) and one about t = pi, after odd/2pi-periodic reduction.
The defining sine series alone converges far too slowly for 1e-12 work.

Catalan's constant is computed once from its alternating series
sum (-1)^j/(2j+1)^2 under CVZ acceleration and memoized; thereafter the
record returned by constants() is read-only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

PI = math.pi
SQRT5 = math.sqrt(5.0)
ALPHA = (1.0 + SQRT5) / 2.0
BETA = (1.0 - SQRT5) / 2.0
LN_ALPHA = math.log(ALPHA)
PI2_6 = PI * PI / 6.0


@dataclass(frozen=True)
class SpecFunConfig:
    """Stopping control for the direct series evaluators."""

    series_tol: float = 1e-16
    max_terms: int = 200

    def __post_init__(self) -> None:
        if not (0.0 < self.series_tol <= 1e-8):
            raise ValueError("series_tol must lie in (0, 1e-8]")
        if self.max_terms < 32:
            raise ValueError("max_terms must be at least 32")


DEFAULT_CONFIG = SpecFunConfig()


def _bernoulli(n: int) -> list[Fraction]:
    """B_0 .. B_n (B_1 = -1/2) via the defining recurrence, exact."""
    b = [Fraction(0)] * (n + 1)
    b[0] = Fraction(1)
    for m in range(1, n + 1):
        acc = Fraction(0)
        for k in range(m):
            acc += math.comb(m + 1, k) * b[k]
        b[m] = -acc / (m + 1)
    return b


@lru_cache(maxsize=1)
def _tables() -> tuple[tuple[float, ...], tuple[float, ...], tuple[float, ...]]:
    # li2:  Li2(z) = sum_k B_k u^{k+1}/(k+1)!,  u = -ln(1-z)
    # cl2 about 0:   Cl2(t) = t - t ln t + sum_n c0_n t^{2n+1}
    # cl2 about pi:  Cl2(pi - p) = p ln 2 - sum_m cp_m p^{2m+1}
    bern = _bernoulli(42)
    li2 = tuple(
        float(bern[k] / math.factorial(k + 1)) for k in range(41)
    )
    c0 = tuple(
        float(
            (-1) ** (n + 1)
            * bern[2 * n]
            / (2 * math.factorial(2 * n) * n * (2 * n + 1))
        )
        for n in range(1, 21)
    )
    cp = tuple(
        float(
            (-1) ** (m + 1)
            * (4**m - 1)
            * bern[2 * m]
            / (2 * math.factorial(2 * m) * m * (2 * m + 1))
        )
        for m in range(1, 21)
    )
    return li2, c0, cp


def _li2_series_real(x: float, cfg: SpecFunConfig) -> float:
    total = 0.0
    zk = x
    for k in range(1, cfg.max_terms + 1):
        term = zk / (k * k)
        total += term
        if abs(term) < cfg.series_tol:
            break
        zk *= x
    return total


def li2_real(x: float, config: SpecFunConfig | None = None) -> float:
    """Real dilogarithm Li2(x) for x <= 1."""
    cfg = config or DEFAULT_CONFIG
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("argument must be finite")
    if x > 1.0:
        raise ValueError(f"li2_real requires x <= 1, got {x}")
    if x == 1.0:
        return PI2_6
    if x == 0.0:
        return 0.0
    if x > 0.5:
        # reflection onto (0, 1/2)
        y = 1.0 - x
        return PI2_6 - math.log(x) * math.log(y) - _li2_series_real(y, cfg)
    if x >= -0.5:
        return _li2_series_real(x, cfg)
    if x >= -1.0:
        # Landen: x/(x-1) lands in (0, 1/2)
        y = x / (x - 1.0)
        return -_li2_series_real(y, cfg) - 0.5 * math.log1p(-x) ** 2
    inv = li2_real(1.0 / x, cfg)
    return -PI2_6 - 0.5 * math.log(-x) ** 2 - inv


def _li2_series_complex(z: complex, cfg: SpecFunConfig) -> complex:
    total = 0.0 + 0.0j
    zk = z
    for k in range(1, cfg.max_terms + 1):
        term = zk / (k * k)
        total += term
        if abs(term) < cfg.series_tol:
            break
        zk *= z
    return total


def _li2_bernoulli(z: complex, cfg: SpecFunConfig) -> complex:
    coefs = _tables()[0]
    u = -_clog(1.0 - z)
    total = 0.0 + 0.0j
    up = u
    for k, ck in enumerate(coefs):
        if ck != 0.0:
            term = ck * up
            total += term
            if k > 2 and abs(term) < cfg.series_tol:
                break
        up *= u
    return total


def _clog(z: complex) -> complex:
    return complex(math.log(abs(z)), math.atan2(z.imag, z.real))


def li2_complex(z: complex, config: SpecFunConfig | None = None) -> complex:
    """Principal-branch dilogarithm on the closed unit disk |z| <= 1."""
    cfg = config or DEFAULT_CONFIG
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError("argument must be finite")
    if abs(z) > 1.0 + 1e-12:
        raise ValueError(f"li2_complex requires |z| <= 1, got |z| = {abs(z)}")
    if z == 0:
        return 0.0 + 0.0j
    if z == 1:
        return complex(PI2_6, 0.0)
    if abs(z) <= 0.5:
        return _li2_series_complex(z, cfg)
    if abs(1.0 - z) <= 0.5:
        w = 1.0 - z
        return PI2_6 - _clog(z) * _clog(w) - _li2_series_complex(w, cfg)
    return _li2_bernoulli(z, cfg)


def _cl2_core(t: float, cfg: SpecFunConfig) -> float:
    """Cl2 on [0, pi] via the expansion about 0 or about pi."""
    _, c0, cp = _tables()
    if t == 0.0 or t == PI:
        return 0.0
    if t <= 0.5 * PI:
        t2 = t * t
        acc = t - t * math.log(t)
        tp = t * t2
        for cn in c0:
            term = cn * tp
            acc += term
            if abs(term) < cfg.series_tol:
                break
            tp *= t2
        return acc
    p = PI - t
    p2 = p * p
    acc = p * math.log(2.0)
    pp = p * p2
    for cm in cp:
        term = cm * pp
        acc -= term
        if abs(term) < cfg.series_tol:
            break
        pp *= p2
    return acc


def cl2(theta: float, config: SpecFunConfig | None = None) -> float:
    """Clausen's function Cl2(theta); odd, 2*pi-periodic, Cl2(pi/2) = G."""
    cfg = config or DEFAULT_CONFIG
    theta = float(theta)
    if not math.isfinite(theta):
        raise ValueError("argument must be finite")
    t = math.fmod(theta, 2.0 * PI)
    if t < 0.0:
        t += 2.0 * PI
    if t > PI:
        return -_cl2_core(2.0 * PI - t, cfg)
    return _cl2_core(t, cfg)


def _catalan_cvz(n: int = 30) -> float:
    # CVZ acceleration of the alternating series sum (-1)^k / (2k+1)^2;
    # error decays like (3 + sqrt(8))^(-n)
    d = (3.0 + math.sqrt(8.0)) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c / ((2 * k + 1) * (2 * k + 1))
        b = (k + n) * (k - n) * b / ((k + 0.5) * (k + 1))
    return s / d


@dataclass(frozen=True)
class Constants:
    alpha: float
    beta: float
    ln_alpha: float
    sqrt5: float
    catalan: float


@lru_cache(maxsize=1)
def constants() -> Constants:
    """Named constants; Catalan's G is computed once and memoized."""
    return Constants(
        alpha=ALPHA,
        beta=BETA,
        ln_alpha=LN_ALPHA,
        sqrt5=SQRT5,
        catalan=_catalan_cvz(),
    )


__all__ = [
    "SpecFunConfig",
    "DEFAULT_CONFIG",
    "Constants",
    "constants",
    "li2_real",
    "li2_complex",
    "cl2",
]
