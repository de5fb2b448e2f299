"""Tangent-kernel identities on (0, pi/2): log-quartic kernels, their
differentiated rational forms, and the iterated-derivative families with
binomial polynomial numerators.

All rows use the tan x = t substitution, so integrands are written
directly as functions of t and the quartic 1 + L_{2r} t^2 + t^4 factors
as (alpha^{2r} + t^2)(beta^{2r} + t^2).
"""

from __future__ import annotations

from ._helpers import (
    ALPHA,
    BETA,
    F,
    L,
    LN_ALPHA,
    NO_PARAMS,
    P,
    PI,
    SQRT5,
    TAN_HALFPI,
    apow,
    bpow,
    case,
    math,
)

_ROK_Q = (F(4) / F(3), L(3) / L(2), F(5) / L(2), L(4) / F(5), F(6) / F(4), L(5) / L(3))


def _horner(coefs: list[float], u: float) -> float:
    acc = 0.0
    for c in reversed(coefs):
        acc = acc * u + c
    return acc


def _sum_poly(n: int, qsq: float) -> list[float]:
    # sum over even binomial slots: C(n,2k) (-1)^k/(2k+1) (u/qsq)^k
    return [
        math.comb(n, 2 * k) * (-1.0) ** k / ((2 * k + 1) * qsq**k)
        for k in range(n // 2 + 1)
    ]


def _quartic_poly(n: int, r: int, seq) -> list[float]:
    # numerator of the combined alpha/(-beta) instance: polynomial in u = t^2
    deg: dict[int, float] = {}
    for k in range(n // 2 + 1):
        ck = math.comb(n, 2 * k) * (-1.0) ** k / (2 * k + 1)
        for j in range(n + 2):
            c = ck * math.comb(n + 1, j) * seq(2 * n + 2 * k - 2 * j + r + 2)
            deg[k + j] = deg.get(k + j, 0.0) + c
    return [deg.get(d, 0.0) for d in range(max(deg) + 1)]


def cases():
    out = []
    r_any = (P("r", 1, 10),)

    # log of the quartic kernel
    def m6_lhs(p):
        l2r = L(2 * p["r"])
        return lambda t: math.log(1.0 + (l2r + t * t) * t * t)

    def m6_rhs(p):
        r = p["r"]
        if r % 2 == 1:
            return PI * math.log(F(r) * SQRT5 + 2.0)
        return PI * math.log(L(r) + 2.0)

    out.append(case("S3.M6BI7TA", "eq. (m6bi7ta)", TAN_HALFPI, r_any, m6_lhs, m6_rhs))

    # log of (alpha^{2r}+t^2)^2 over the quartic kernel
    def k2_lhs(p):
        r = p["r"]
        a2 = apow(2 * r)
        l2r = L(2 * r)

        def f(t):
            u = t * t
            return math.log((a2 + u) ** 2 / (1.0 + (l2r + u) * u))

        return f

    def k2_rhs(p):
        r = p["r"]
        if r % 2 == 1:
            return PI * r * LN_ALPHA
        return PI * math.log((1.0 + apow(r)) ** 2 / (L(r) + 2.0))

    out.append(
        case(
            "S3.K2XKUE3",
            "eq. (k2xkue3)",
            TAN_HALFPI,
            r_any,
            k2_lhs,
            k2_rhs,
            note="source text labels both branches odd and carries a stray 1+ in the "
            "squared factor; verified against pi*r*ln(alpha) for odd r, even branch as printed",
        )
    )

    # tan^2 over the quartic kernel
    def tan2_lhs(p):
        l2r = L(2 * p["r"])
        return lambda t: t * t / (1.0 + (l2r + t * t) * t * t)

    def tan2_rhs(p):
        r = p["r"]
        if r % 2 == 1:
            s = F(r) * SQRT5
            return PI / 2.0 / (s * (s + 2.0))
        return PI / 2.0 / (L(r) * (L(r) + 2.0))

    out.append(case("S3.TAN2", "cor. after eq. (m6bi7ta)", TAN_HALFPI, r_any, tan2_lhs, tan2_rhs))

    # reciprocal of the quartic kernel
    def recip_lhs(p):
        l2r = L(2 * p["r"])
        return lambda t: 1.0 / (1.0 + (l2r + t * t) * t * t)

    def recip_rhs(p):
        r = p["r"]
        l2r = L(2 * r)
        if r % 2 == 1:
            s = F(r) * SQRT5
            return PI / 2.0 / (l2r * (s + 2.0)) * (l2r + s - 2.0 / s)
        lr = L(r)
        return PI / 2.0 / (l2r * (lr + 2.0)) * (l2r + lr - 2.0 / lr)

    out.append(case("S3.RECIP", "cor. after eq. (t2k7wzu)", TAN_HALFPI, r_any, recip_lhs, recip_rhs))

    # n-fold derivative family at generic positive q
    def rok_lhs(p):
        n = p["n"]
        q = _ROK_Q[p["k"] - 1]
        coefs = _sum_poly(n, q * q)

        def f(t):
            u = t * t
            return _horner(coefs, u) / (q * q + u) ** (n + 1)

        return f

    def rok_rhs(p):
        n = p["n"]
        q = _ROK_Q[p["k"] - 1]
        return PI / (2.0 * (n + 1)) * (1.0 / q ** (2 * n + 1) - q / (q * (q + 1.0)) ** (n + 1))

    out.append(
        case(
            "S3.ROKBVU0",
            "eq. (rokbvu0)",
            TAN_HALFPI,
            (P("n", 0, 4), P("k", 1, len(_ROK_Q))),
            rok_lhs,
            rok_rhs,
        )
    )

    # the same family at q = L_r/(F_r sqrt5) and its reciprocal
    nr = (P("n", 0, 3), P("r", 1, 8))

    def pair_a_lhs(p):
        n, r = p["n"], p["r"]
        l2, f2 = L(r) ** 2, 5.0 * F(r) ** 2
        coefs = _sum_poly(n, l2 / f2)

        def f(t):
            u = t * t
            return _horner(coefs, u) / (l2 + f2 * u) ** (n + 1)

        return f

    def pair_a_rhs(p):
        n, r = p["n"], p["r"]
        lr = L(r)
        return (
            PI
            / (2.0 * (n + 1))
            / (lr**n * F(r) * SQRT5)
            * (1.0 / lr ** (n + 1) - 1.0 / (2.0 * apow(r)) ** (n + 1))
        )

    out.append(case("S3.LFPAIR.A", "theorem after eq. (rokbvu0), first member", TAN_HALFPI, nr, pair_a_lhs, pair_a_rhs))

    def pair_b_lhs(p):
        n, r = p["n"], p["r"]
        l2, f2 = L(r) ** 2, 5.0 * F(r) ** 2
        coefs = _sum_poly(n, f2 / l2)

        def f(t):
            u = t * t
            return _horner(coefs, u) / (f2 + l2 * u) ** (n + 1)

        return f

    def pair_b_rhs(p):
        n, r = p["n"], p["r"]
        s = F(r) * SQRT5
        return (
            PI
            / (2.0 * (n + 1))
            / (s**n * L(r))
            * (1.0 / s ** (n + 1) - 1.0 / (2.0 * apow(r)) ** (n + 1))
        )

    out.append(case("S3.LFPAIR.B", "theorem after eq. (rokbvu0), second member", TAN_HALFPI, nr, pair_b_lhs, pair_b_rhs))

    # squared special cases of the pair
    r8 = (P("r", 1, 8),)

    def sp1_lhs(p):
        l2, f2 = L(p["r"]) ** 2, 5.0 * F(p["r"]) ** 2
        return lambda t: 1.0 / (l2 + f2 * t * t) ** 2

    def sp1_rhs(p):
        r = p["r"]
        return PI / 4.0 / (F(2 * r) * SQRT5) * (1.0 / L(r) ** 2 - 1.0 / (4.0 * apow(2 * r)))

    out.append(case("S3.SPECIAL1", "n=1 special case, first member", TAN_HALFPI, r8, sp1_lhs, sp1_rhs))

    def sp2_lhs(p):
        l2, f2 = L(p["r"]) ** 2, 5.0 * F(p["r"]) ** 2
        return lambda t: 1.0 / (f2 + l2 * t * t) ** 2

    def sp2_rhs(p):
        r = p["r"]
        return PI / 4.0 / (F(2 * r) * SQRT5) * (1.0 / (5.0 * F(r) ** 2) - 1.0 / (4.0 * apow(2 * r)))

    out.append(case("S3.SPECIAL2", "n=1 special case, second member", TAN_HALFPI, r8, sp2_lhs, sp2_rhs))

    out.append(
        case(
            "S3.SPECIAL1.PART",
            "special value pi*alpha/16",
            TAN_HALFPI,
            NO_PARAMS,
            lambda p: lambda t: 1.0 / (1.0 + 5.0 * t * t) ** 2,
            lambda p: PI * ALPHA / 16.0,
        )
    )
    out.append(
        case(
            "S3.SPECIAL2.PART",
            "special value (pi/400)(2+7/alpha^2)",
            TAN_HALFPI,
            NO_PARAMS,
            lambda p: lambda t: 1.0 / (5.0 + t * t) ** 2,
            lambda p: PI / 400.0 * (2.0 + 7.0 / ALPHA**2),
        )
    )

    # combined golden-power instances with Lucas/Fibonacci numerators
    nrq = (P("n", 0, 3), P("r", -3, 6))

    def quartic_l_lhs(p):
        n = p["n"]
        coefs = _quartic_poly(n, p["r"], L)

        def f(t):
            u = t * t
            if u > 1e30:  # tail below 1e-60; avoids float-pow overflow in the kernel
                return 0.0
            return _horner(coefs, u) / (1.0 + (3.0 + u) * u) ** (n + 1)

        return f

    def quartic_l_rhs(p):
        n, r = p["n"], p["r"]
        return (
            PI
            / (2.0 * (n + 1))
            * (F(2 * n + r + 1) * SQRT5 - apow(r - 1) + (-1.0) ** (n + 1) * bpow(3 * n + r + 2))
        )

    out.append(case("S3.QUARTIC.L", "quartic theorem, Lucas member", TAN_HALFPI, nrq, quartic_l_lhs, quartic_l_rhs))

    def quartic_f_lhs(p):
        n = p["n"]
        coefs = _quartic_poly(n, p["r"], F)

        def f(t):
            u = t * t
            if u > 1e30:
                return 0.0
            return _horner(coefs, u) / (1.0 + (3.0 + u) * u) ** (n + 1)

        return f

    def quartic_f_rhs(p):
        n, r = p["n"], p["r"]
        return (
            PI
            / (2.0 * SQRT5 * (n + 1))
            * (L(2 * n + r + 1) - apow(r - 1) + (-1.0) ** n * bpow(3 * n + r + 2))
        )

    out.append(case("S3.QUARTIC.F", "quartic theorem, Fibonacci member", TAN_HALFPI, nrq, quartic_f_lhs, quartic_f_rhs))

    quartic_parts = (
        ("S3.QUARTIC.PART1", "special value -pi*beta^3/2", lambda t: (1.0 - t * t) / (1.0 + (3.0 + t * t) * t * t), -PI * BETA**3 / 2.0),
        ("S3.QUARTIC.PART2", "special value pi*beta^2/sqrt5", lambda t: 1.0 / (1.0 + (3.0 + t * t) * t * t), PI * BETA**2 / SQRT5),
        ("S3.QUARTIC.PART3", "special value -pi*beta^3/(2 sqrt5)", lambda t: t * t / (1.0 + (3.0 + t * t) * t * t), -PI * BETA**3 / (2.0 * SQRT5)),
    )
    for cid, anchor, fn, value in quartic_parts:
        out.append(
            case(cid, anchor, TAN_HALFPI, NO_PARAMS, lambda p, _fn=fn: _fn, lambda p, _v=value: _v)
        )

    return out
