"""Rational half-line families: both members of each double equality

    int x^(2m+1) / ((1+x^2)(A + B x^2)^(m+1))  =  int x / ((1+x^2)(B + A x^2)^(m+1))

are registered as separate instances sharing one closed form.  The m-fold
derivative closed form at generic q,

    1/2 sum_j (-1)^(m-j)/j / (q^j (1-q)^(m-j+1)) + (-1)^(m-1)/2 ln(q)/(1-q)^(m+1),

specializes through 1 -+ q factorizations into products of neighbouring
Fibonacci/Lucas numbers.
"""

from __future__ import annotations

from ._helpers import F, HALF_LINE, L, P, case, math


_PD_Q = (0.5, 1.5, 2.0, 3.0, 5.0)


def _generic_rhs(q: float, m: int) -> float:
    acc = 0.0
    for j in range(1, m + 1):
        acc += ((-1.0) ** (m - j) / j) / (q**j * (1.0 - q) ** (m - j + 1))
    return 0.5 * acc + 0.5 * (-1.0) ** (m - 1) * math.log(q) / (1.0 - q) ** (m + 1)


def _pair(base_id, anchor, params, ab_of, rhs, note=""):
    def lhs_a(p):
        a, b = ab_of(p)
        m = p["m"]

        def f(x):
            x2 = x * x
            return x ** (2 * m + 1) / ((1.0 + x2) * (a + b * x2) ** (m + 1))

        return f

    def lhs_b(p):
        a, b = ab_of(p)
        m = p["m"]

        def f(x):
            x2 = x * x
            return x / ((1.0 + x2) * (b + a * x2) ** (m + 1))

        return f

    return [
        case(base_id, anchor, HALF_LINE, params, lhs_a, rhs, note=note),
        case(base_id + ".B", anchor + ", second member", HALF_LINE, params, lhs_b, rhs, note=note),
    ]


def cases():
    out = []

    # kernel F_{2r}: split by F_{2r} - 1 factorizations
    def kj_rhs(p):
        m, r = p["m"], p["r"]
        q = F(2 * r)
        d = F(r - 1) * L(r + 1) if r % 2 == 1 else L(r - 1) * F(r + 1)
        acc = sum(1.0 / (j * q**j * d ** (m - j + 1)) for j in range(1, m + 1))
        return -0.5 * acc + 0.5 * math.log(q) / d ** (m + 1)

    out += _pair(
        "S4.KJ2W249",
        "eq. (kj2w249)",
        (P("m", 0, 4), P("r", 2, 9)),
        lambda p: (1.0, F(2 * p["r"])),
        kj_rhs,
    )

    # kernel F_{2r+1}
    def dp_rhs(p):
        m, r = p["m"], p["r"]
        q = F(2 * r + 1)
        d = L(r) * F(r + 1) if r % 2 == 1 else F(r) * L(r + 1)
        acc = sum(1.0 / (j * q**j * d ** (m - j + 1)) for j in range(1, m + 1))
        return -0.5 * acc + 0.5 * math.log(q) / d ** (m + 1)

    out += _pair(
        "S4.DPBN6CY",
        "eq. (dpbn6cy)",
        (P("m", 0, 4), P("r", 1, 8)),
        lambda p: (1.0, F(2 * p["r"] + 1)),
        dp_rhs,
    )

    # kernel L_{2r+1}
    def q2_rhs(p):
        m, r = p["m"], p["r"]
        q = L(2 * r + 1)
        d = L(r) * L(r + 1) if r % 2 == 1 else 5.0 * F(r) * F(r + 1)
        acc = sum(1.0 / (j * q**j * d ** (m - j + 1)) for j in range(1, m + 1))
        return -0.5 * acc + 0.5 * math.log(q) / d ** (m + 1)

    out += _pair(
        "S4.Q2NVIQW",
        "eq. (q2nviqw)",
        (P("m", 0, 4), P("r", 1, 8)),
        lambda p: (1.0, L(2 * p["r"] + 1)),
        q2_rhs,
    )

    # generic positive q, m-fold derivative form
    out += _pair(
        "S4.PDJJQGD",
        "eq. (pdjjqgd)",
        (P("m", 0, 4), P("k", 1, len(_PD_Q))),
        lambda p: (1.0, _PD_Q[p["k"] - 1]),
        lambda p: _generic_rhs(_PD_Q[p["k"] - 1], p["m"]),
    )

    # kernel pair (L_r^2, 5 F_r^2); closed form uses L^2 - 5F^2 = 4(-1)^r
    def lf2_rhs(p):
        m, r = p["m"], p["r"]
        f2 = 5.0 * F(r) ** 2
        acc = sum(
            (-1.0) ** (r + (r + 1) * (m - j)) / j * (4.0 / f2) ** j for j in range(1, m + 1)
        )
        logterm = (-1.0) ** ((r + 1) * (m + 1)) * math.log(f2 / L(r) ** 2)
        return (acc + logterm) / 2.0 ** (2 * m + 3)

    out += _pair(
        "S4.LF2",
        "theorem with kernel pair (L_r^2, 5F_r^2)",
        (P("m", 0, 4), P("r", 1, 8)),
        lambda p: (L(p["r"]) ** 2, 5.0 * F(p["r"]) ** 2),
        lf2_rhs,
        note="source text prints the sum base as 4/(5F_r); verified as 4/(5F_r^2)",
    )

    # kernel pair (L_r^2, 4), r even
    def even4_rhs(p):
        m, r = p["m"], p["r"]
        f2 = 5.0 * F(r) ** 2
        acc = sum((-1.0) ** (m - j) / j * (f2 / 4.0) ** j for j in range(1, m + 1))
        return (acc + (-1.0) ** (m - 1) * math.log(4.0 / L(r) ** 2)) / (2.0 * f2 ** (m + 1))

    out += _pair(
        "S4.EVEN4",
        "theorem with kernel pair (L_r^2, 4), r even",
        (P("m", 0, 4), P("r", 2, 8, "even")),
        lambda p: (L(p["r"]) ** 2, 4.0),
        even4_rhs,
    )

    # kernel pair (5 F_r^2, 4), r odd
    def odd4_rhs(p):
        m, r = p["m"], p["r"]
        l2 = L(r) ** 2
        acc = sum((-1.0) ** (m - j) / j * (l2 / 4.0) ** j for j in range(1, m + 1))
        return (acc + (-1.0) ** (m - 1) * math.log(4.0 / (5.0 * F(r) ** 2))) / (2.0 * l2 ** (m + 1))

    out += _pair(
        "S4.ODD4",
        "theorem with kernel pair (5F_r^2, 4), r odd",
        (P("m", 0, 4), P("r", 1, 7, "odd")),
        lambda p: (5.0 * F(p["r"]) ** 2, 4.0),
        odd4_rhs,
    )

    # kernel F_{4r+1}: uses F_{4r+1} - 1 = F_{2r} L_{2r+1}
    def f4r1_rhs(p):
        m, r = p["m"], p["r"]
        q = F(4 * r + 1)
        d = F(2 * r) * L(2 * r + 1)
        acc = sum((d / q) ** j / j for j in range(1, m + 1))
        return (math.log(q) - acc) / (2.0 * d ** (m + 1))

    out += _pair(
        "S4.F4R1",
        "theorem with kernel F_{4r+1}",
        (P("m", 0, 4), P("r", 1, 5)),
        lambda p: (1.0, F(4 * p["r"] + 1)),
        f4r1_rhs,
    )

    return out
