"""x sin x kernels on (0, pi): logarithmic and inverse-tangent closed
forms, their squared-kernel derivatives, and the half-interval relation

    int_0^{pi/2} sin^(2m-1)x/(1+Q^2 sin^2 x)^m = (1/pi) int_0^pi x sin^(2m-1)x/(...)^m,

which is registered as a property row whose right side is itself computed
by quadrature.
"""

from __future__ import annotations

from ._helpers import (
    BETA,
    F,
    FINITE,
    HALF_PI,
    Integrand,
    L,
    LN_ALPHA,
    NO_PARAMS,
    P,
    PI,
    SQRT2,
    SQRT5,
    apow,
    bpow,
    case,
    math,
    qsel,
)
from ..quad import integrate_finite

_U6_Q = (0.3, -0.4, 0.6, -0.7, BETA * BETA, -BETA)
_GJ_Q = (1.0 / 3.0, 0.5, 1.0, 2.0, 3.0, (1.0 + SQRT5) / 2.0)
_PG_Q = (0.3, 0.5, 0.8, BETA * BETA, -BETA)
_QU_Q = (0.3, 0.5, 0.7, BETA * BETA, -BETA)
_FM_Q = (0.5, 1.0, 2.0)

FULL = FINITE(0.0, PI)


def cases():
    out = []

    # generic log form at parameter q, q^2 < 1
    qu6 = qsel(_U6_Q)

    def u6_lhs(p):
        q = qu6(p)
        c = (2.0 * q / (1.0 - q * q)) ** 2
        return lambda x: x * math.sin(x) / (1.0 + c * math.sin(x) ** 2)

    def u6_rhs(p):
        q = qu6(p)
        return (
            PI
            / 2.0
            * (1.0 - q * q) ** 2
            / (q * (1.0 + q * q))
            * math.log(abs((1.0 + q) / (1.0 - q)))
        )

    out.append(case("S6.U6JQLAY", "eq. (u6jqlay)", FULL, (P("k", 1, len(_U6_Q)),), u6_lhs, u6_rhs))

    # golden instances, r odd: kernel L_r^2 + 4 sin^2 x
    def cpw_lhs(p):
        a = L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a + 4.0 * math.sin(x) ** 2)

    def cpw_rhs(p):
        r = p["r"]
        return PI / (2.0 * F(r) * SQRT5) * math.log((F(r) * SQRT5 + 2.0) / L(r))

    out.append(case("S6.CPWMQ60", "eq. (cpwmq60)", FULL, (P("r", 1, 9, "odd"),), cpw_lhs, cpw_rhs))

    # r even: kernel L_r^2 - 4 cos^2 x (equivalently 5F_r^2 + 4 sin^2 x)
    def rdj_lhs(p):
        a = L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - 4.0 * math.cos(x) ** 2)

    def rdj_rhs(p):
        r = p["r"]
        return PI / (2.0 * L(r)) * math.log(F(r) * SQRT5 / (L(r) - 2.0))

    out.append(
        case(
            "S6.RDJRA1D",
            "eq. (rdjra1d)",
            FULL,
            (P("r", 2, 10, "even"),),
            rdj_lhs,
            rdj_rhs,
            note="source text prints sin^2 in the kernel; the logarithmic closed form "
            "belongs to the cos^2 kernel (the sin^2 kernel carries the arctan form)",
        )
    )

    # squared kernels
    def sqa_lhs(p):
        a = L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a + 4.0 * math.sin(x) ** 2) ** 2

    def sqa_rhs(p):
        r = p["r"]
        return PI / (20.0 * SQRT5 * F(r) ** 3) * math.log((F(r) * SQRT5 + 2.0) / L(r)) + PI / (
            10.0 * F(2 * r) ** 2
        )

    out.append(case("S6.SQ.A", "squared cor. of eq. (cpwmq60)", FULL, (P("r", 1, 9, "odd"),), sqa_lhs, sqa_rhs))

    def sqb_lhs(p):
        a = L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - 4.0 * math.cos(x) ** 2) ** 2

    def sqb_rhs(p):
        r = p["r"]
        return PI / (4.0 * L(r) ** 3) * math.log(F(r) * SQRT5 / (L(r) - 2.0)) + PI / (
            10.0 * F(2 * r) ** 2
        )

    out.append(case("S6.SQ.B", "squared cor. of eq. (rdjra1d)", FULL, (P("r", 2, 10, "even"),), sqb_lhs, sqb_rhs))

    # kernel 4 + 5 F_{2r}^2 sin^2 x
    r16 = (P("r", 1, 6),)

    def rlj_lhs(p):
        b = 5.0 * F(2 * p["r"]) ** 2
        return lambda x: x * math.sin(x) / (4.0 + b * math.sin(x) ** 2)

    out.append(
        case(
            "S6.RLJJ8TO",
            "eq. (rljj8to)",
            FULL,
            r16,
            rlj_lhs,
            lambda p: 2.0 * PI * p["r"] * SQRT5 / (5.0 * F(4 * p["r"])) * LN_ALPHA,
        )
    )

    def cube_lhs(p):
        b = 5.0 * F(2 * p["r"]) ** 2
        return lambda x: x * math.sin(x) ** 3 / (4.0 + b * math.sin(x) ** 2) ** 2

    def cube_rhs(p):
        r = p["r"]
        f4 = F(4 * r)
        return -PI / (10.0 * f4 * f4) + 2.0 * PI * SQRT5 / 25.0 * L(4 * r) / f4**3 * r * LN_ALPHA

    out.append(case("S6.SIN3CUBE", "cor. of eq. (rljj8to)", FULL, r16, cube_lhs, cube_rhs))

    # generic log and arctan forms in Q
    qgj = qsel(_GJ_Q)

    def gj_lhs(p):
        c = qgj(p) ** 2
        return lambda x: x * math.sin(x) / (1.0 + c * math.sin(x) ** 2)

    def gj_rhs(p):
        q = qgj(p)
        s = math.hypot(1.0, q)
        return PI / (q * s) * math.log(q + s)

    out.append(case("S6.GJNEYFK", "eq. (gjneyfk)", FULL, (P("k", 1, len(_GJ_Q)),), gj_lhs, gj_rhs))

    # golden instances with cos^2 kernels
    r18 = (P("r", 1, 8),)

    def sc3_lhs(p):
        a, b = 2.0 * L(2 * p["r"]), L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - b * math.cos(x) ** 2)

    def sc3_rhs(p):
        r = p["r"]
        rl = math.sqrt(L(2 * r))
        return (
            PI
            * SQRT2
            / (2.0 * L(r) * rl)
            * math.log((bpow(r) * SQRT2 + rl) / (apow(r) * SQRT2 - rl))
        )

    out.append(case("S6.SC3T62N", "eq. (sc3t62n)", FULL, r18, sc3_lhs, sc3_rhs))

    def qo3_lhs(p):
        a, b = 2.0 * L(2 * p["r"]), 5.0 * F(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - b * math.cos(x) ** 2)

    def qo3_rhs(p):
        r = p["r"]
        rl = math.sqrt(L(2 * r))
        return (
            PI
            * math.sqrt(10.0)
            / (10.0 * F(r) * rl)
            * math.log((-bpow(r) * SQRT2 + rl) / (apow(r) * SQRT2 - rl))
        )

    out.append(case("S6.QO33H5M", "eq. (qo33h5m)", FULL, r18, qo3_lhs, qo3_rhs))

    # arctan form, Q^2 < 1
    qpg = qsel(_PG_Q)

    def pg_lhs(p):
        c = qpg(p) ** 2
        return lambda x: x * math.sin(x) / (1.0 - c * math.sin(x) ** 2)

    def pg_rhs(p):
        q = qpg(p)
        s = math.sqrt(1.0 - q * q)
        return PI / (q * s) * math.atan(q / s)

    out.append(
        case(
            "S6.PGLRQHP",
            "eq. (pglrqhp)",
            FULL,
            (P("k", 1, len(_PG_Q)),),
            pg_lhs,
            pg_rhs,
            splits=(HALF_PI,),
        )
    )

    # golden arctan instances
    def fmk_e_lhs(p):
        a = L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - 4.0 * math.sin(x) ** 2)

    def fmk_e_rhs(p):
        r = p["r"]
        s = F(r) * SQRT5
        return PI / 2.0 / s * math.atan(2.0 / s)

    out.append(
        case(
            "S6.FMK6KRX.E",
            "thm. (fmk6krx), even branch",
            FULL,
            (P("r", 2, 10, "even"),),
            fmk_e_lhs,
            fmk_e_rhs,
            splits=(HALF_PI,),
        )
    )

    def fmk_o_lhs(p):
        a = 5.0 * F(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - 4.0 * math.sin(x) ** 2)

    def fmk_o_rhs(p):
        r = p["r"]
        return PI / 2.0 / L(r) * math.atan(2.0 / L(r))

    out.append(
        case(
            "S6.FMK6KRX.O",
            "thm. (fmk6krx), odd branch",
            FULL,
            (P("r", 1, 9, "odd"),),
            fmk_o_lhs,
            fmk_o_rhs,
            splits=(HALF_PI,),
        )
    )

    out.append(
        case(
            "S6.FMK6KRX.PART",
            "special value (pi/2) arctan 2",
            FULL,
            NO_PARAMS,
            lambda p: lambda x: x * math.sin(x) / (5.0 - 4.0 * math.sin(x) ** 2),
            lambda p: PI / 2.0 * math.atan(2.0),
            splits=(HALF_PI,),
        )
    )

    def fsq_e_lhs(p):
        a = L(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - 4.0 * math.sin(x) ** 2) ** 2

    def fsq_e_rhs(p):
        r = p["r"]
        s = F(r) * SQRT5
        return PI / (20.0 * SQRT5 * F(r) ** 3) * math.atan(2.0 / s) + PI / (10.0 * F(2 * r) ** 2)

    out.append(
        case(
            "S6.FMK6SQ.E",
            "squared cor. of thm. (fmk6krx), even",
            FULL,
            (P("r", 2, 10, "even"),),
            fsq_e_lhs,
            fsq_e_rhs,
            splits=(HALF_PI,),
        )
    )

    def fsq_o_lhs(p):
        a = 5.0 * F(p["r"]) ** 2
        return lambda x: x * math.sin(x) / (a - 4.0 * math.sin(x) ** 2) ** 2

    def fsq_o_rhs(p):
        r = p["r"]
        return PI / (4.0 * L(r) ** 3) * math.atan(2.0 / L(r)) + PI / (10.0 * F(2 * r) ** 2)

    out.append(
        case(
            "S6.FMK6SQ.O",
            "squared cor. of thm. (fmk6krx), odd",
            FULL,
            (P("r", 1, 9, "odd"),),
            fsq_o_lhs,
            fsq_o_rhs,
            splits=(HALF_PI,),
        )
    )

    # quartic sine kernels, Q^2 < 1
    qqu = qsel(_QU_Q)

    def qa_lhs(p):
        c = qqu(p) ** 4
        return lambda x: x * math.sin(x) / (1.0 - c * math.sin(x) ** 4)

    def qa_rhs(p):
        q = qqu(p)
        sm = math.sqrt(1.0 - q * q)
        sp = math.hypot(1.0, q)
        return PI / (2.0 * q * sm) * math.atan(q / sm) + PI / (2.0 * q * sp) * math.log(q + sp)

    out.append(
        case("S6.QUARTIC.A", "remark pair, first", FULL, (P("k", 1, len(_QU_Q)),), qa_lhs, qa_rhs, splits=(HALF_PI,))
    )

    def qb_lhs(p):
        c = qqu(p) ** 4
        return lambda x: x * math.sin(x) ** 3 / (1.0 - c * math.sin(x) ** 4)

    def qb_rhs(p):
        q = qqu(p)
        sm = math.sqrt(1.0 - q * q)
        sp = math.hypot(1.0, q)
        q3 = q**3
        return PI / (2.0 * q3 * sm) * math.atan(q / sm) - PI / (2.0 * q3 * sp) * math.log(q + sp)

    out.append(
        case("S6.QUARTIC.B", "remark pair, second", FULL, (P("k", 1, len(_QU_Q)),), qb_lhs, qb_rhs, splits=(HALF_PI,))
    )

    # half-interval equals full-interval/pi, including the power form
    def fm_kernel(p):
        q2 = _FM_Q[p["k"] - 1] ** 2
        m = p["m"]

        def g(x):
            s = math.sin(x)
            return s ** (2 * m - 1) / (1.0 + q2 * s * s) ** m

        return g

    def fm_lhs(p):
        return fm_kernel(p)

    def fm_rhs(p):
        g = fm_kernel(p)
        res = integrate_finite(Integrand(lambda x: x * g(x)), 0.0, PI, 1e-12)
        return res.value / PI

    out.append(
        case(
            "S6.FM2DODR",
            "eq. (fm2dodr) and its power form",
            FINITE(0.0, HALF_PI),
            (P("m", 1, 3), P("k", 1, len(_FM_Q))),
            fm_lhs,
            fm_rhs,
            tol=1e-9,
        )
    )

    return out
