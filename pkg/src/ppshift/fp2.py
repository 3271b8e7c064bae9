"""The parametric permutation family over F_{p^2}.

For b a (p+1)-th root of unity and 2 <= m <= p-1, the polynomials

    f(x) = (x^p - b x)^m + alpha x^p + beta x

permute F_{p^2} whenever alpha^(p+1) != beta^(p+1) and
(beta + b alpha)^(p-1) = (-1)^m b^(mp-1), and then the compositional
inverse is itself parametric:

    h(x) = delta (x^p - d x)^m + gamma x^p + epsilon x

with d = (-1)^m b^(mp), gamma = -alpha / (beta^(p+1) - alpha^(p+1)),
epsilon = beta^p / (beta^(p+1) - alpha^(p+1)) and
delta = (-gamma d - epsilon) / (beta^p - alpha d)^m.

This module derives the parameters, checks the two existence
conditions, builds (f, h) pairs, enumerates censuses over (alpha,
beta), and sweeps the identity suite backing the inverse formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BadExponentError,
    DegenerateParametersError,
    NotConstructibleError,
    NotRootOfUnityError,
    OutOfRangeError,
)
from .gf import FieldContext, roots_of_unity
from .pp import FamilyShape, enumerate_pprs
from .poly import (
    gmb_poly,
    hmd_d,
    hmd_poly,
    normalize,
    poly_add,
    poly_pow,
    poly_scale,
)


def _require_fp2(ctx: FieldContext) -> None:
    if ctx.n != 2:
        raise OutOfRangeError("family is defined over quadratic extensions only")


def _require_mb(ctx: FieldContext, m: int, b: int) -> None:
    if not 2 <= m <= ctx.p - 1:
        raise BadExponentError(f"m = {m} outside [2, {ctx.p - 1}]")
    if b == 0 or ctx.pow(b, ctx.p + 1) != 1:
        raise NotRootOfUnityError(f"b = {b} is not a (p+1)-th root of unity")


def family_b_values(ctx: FieldContext) -> list[int]:
    """All admissible b: the p+1 roots of unity of order dividing p+1."""
    _require_fp2(ctx)
    return roots_of_unity(ctx, ctx.p + 1)


@dataclass(frozen=True)
class FamilyInstance:
    ctx: FieldContext
    m: int
    b: int
    alpha: int
    beta: int
    gamma: int
    epsilon: int
    delta: int
    d: int


@dataclass(frozen=True)
class ConditionVerdict:
    cond1: bool  # alpha^(p+1) != beta^(p+1)
    cond2: bool  # (beta + b alpha)^(p-1) = (-1)^m b^(mp-1)

    @property
    def constructible(self) -> bool:
        return self.cond1 and self.cond2


def check_conditions(ctx: FieldContext, m: int, b: int, alpha: int, beta: int) -> ConditionVerdict:
    """Evaluate both existence conditions exactly.

    When beta + b*alpha = 0 the left side of the second condition is 0
    and can never equal the nonzero right side, so cond2 is false.
    """
    _require_fp2(ctx)
    _require_mb(ctx, m, b)
    p = ctx.p
    cond1 = ctx.pow(alpha, p + 1) != ctx.pow(beta, p + 1)
    lhs_base = ctx.add(beta, ctx.mul(b, alpha))
    if lhs_base == 0:
        cond2 = False
    else:
        sign = 1 if m % 2 == 0 else ctx.neg(1)
        cond2 = ctx.pow(lhs_base, p - 1) == ctx.mul(sign, ctx.pow(b, m * p - 1))
    return ConditionVerdict(cond1=cond1, cond2=cond2)


def derive_params(ctx: FieldContext, m: int, b: int, alpha: int, beta: int) -> FamilyInstance:
    """Populate (gamma, epsilon, delta, d) for one (m, b, alpha, beta)."""
    _require_fp2(ctx)
    _require_mb(ctx, m, b)
    p = ctx.p
    norm_gap = ctx.sub(ctx.pow(beta, p + 1), ctx.pow(alpha, p + 1))
    if norm_gap == 0:
        raise DegenerateParametersError("alpha and beta have equal norms")
    d = hmd_d(ctx, m, b)
    gamma = ctx.div(ctx.neg(alpha), norm_gap)
    epsilon = ctx.div(ctx.pow(beta, p), norm_gap)
    denom = ctx.sub(ctx.pow(beta, p), ctx.mul(alpha, d))
    if denom == 0:
        raise DegenerateParametersError("beta^p equals alpha * d")
    delta = ctx.div(
        ctx.sub(ctx.neg(ctx.mul(gamma, d)), epsilon),
        ctx.pow(denom, m),
    )
    return FamilyInstance(
        ctx=ctx, m=m, b=b, alpha=alpha, beta=beta,
        gamma=gamma, epsilon=epsilon, delta=delta, d=d,
    )


def family_poly(ctx: FieldContext, m: int, b: int, alpha: int, beta: int) -> list[int]:
    """(x^p - b x)^m + alpha x^p + beta x, reduced."""
    _require_fp2(ctx)
    f = list(gmb_poly(ctx, m, b))
    f[ctx.p] = ctx.add(f[ctx.p], alpha)
    f[1] = ctx.add(f[1], beta)
    return normalize(f)


def build_pair(inst: FamilyInstance) -> tuple[list[int], list[int]]:
    """The polynomial and its parametric inverse for a constructible
    instance; both reduced, f monic of degree m*p."""
    ctx = inst.ctx
    verdict = check_conditions(ctx, inst.m, inst.b, inst.alpha, inst.beta)
    if not verdict.constructible:
        raise NotConstructibleError(
            f"conditions fail for (m={inst.m}, b={inst.b}, alpha={inst.alpha}, beta={inst.beta}):"
            f" cond1={verdict.cond1} cond2={verdict.cond2}"
        )
    f = family_poly(ctx, inst.m, inst.b, inst.alpha, inst.beta)
    h = poly_scale(ctx, inst.delta, hmd_poly(ctx, inst.m, inst.b))
    lin = [0] * (ctx.p + 1)
    lin[1] = inst.epsilon
    lin[ctx.p] = inst.gamma
    h = poly_add(ctx, h, lin)
    return f, h


def constructible_pairs(ctx: FieldContext, m: int, b: int) -> list[tuple[int, int]]:
    """All (alpha, beta) passing both conditions, alpha outer."""
    _require_fp2(ctx)
    _require_mb(ctx, m, b)
    out = []
    for alpha in range(ctx.q):
        for beta in range(ctx.q):
            if (alpha or beta) and check_conditions(ctx, m, b, alpha, beta).constructible:
                out.append((alpha, beta))
    return out


@dataclass(frozen=True)
class CensusReport:
    m: int
    b: int
    conditioned: int
    full: int | None
    excess: int | None


def census(ctx: FieldContext, m: int, b: int, mode: str = "conditioned",
           workers: int = 1) -> CensusReport:
    """Count family permutations for one (m, b).

    conditioned counts the (alpha, beta) passing both conditions;
    full brute-force-tests every (alpha, beta) in F_q^2 for bijectivity
    and also reports the excess over the conditioned count.
    """
    if mode not in ("conditioned", "full"):
        raise OutOfRangeError(f"unknown census mode {mode!r}")
    conditioned = len(constructible_pairs(ctx, m, b))
    if mode == "conditioned":
        return CensusReport(m=m, b=b, conditioned=conditioned, full=None, excess=None)
    report = enumerate_pprs(ctx, FamilyShape(m=m, b=b), workers=workers)
    return CensusReport(
        m=m, b=b, conditioned=conditioned,
        full=report.ppr_count, excess=report.ppr_count - conditioned,
    )


# -- the identity suite backing the inverse formula --


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    statement: str
    checked: int
    skipped: int
    counterexamples: tuple

    @property
    def passed(self) -> bool:
        return not self.counterexamples


@dataclass(frozen=True)
class LemmaSuiteReport:
    checks: tuple[LemmaCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _sign(ctx: FieldContext, m: int) -> int:
    return 1 if m % 2 == 0 else ctx.neg(1)


def lemma_suite(ctx: FieldContext) -> LemmaSuiteReport:
    """Check the six identities behind the inverse formula over their
    full hypothesis ranges; counterexamples are reported verbatim."""
    _require_fp2(ctx)
    p, q = ctx.p, ctx.q
    bs = family_b_values(ctx)
    ms = range(2, p)
    checks = []

    bad, n_checked = [], 0
    for m in ms:
        for b in bs:
            g = gmb_poly(ctx, m, b)
            lhs = poly_pow(ctx, g, p)
            rhs = poly_scale(ctx, ctx.mul(_sign(ctx, m), ctx.pow(b, m * p)), g)
            n_checked += 1
            if lhs != rhs:
                bad.append((m, b))
    checks.append(
        LemmaCheck("lemma20", "g^p = (-1)^m b^(mp) g", n_checked, 0, tuple(bad))
    )

    # parameter identities for every (alpha, beta) with distinct norms
    bad, n_checked, n_skipped = [], 0, 0
    for alpha in range(q):
        for beta in range(q):
            norm_gap = ctx.sub(ctx.pow(beta, p + 1), ctx.pow(alpha, p + 1))
            if norm_gap == 0:
                n_skipped += 1
                continue
            n_checked += 1
            gamma = ctx.div(ctx.neg(alpha), norm_gap)
            epsilon = ctx.div(ctx.pow(beta, p), norm_gap)
            ok = (
                ctx.frobenius(norm_gap) == norm_gap
                and ctx.add(ctx.mul(gamma, ctx.pow(beta, p)), ctx.mul(alpha, epsilon)) == 0
                and ctx.add(ctx.mul(gamma, ctx.pow(alpha, p)), ctx.mul(beta, epsilon)) == 1
                and ctx.add(ctx.mul(alpha, ctx.pow(epsilon, p)), ctx.mul(beta, gamma)) == 0
                and ctx.add(ctx.mul(alpha, ctx.pow(gamma, p)), ctx.mul(beta, epsilon)) == 1
            )
            if not ok:
                bad.append((alpha, beta))
    checks.append(
        LemmaCheck(
            "lemma21",
            "beta^(p+1) - alpha^(p+1) in F_p; gamma beta^p + alpha epsilon = 0;"
            " gamma alpha^p + beta epsilon = 1; alpha epsilon^p + beta gamma = 0;"
            " alpha gamma^p + beta epsilon = 1",
            n_checked,
            n_skipped,
            tuple(bad),
        )
    )

    # the two forms of the second condition agree when both are defined
    bad, n_checked, n_skipped = [], 0, 0
    for m in ms:
        for b in bs:
            sign = _sign(ctx, m)
            rhs_direct = ctx.mul(sign, ctx.pow(b, m * p - 1))
            rhs_ratio = ctx.mul(sign, ctx.pow(b, m * p))
            for alpha in range(q):
                for beta in range(q):
                    base = ctx.add(beta, ctx.mul(b, alpha))
                    if base == 0 or ctx.pow(alpha, p + 1) == ctx.pow(beta, p + 1):
                        n_skipped += 1
                        continue
                    n_checked += 1
                    direct = ctx.pow(base, p - 1) == rhs_direct
                    ratio_num = ctx.add(ctx.mul(b, ctx.pow(beta, p)), ctx.pow(alpha, p))
                    ratio = ctx.div(ratio_num, base) == rhs_ratio
                    if direct != ratio:
                        bad.append((m, b, alpha, beta))
    checks.append(
        LemmaCheck(
            "lemma22",
            "(beta + b alpha)^(p-1) = (-1)^m b^(mp-1) iff"
            " (b beta^p + alpha^p)/(beta + alpha b) = (-1)^m b^(mp)",
            n_checked,
            n_skipped,
            tuple(bad),
        )
    )

    # closed form of delta, and its Frobenius twist, on constructible
    # instances; note delta = -(beta + b alpha)^(m-1) / (beta^(p+1) -
    # alpha^(p+1))^m -- the leading minus follows from gamma*d + epsilon
    # = 1/(beta + b alpha)
    bad23, bad24, n_checked = [], [], 0
    for m in ms:
        for b in bs:
            for alpha, beta in constructible_pairs(ctx, m, b):
                inst = derive_params(ctx, m, b, alpha, beta)
                n_checked += 1
                closed = ctx.neg(ctx.div(
                    ctx.pow(ctx.add(beta, ctx.mul(b, alpha)), m - 1),
                    ctx.pow(ctx.sub(ctx.pow(beta, p + 1), ctx.pow(alpha, p + 1)), m),
                ))
                if inst.delta != closed:
                    bad23.append((m, b, alpha, beta))
                # b^(m^2) delta^p = b delta: the ((-1)^m b^(mp-1))^(m-1)
                # twist of delta kills the sign because m(m-1) is even
                lhs = ctx.mul(ctx.pow(b, m * m), ctx.pow(inst.delta, p))
                if lhs != ctx.mul(b, inst.delta):
                    bad24.append((m, b, alpha, beta))
    checks.append(
        LemmaCheck(
            "lemma23",
            "delta = -(beta + b alpha)^(m-1) / (beta^(p+1) - alpha^(p+1))^m",
            n_checked,
            0,
            tuple(bad23),
        )
    )
    checks.append(
        LemmaCheck("lemma24", "b^(m^2) delta^p = b delta", n_checked, 0, tuple(bad24))
    )

    # h^p = b^(m^2) h as reduced polynomials: the prefactor is
    # (-1)^m d^(mp) = (-1)^m (-1)^m b^(m^2) = b^(m^2)
    bad, n_checked = [], 0
    for m in ms:
        for b in bs:
            h = hmd_poly(ctx, m, b)
            lhs = poly_pow(ctx, h, p)
            rhs = poly_scale(ctx, ctx.pow(b, m * m), h)
            n_checked += 1
            if lhs != rhs:
                bad.append((m, b))
    checks.append(LemmaCheck("lemma25", "h^p = b^(m^2) h", n_checked, 0, tuple(bad)))

    return LemmaSuiteReport(checks=tuple(checks))


# -- inverse-closure helpers --


def shape_parameters(ctx: FieldContext, f) -> tuple[int, int, int, int] | None:
    """Recover (m, b, alpha, beta) if the monic polynomial f matches the
    family shape for some (p+1)-th root b, else None."""
    _require_fp2(ctx)
    p = ctx.p
    deg = len(f) - 1
    if deg <= 0 or deg % p or f[-1] != 1:
        return None
    m = deg // p
    if not 2 <= m <= p - 1:
        return None
    # coefficient at degree mp - (p-1) is -m * b
    c = f[m * p - (p - 1)] if m * p - (p - 1) < len(f) else 0
    b = ctx.div(ctx.neg(c), m % p) if m % p else None
    if b is None or b == 0 or ctx.pow(b, p + 1) != 1:
        return None
    g = gmb_poly(ctx, m, b)
    alpha = ctx.sub(f[p] if p < len(f) else 0, g[p])
    beta = ctx.sub(f[1] if 1 < len(f) else 0, g[1])
    return (m, b, alpha, beta) if family_poly(ctx, m, b, alpha, beta) == normalize(list(f)) else None
