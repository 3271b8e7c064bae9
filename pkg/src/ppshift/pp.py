"""Permutation testing, inversion and exhaustive enumeration.

The primary oracle is the direct bijectivity test on the full
evaluation table; the degree-based power test is kept as an
independent cross-check, not an optimization. Compositional inverses
come from inverting the evaluation permutation and interpolating
through all q points.

Enumeration walks a candidate space in a fixed lexicographic order and
the worker count only controls how the index range is partitioned;
partitions merge associatively, so reports are identical for any
worker count.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceededError,
    CapExceededError,
    NotAPermutationError,
    OutOfRangeError,
    TooLargeFieldError,
)
from .gf import FieldContext
from .poly import (
    eval_table,
    is_monic,
    normalize,
    poly_mul,
    reduce_poly,
)

DEFAULT_BUDGET = 10_000_000
LIST_LIMIT = 10_000
HERMITE_MAX_Q = 64


@dataclass(frozen=True)
class PermVerdict:
    is_pp: bool
    is_ppr: bool
    witness: tuple[int, int] | None  # colliding pair when not bijective


def is_permutation(ctx: FieldContext, f) -> PermVerdict:
    """Direct bijectivity test; a witness collision is reported on failure."""
    preimage = [-1] * ctx.q
    witness = None
    for x in range(ctx.q):
        y = 0
        for c in reversed(f):
            y = ctx.add(ctx.mul(y, x), c)
        if preimage[y] >= 0:
            witness = (preimage[y], x)
            break
        preimage[y] = x
    is_pp = witness is None
    is_ppr = is_pp and is_monic(f) and f[0] == 0
    return PermVerdict(is_pp=is_pp, is_ppr=is_ppr, witness=witness)


def hermite_test(ctx: FieldContext, f, max_q: int = HERMITE_MAX_Q) -> bool:
    """Degree criterion on the reduced powers f^t mod x^q - x.

    True iff f^(q-1) reduces monic of degree q-1 and every f^t for
    1 <= t <= q-2 with t not a multiple of p reduces to degree <= q-2.
    Agrees with is_permutation on every input.
    """
    q, p = ctx.q, ctx.p
    if q <= 2:
        raise OutOfRangeError("degree criterion needs q > 2")
    if q > max_q:
        raise TooLargeFieldError(f"q = {q} exceeds the cost cap {max_q}")
    f = reduce_poly(ctx, f)
    power = [1]
    for t in range(1, q - 1):
        power = poly_mul(ctx, power, f)
        if t % p and len(power) - 1 > q - 2:
            return False
    power = poly_mul(ctx, power, f)
    return len(power) == q and power[-1] == 1


def interpolate_table(ctx: FieldContext, values) -> list[int]:
    """The unique polynomial of degree <= q-1 through (a, values[a]).

    Interpolating over the whole field collapses to power sums: with
    S_j = sum over nonzero a of values[a] * a^j, the coefficient of
    x^k is -S_(q-1-k) for 1 <= k <= q-2, the constant term is
    values[0], and the top coefficient is -(S_0 + values[0]).
    """
    q = ctx.q
    mt = ctx.mul_table
    at = ctx.add_table
    s = [0] * (q - 1)
    if mt is not None:
        for a in range(1, q):
            term = values[a]
            if term:
                abase = a
                for j in range(q - 1):
                    s[j] = at[s[j] * q + term]
                    term = mt[term * q + abase]
    else:
        mul = ctx.mul
        add = ctx.add
        for a in range(1, q):
            term = values[a]
            if term:
                for j in range(q - 1):
                    s[j] = add(s[j], term)
                    term = mul(term, a)
    neg = ctx.neg_table
    out = [values[0]]
    out += [neg[s[q - 1 - k]] for k in range(1, q - 1)]
    out.append(neg[ctx.add(s[0], values[0])])
    return normalize(out)


def compositional_inverse(ctx: FieldContext, f) -> list[int]:
    """The unique reduced h with h(f(x)) = f(h(x)) = x."""
    table = eval_table(ctx, f)
    inverse = [0] * ctx.q
    seen = [False] * ctx.q
    for x, y in enumerate(table):
        if seen[y]:
            raise NotAPermutationError(
                f"not a permutation: collides at {inverse[y]} and {x}"
            )
        seen[y] = True
        inverse[y] = x
    return interpolate_table(ctx, inverse)


# -- enumeration domains --


@dataclass(frozen=True)
class FamilyShape:
    """Candidates (x^p - b x)^m + alpha x^p + beta x over all (alpha, beta)."""

    m: int
    b: int


def _chunk_ranges(total: int, workers: int) -> list[tuple[int, int]]:
    workers = max(1, min(workers, total)) if total else 1
    step, extra = divmod(total, workers)
    ranges = []
    start = 0
    for w in range(workers):
        stop = start + step + (1 if w < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


@dataclass(frozen=True)
class EnumReport:
    searched: int
    ppr_count: int
    ppr_list: tuple[tuple[int, ...], ...] | None
    budget_exhausted: bool = False


def _merge_reports(parts, list_limit: int) -> EnumReport:
    searched = sum(p[0] for p in parts)
    count = sum(p[1] for p in parts)
    items: list[tuple[int, ...]] = []
    truncated = False
    for p in parts:
        if p[2] is None:
            truncated = True
        else:
            items.extend(p[2])
    if truncated or count > list_limit:
        ppr_list = None
    else:
        ppr_list = tuple(sorted(items))
    return EnumReport(searched=searched, ppr_count=count, ppr_list=ppr_list)


def _scan_subspace(ctx: FieldContext, basis, start: int, stop: int, list_limit: int):
    """Test candidates with flat indices [start, stop) in lexicographic
    coordinate order (first coordinate most significant)."""
    q = ctx.q
    dim = len(basis)
    width = q - 2
    # scaled[i][v] = v * basis_row_i, so a candidate is a sum of one
    # scaled row per coordinate
    scaled = [[tuple(ctx.mul(v, c) for c in row) for v in range(q)] for row in basis]
    # monomial evaluation tables power[j][x] = x^(j+1)
    power = [[ctx.pow(x, j + 1) for x in range(q)] for j in range(width)]
    add = ctx.add
    mul = ctx.mul
    q1 = q - 1

    digits = [0] * dim
    idx = start
    for pos in range(dim - 1, -1, -1):
        digits[pos] = idx % q
        idx //= q
    partial: list = [None] * dim  # partial[i] = sum of scaled rows 0..i
    zero = (0,) * width
    acc = zero
    for i in range(dim):
        acc = tuple(add(a, b) for a, b in zip(acc, scaled[i][digits[i]]))
        partial[i] = acc

    searched = 0
    count = 0
    found: list[tuple[int, ...]] | None = []
    stamp = [0] * q
    tick = 0
    pos = dim  # levels >= pos have valid partial sums
    for index in range(start, stop):
        if index != start:
            pos = dim - 1
            while digits[pos] == q1:
                digits[pos] = 0
                pos -= 1
            digits[pos] += 1
            base = partial[pos - 1] if pos else zero
            for i in range(pos, dim):
                base = tuple(add(a, b) for a, b in zip(base, scaled[i][digits[i]]))
                partial[i] = base
        vec = partial[dim - 1] if dim else zero
        searched += 1
        # leading coefficient must be 1 (monic) before any evaluation
        deg_idx = width - 1
        while deg_idx >= 0 and not vec[deg_idx]:
            deg_idx -= 1
        if deg_idx < 0 or vec[deg_idx] != 1:
            continue
        d = deg_idx + 1
        if d > 1 and q1 % d == 0:
            continue  # no permutation of degree d when d divides q - 1
        support = [(j, c) for j, c in enumerate(vec[: deg_idx + 1]) if c]
        tick += 1
        ok = True
        stamp[0] = tick  # candidate fixes 0
        for x in range(1, q):
            y = 0
            for j, c in support:
                y = add(y, mul(c, power[j][x]))
            if stamp[y] == tick:
                ok = False
                break
            stamp[y] = tick
        if ok:
            count += 1
            if found is not None:
                found.append((0, *vec[: deg_idx + 1]))
                if len(found) > list_limit:
                    found = None
    return searched, count, found


def _scan_shape(ctx: FieldContext, shape: FamilyShape, start: int, stop: int, list_limit: int):
    """Candidates indexed alpha * q + beta, alpha outer."""
    from .poly import gmb_poly  # local import keeps module load light

    q = ctx.q
    g = gmb_poly(ctx, shape.m, shape.b)
    g_table = eval_table(ctx, g)
    frob = ctx.frob_table
    add = ctx.add
    mul = ctx.mul
    searched = 0
    count = 0
    found: list[tuple[int, ...]] | None = []
    stamp = [0] * q
    tick = 0
    for index in range(start, stop):
        alpha, beta = divmod(index, q)
        searched += 1
        tick += 1
        stamp[0] = tick
        ok = True
        for x in range(1, q):
            y = add(g_table[x], add(mul(alpha, frob[x]), mul(beta, x)))
            if stamp[y] == tick:
                ok = False
                break
            stamp[y] = tick
        if ok:
            count += 1
            if found is not None:
                coeffs = list(g)
                coeffs[ctx.p] = add(coeffs[ctx.p], alpha)
                coeffs[1] = add(coeffs[1], beta)
                found.append(tuple(coeffs))
                if len(found) > list_limit:
                    found = None
    return searched, count, found


def enumerate_pprs(
    ctx: FieldContext,
    domain,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
    list_limit: int = LIST_LIMIT,
) -> EnumReport:
    """Count (and below list_limit, list) the monic zero-fixing
    permutations in a subspace or parametric shape.

    The domain size must fit the budget; nothing is silently truncated.
    """
    from .eigen import Subspace

    if isinstance(domain, Subspace):
        if domain.ambient != ctx.q - 2:
            raise OutOfRangeError("subspace does not live over the monomial coordinates")
        total = ctx.q**domain.dim
        scan = lambda lo, hi: _scan_subspace(ctx, domain.basis, lo, hi, list_limit)
    elif isinstance(domain, FamilyShape):
        total = ctx.q**2
        scan = lambda lo, hi: _scan_shape(ctx, domain, lo, hi, list_limit)
    else:
        raise OutOfRangeError(f"unsupported enumeration domain {type(domain).__name__}")
    if total > budget:
        raise BudgetExceededError(f"{total} candidates exceed budget {budget}")
    parts = [scan(lo, hi) for lo, hi in _chunk_ranges(total, workers)]
    return _merge_reports(parts, list_limit)


# -- degree census over prime fields --


@dataclass(frozen=True)
class DegreeCensus:
    counts: dict[int, int]
    stage_violations: tuple[tuple[int, ...], ...]
    total: int


def degree_distribution(ctx: FieldContext, cap: int = 11) -> DegreeCensus:
    """Census of monic zero-fixing permutations of F_p by degree.

    Each hit is also checked to first appear in the kernel chain
    exactly at stage = degree; offenders (none expected) are returned.
    """
    from itertools import product

    from .eigen import kernel_power
    from .poly import coords

    if ctx.n != 1:
        raise OutOfRangeError("degree census applies to prime fields")
    p = ctx.q
    if p > cap:
        raise CapExceededError(f"p = {p} exceeds census cap {cap}")
    kernels = [kernel_power(ctx, 1, k) for k in range(1, p - 1)] if p > 3 else [
        kernel_power(ctx, 1, 1)
    ]
    counts = {d: 0 for d in range(1, p - 1)}
    violations = []
    for d in range(1, p - 1):
        for mid in product(range(p), repeat=d - 1):
            f = [0, *mid, 1]
            if not is_permutation(ctx, f).is_pp:
                continue
            counts[d] += 1
            vec = coords(ctx, f)
            if not kernels[d - 1].contains_vector(vec):
                violations.append(tuple(f))
            elif d > 1 and kernels[d - 2].contains_vector(vec):
                violations.append(tuple(f))
    return DegreeCensus(counts=counts, stage_violations=tuple(violations), total=sum(counts.values()))
