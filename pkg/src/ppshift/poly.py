"""Polynomials over F_q as evaluation maps.

A polynomial is a plain list of element indices by ascending degree
with no trailing zeros; [] is the zero polynomial. Exponent folding
x^e -> x^(1 + (e-1) mod (q-1)) for e >= 1 keeps every representative
inside degree q-1 without changing the evaluation map, and the space
V[x] is the slice with zero constant term and degree <= q-2.

Coordinates of a V[x] polynomial are taken over the ordered monomial
basis (x, x^2, ..., x^(q-2)); this ordering fixes every matrix
representation downstream.
"""

from __future__ import annotations

import re

from .errors import (
    BadExponentError,
    DimensionMismatchError,
    NotRootOfUnityError,
    OutOfRangeError,
)
from .gf import FieldContext


def normalize(coeffs) -> list[int]:
    """Strip trailing zeros; the zero polynomial is []."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def degree(f) -> int | None:
    """Degree of f, or None for the zero polynomial."""
    return len(f) - 1 if f else None


def is_monic(f) -> bool:
    return bool(f) and f[-1] == 1


def reduce_poly(ctx: FieldContext, coeffs) -> list[int]:
    """Fold a raw coefficient list modulo x^q - x.

    Exponent e >= 1 folds to 1 + (e-1) mod (q-1); exponent 0 stays.
    The evaluation map is unchanged.
    """
    q = ctx.q
    if len(coeffs) <= q:
        return normalize(coeffs)
    out = [0] * q
    add = ctx.add
    for e, c in enumerate(coeffs):
        if c:
            ee = 1 + (e - 1) % (q - 1) if e else 0
            out[ee] = add(out[ee], c)
    return normalize(out)


def poly_add(ctx: FieldContext, f, g) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    add = ctx.add
    out = list(f)
    for i, c in enumerate(g):
        if c:
            out[i] = add(out[i], c)
    return normalize(out)


def poly_sub(ctx: FieldContext, f, g) -> list[int]:
    return poly_add(ctx, f, [ctx.neg(c) for c in g])


def poly_scale(ctx: FieldContext, c: int, f) -> list[int]:
    if c == 0:
        return []
    mul = ctx.mul
    return normalize([mul(c, a) for a in f])


def poly_mul(ctx: FieldContext, f, g) -> list[int]:
    """Product reduced mod x^q - x, keeping every intermediate below 2q."""
    if not f or not g:
        return []
    mul = ctx.mul
    add = ctx.add
    conv = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    conv[i + j] = add(conv[i + j], mul(a, b))
    return reduce_poly(ctx, conv)


def poly_pow(ctx: FieldContext, f, e: int) -> list[int]:
    """f**e by repeated squaring, reduced after every multiplication."""
    if e < 0:
        raise OutOfRangeError("negative polynomial power")
    result = [1]
    base = reduce_poly(ctx, f)
    while e:
        if e & 1:
            result = poly_mul(ctx, result, base)
        e >>= 1
        if e:
            base = poly_mul(ctx, base, base)
    return result


def eval_at(ctx: FieldContext, f, x: int) -> int:
    mul = ctx.mul
    add = ctx.add
    acc = 0
    for c in reversed(f):
        acc = add(mul(acc, x), c)
    return acc


def eval_table(ctx: FieldContext, f) -> list[int]:
    """Evaluation at every element, indexed by element."""
    return [eval_at(ctx, f, x) for x in range(ctx.q)]


def compose(ctx: FieldContext, f, g) -> list[int]:
    """f(g(x)) reduced mod x^q - x (Horner in g)."""
    acc: list[int] = []
    for c in reversed(f):
        acc = poly_mul(ctx, acc, g)
        if c:
            if acc:
                acc[0] = ctx.add(acc[0], c)
            else:
                acc = [c]
    return normalize(acc)


def monomial(e: int, c: int = 1) -> list[int]:
    out = [0] * (e + 1)
    out[e] = c
    return normalize(out)


# -- the space V[x] --


def is_vpoly(ctx: FieldContext, f) -> bool:
    """Zero constant term and degree <= q - 2."""
    return len(f) <= ctx.q - 1 and (not f or f[0] == 0)


def require_vpoly(ctx: FieldContext, f) -> None:
    if not is_vpoly(ctx, f):
        raise OutOfRangeError(f"polynomial of degree {degree(f)} is not in V[x]")


def coords(ctx: FieldContext, f) -> list[int]:
    """Coordinates over the monomial basis (x, x^2, ..., x^(q-2))."""
    require_vpoly(ctx, f)
    vec = list(f[1:])
    vec.extend([0] * (ctx.q - 2 - len(vec)))
    return vec


def from_coords(ctx: FieldContext, vec) -> list[int]:
    if len(vec) != ctx.q - 2:
        raise DimensionMismatchError(f"coordinate vector length {len(vec)} != q - 2")
    return normalize([0, *vec])


# -- the (x^p - bx)^m building blocks --


def _binomial_power(ctx: FieldContext, b: int, m: int) -> list[int]:
    # (x^p - b*x)^m, reduced
    base = [0] * (ctx.p + 1)
    base[1] = ctx.neg(b)
    base[ctx.p] = 1
    return poly_pow(ctx, base, m)


def gmb_poly(ctx: FieldContext, m: int, b: int) -> list[int]:
    """(x^p - b x)^m for 2 <= m <= p-1 and b an ell_q-th root of unity."""
    if not 2 <= m <= ctx.p - 1:
        raise BadExponentError(f"m = {m} outside [2, {ctx.p - 1}]")
    ell = (ctx.q - 1) // (ctx.p - 1)
    if b == 0 or ctx.pow(b, ell) != 1:
        raise NotRootOfUnityError(f"b = {b} is not an order-{ell} root of unity")
    return _binomial_power(ctx, b, m)


def hmd_d(ctx: FieldContext, m: int, b: int) -> int:
    """d = (-1)^m b^(m p)."""
    sign = 1 if m % 2 == 0 else ctx.neg(1)
    return ctx.mul(sign, ctx.pow(b, m * ctx.p))


def hmd_poly(ctx: FieldContext, m: int, b: int) -> list[int]:
    """(x^p - d x)^m with d derived from (m, b)."""
    if not 2 <= m <= ctx.p - 1:
        raise BadExponentError(f"m = {m} outside [2, {ctx.p - 1}]")
    ell = (ctx.q - 1) // (ctx.p - 1)
    if b == 0 or ctx.pow(b, ell) != 1:
        raise NotRootOfUnityError(f"b = {b} is not an order-{ell} root of unity")
    return _binomial_power(ctx, hmd_d(ctx, m, b), m)


# -- linearized polynomials sum d_j x^(p^j) and their F_p matrices --


def linearized_poly(ctx: FieldContext, d) -> list[int]:
    """Coefficient list of sum_j d_j x^(p^j) from the length-n vector d."""
    if len(d) != ctx.n:
        raise DimensionMismatchError(f"expected {ctx.n} coefficients, got {len(d)}")
    out = [0] * (ctx.p ** (ctx.n - 1) + 1)
    for j, c in enumerate(d):
        out[ctx.p**j] = c
    return normalize(out)


def linearized_coeffs(ctx: FieldContext, f) -> list[int] | None:
    """Inverse of linearized_poly, or None if f has other monomials."""
    powers = {ctx.p**j: j for j in range(ctx.n)}
    d = [0] * ctx.n
    for e, c in enumerate(f):
        if not c:
            continue
        if e not in powers:
            return None
        d[powers[e]] = c
    return d


def linearized_eval(ctx: FieldContext, d, x: int) -> int:
    acc = 0
    for c in d:
        if c:
            acc = ctx.add(acc, ctx.mul(c, x))
        x = ctx.frobenius(x)
    return acc


def linearized_to_matrix(ctx: FieldContext, d) -> tuple[tuple[int, ...], ...]:
    """n x n matrix over F_p of the map's action on the power basis.

    Column j holds the base-p digits of the image of t^j, so the map is
    a permutation of the field exactly when the matrix is invertible.
    """
    n = ctx.n
    cols = []
    for j in range(n):
        img = linearized_eval(ctx, d, ctx._pows[j])
        cols.append(ctx.digits(img))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def matrix_to_linearized(ctx: FieldContext, rows) -> list[int]:
    """Recover the coefficient vector d from an n x n matrix over F_p.

    Solves the Moore system sum_j d_j (t^i)^(p^j) = image of t^i; the
    system is nonsingular because (1, t, ..., t^(n-1)) is a basis.
    """
    n = ctx.n
    if len(rows) != n or any(len(r) != n for r in rows):
        raise DimensionMismatchError("matrix must be n x n")
    aug = []
    for i in range(n):
        basis_elem = ctx._pows[i]
        row = []
        x = basis_elem
        for _ in range(n):
            row.append(x)
            x = ctx.frobenius(x)
        target = ctx.from_digits([rows[k][i] % ctx.p for k in range(n)])
        row.append(target)
        aug.append(row)
    # Gaussian elimination over F_q on the n x (n+1) system
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ctx.inv(aug[col][col])
        if inv != 1:
            aug[col] = [ctx.mul(inv, v) for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [ctx.sub(a, ctx.mul(factor, b)) for a, b in zip(aug[r], aug[col])]
    return [aug[i][n] for i in range(n)]


def fp_matrix_det(p: int, rows) -> int:
    """Determinant mod p of a small integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    det = 1
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] % p:
                piv = r
                break
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det = (det * m[col][col]) % p
        inv = pow(m[col][col], -1, p)
        for r in range(col + 1, n):
            if m[r][col] % p:
                factor = (m[r][col] * inv) % p
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[col])]
    return det % p


# -- textual format: element-index coefficients, `c*x^e` terms --

_TERM_RE = re.compile(r"^(?:(\d+)\*)?x(?:\^(\d+))?$|^(\d+)$")


def format_poly(ctx: FieldContext, f) -> str:
    """Render with descending exponents, e.g. '1*x^6 + 1*x^4 + 1*x^2'."""
    if not f:
        return "0"
    terms = [f"{c}*x^{e}" for e, c in reversed(list(enumerate(f))) if c]
    return " + ".join(terms)


def parse_poly(ctx: FieldContext, text: str) -> list[int]:
    """Parse the textual format; terms may appear in any order."""
    text = text.strip()
    if text in ("", "0"):
        return []
    raw: dict[int, int] = {}
    for chunk in text.split("+"):
        term = chunk.strip().replace(" ", "")
        mt = _TERM_RE.match(term)
        if not mt:
            raise OutOfRangeError(f"cannot parse term {chunk.strip()!r}")
        if mt.group(3) is not None:
            c, e = int(mt.group(3)), 0
        else:
            c = int(mt.group(1)) if mt.group(1) else 1
            e = int(mt.group(2)) if mt.group(2) else 1
        if c >= ctx.q:
            raise OutOfRangeError(f"coefficient {c} is not an element index of F_{ctx.q}")
        raw[e] = ctx.add(raw.get(e, 0), c)
    size = max(raw) + 1
    out = [0] * size
    for e, c in raw.items():
        out[e] = c
    return reduce_poly(ctx, out)
