"""Shift operators on V[x] and their generalized eigenspaces.

The operator for shift r sends f(x) to f(x+r) - f(r); it is linear on
V[x], preserves degree, and its matrix over the monomial coordinates
is upper triangular with unit diagonal (column e-1 holds the
coordinates of (x+r)^e - r^e). All linear algebra here is exact over
F_q: Gaussian elimination with the first-nonzero pivot rule and full
back-substitution, so every basis is in canonical reduced row-echelon
form and subspace equality is plain row comparison.

Operators and subspaces are immutable once built; kernel computations
for distinct (r, k) pairs are independent.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DimensionMismatchError, OutOfRangeError
from .gf import FieldContext
from .poly import (
    coords,
    compose,
    from_coords,
    monomial,
    normalize,
    poly_pow,
    require_vpoly,
)

Matrix = tuple[tuple[int, ...], ...]


# -- exact linear algebra over F_q --


def mat_identity(d: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def mat_mul(ctx: FieldContext, a, b) -> Matrix:
    """Row-major product; skips zero entries, which pays off on the
    (strictly) upper-triangular matrices this module produces."""
    cols = len(b[0]) if b else 0
    q = ctx.q
    mt = ctx.mul_table
    at = ctx.add_table
    out = []
    if mt is not None:
        for row in a:
            acc = [0] * cols
            for k, aik in enumerate(row):
                if aik:
                    bk = b[k]
                    base = aik * q
                    acc = [at[c * q + mt[base + v]] if v else c for c, v in zip(acc, bk)]
            out.append(tuple(acc))
    else:
        mul = ctx.mul
        add = ctx.add
        for row in a:
            acc = [0] * cols
            for k, aik in enumerate(row):
                if aik:
                    bk = b[k]
                    acc = [add(c, mul(aik, v)) if v else c for c, v in zip(acc, bk)]
            out.append(tuple(acc))
    return tuple(out)


def mat_vec(ctx: FieldContext, a, vec) -> list[int]:
    mul = ctx.mul
    add = ctx.add
    out = []
    for row in a:
        acc = 0
        for aik, v in zip(row, vec):
            if aik and v:
                acc = add(acc, mul(aik, v))
        out.append(acc)
    return out


def _eliminate(ctx: FieldContext, rows: list[list[int]], reduced: bool) -> list[int]:
    """In-place elimination; returns pivot columns.

    Pivot rule: first nonzero entry scanning top to bottom, columns left
    to right. With reduced=True the result is canonical RREF.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    mul = ctx.mul
    sub = ctx.sub
    inv = ctx.inv
    pivots = []
    pr = 0
    for col in range(ncols):
        piv = None
        for r in range(pr, nrows):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != pr:
            rows[pr], rows[piv] = rows[piv], rows[pr]
        head = rows[pr][col]
        if head != 1:
            factor = inv(head)
            rows[pr] = [mul(factor, v) for v in rows[pr]]
        prow = rows[pr]
        targets = range(nrows) if reduced else range(pr + 1, nrows)
        for r in targets:
            if r != pr and rows[r][col]:
                f = rows[r][col]
                rows[r] = [sub(a, mul(f, b)) if b else a for a, b in zip(rows[r], prow)]
        pivots.append(col)
        pr += 1
        if pr == nrows:
            break
    return pivots


def rref(ctx: FieldContext, rows) -> tuple[Matrix, tuple[int, ...]]:
    """Canonical reduced row-echelon form (zero rows dropped)."""
    work = [list(r) for r in rows]
    pivots = _eliminate(ctx, work, reduced=True)
    return tuple(tuple(r) for r in work[: len(pivots)]), tuple(pivots)


def mat_rank(ctx: FieldContext, rows) -> int:
    work = [list(r) for r in rows]
    return len(_eliminate(ctx, work, reduced=False))


def nullspace(ctx: FieldContext, rows, ncols: int | None = None) -> "Subspace":
    """Canonical basis of {v : rows . v = 0}."""
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    red, pivots = rref(ctx, rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = ctx.neg(red[r][fc])
        basis.append(vec)
    return Subspace.from_vectors(ctx, basis, ncols)


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of F_q^ambient held as a canonical RREF basis."""

    ctx: FieldContext
    basis: Matrix
    ambient: int

    @classmethod
    def from_vectors(cls, ctx: FieldContext, vectors, ambient: int) -> "Subspace":
        for v in vectors:
            if len(v) != ambient:
                raise DimensionMismatchError(f"vector length {len(v)} != ambient {ambient}")
        red, _ = rref(ctx, vectors) if vectors else ((), ())
        return cls(ctx=ctx, basis=red, ambient=ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _check_compatible(self, other: "Subspace") -> None:
        if self.ambient != other.ambient:
            raise DimensionMismatchError(
                f"ambient dimensions differ: {self.ambient} != {other.ambient}"
            )
        if (self.ctx.p, self.ctx.n, self.ctx.modulus) != (
            other.ctx.p,
            other.ctx.n,
            other.ctx.modulus,
        ):
            raise DimensionMismatchError("subspaces built over different fields")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        self._check_compatible(other)
        return self.basis == other.basis

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.n, self.ambient, self.basis))

    def contains_vector(self, vec) -> bool:
        """Membership by reduction against the RREF basis."""
        if len(vec) != self.ambient:
            raise DimensionMismatchError(f"vector length {len(vec)} != ambient {self.ambient}")
        ctx = self.ctx
        work = list(vec)
        for row in self.basis:
            pc = next(i for i, v in enumerate(row) if v)
            c = work[pc]
            if c:
                work = [ctx.sub(a, ctx.mul(c, b)) if b else a for a, b in zip(work, row)]
        return not any(work)

    def contains(self, other: "Subspace") -> bool:
        self._check_compatible(other)
        return all(self.contains_vector(row) for row in other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Solve the stacked homogeneous system relating coordinates in
        both bases, then map solutions back to ambient vectors."""
        self._check_compatible(other)
        ctx = self.ctx
        a, b = self.basis, other.basis
        if not a or not b:
            return Subspace(ctx=ctx, basis=(), ambient=self.ambient)
        na, nb = len(a), len(b)
        stacked = [
            [a[i][d] for i in range(na)] + [ctx.neg(b[j][d]) for j in range(nb)]
            for d in range(self.ambient)
        ]
        sol = nullspace(ctx, stacked, na + nb)
        vectors = []
        for srow in sol.basis:
            vec = [0] * self.ambient
            for i in range(na):
                c = srow[i]
                if c:
                    vec = [ctx.add(v, ctx.mul(c, w)) for v, w in zip(vec, a[i])]
            vectors.append(vec)
        return Subspace.from_vectors(ctx, vectors, self.ambient)

    def polynomials(self) -> list[list[int]]:
        """Basis rows as V[x] polynomials (requires ambient q - 2)."""
        return [from_coords(self.ctx, row) for row in self.basis]


# -- the shift operators --


@dataclass(frozen=True)
class ShiftOperator:
    ctx: FieldContext = field(repr=False)
    r: int
    matrix: Matrix = field(repr=False)


def shift_operator(ctx: FieldContext, r: int) -> ShiftOperator:
    """Matrix of f(x) -> f(x+r) - f(r) over the monomial coordinates.

    Column e-1 is built from the binomial expansion of (x+r)^e, so this
    route is independent of apply_shift's Horner substitution.
    """
    d = ctx.q - 2
    cols = []
    binom = [1]  # row e of Pascal's triangle mod p, refreshed per e
    mul = ctx.mul
    p = ctx.p
    rpow = [ctx.pow(r, e) for e in range(d + 1)]
    for e in range(1, d + 1):
        binom = [1] + [(binom[i] + binom[i + 1]) % p for i in range(len(binom) - 1)] + [1]
        col = [0] * d
        for k in range(1, e + 1):
            c = binom[k]
            if c:
                col[k - 1] = mul(c, rpow[e - k])
        cols.append(col)
    matrix = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    return ShiftOperator(ctx=ctx, r=r, matrix=matrix)


def apply_shift(ctx: FieldContext, r: int, f) -> list[int]:
    """f(x+r) - f(r) by direct substitution, no matrix involved."""
    require_vpoly(ctx, f)
    shifted = compose(ctx, f, [r, 1])
    out = list(shifted)
    if out:
        out[0] = 0  # constant term of f(x+r) is exactly f(r)
    return normalize(out)


def operator_order(op: ShiftOperator) -> int:
    """Smallest k >= 1 with matrix^k = I (1 for the zero shift)."""
    ident = mat_identity(len(op.matrix))
    if op.r == 0 or op.matrix == ident:
        return 1
    acc = op.matrix
    k = 1
    while acc != ident:
        acc = mat_mul(op.ctx, acc, op.matrix)
        k += 1
        if k > op.ctx.p:
            raise AssertionError("operator order exceeds the characteristic")
    return k


def _difference_matrix(ctx: FieldContext, r: int) -> Matrix:
    op = shift_operator(ctx, r)
    sub = ctx.sub
    return tuple(
        tuple(sub(v, 1) if i == j else v for j, v in enumerate(row))
        for i, row in enumerate(op.matrix)
    )


def _difference_power(ctx: FieldContext, r: int, k: int) -> Matrix:
    if not 1 <= k <= ctx.p:
        raise OutOfRangeError(f"k = {k} outside [1, p]")
    if r == 0:
        raise OutOfRangeError("kernel chain needs a nonzero shift")
    b = _difference_matrix(ctx, r)
    m = b
    for _ in range(k - 1):
        m = mat_mul(ctx, m, b)
    return m


def kernel_power(ctx: FieldContext, r: int, k: int) -> Subspace:
    """Canonical basis of ker((A_r - I)^k).

    The dimension is min(k * p^(n-1), q - 2): the generic step is
    p^(n-1) per power, saturating at the full space (for n = 1 the
    chain already saturates at k = p - 2).
    """
    return nullspace(ctx, _difference_power(ctx, r, k))


def kernel_dim(ctx: FieldContext, r: int, k: int) -> int:
    """dim ker((A_r - I)^k) without extracting a basis."""
    return (ctx.q - 2) - mat_rank(ctx, _difference_power(ctx, r, k))


def default_generators(ctx: FieldContext) -> list[int]:
    """1, a, a^2, ..., a^(n-1) for the primitive element a."""
    return [ctx.pow(ctx.primitive, i) for i in range(ctx.n)]


def intersection_space(ctx: FieldContext, k: int, generators=None) -> Subspace:
    """V_k: the intersection of ker((A_r - I)^k) over the generators."""
    if generators is None:
        generators = default_generators(ctx)
    if not generators:
        raise OutOfRangeError("need at least one generator")
    space = kernel_power(ctx, generators[0], k)
    for r in generators[1:]:
        space = space.intersect(kernel_power(ctx, r, k))
    return space


# -- explicit bases predicted by the structure results --


def _not_p_power(ctx: FieldContext, i: int) -> bool:
    while i % ctx.p == 0:
        i //= ctx.p
    return i != 1


def predicted_basis(ctx: FieldContext, variant: str, m: int | None = None, r: int | None = None):
    """Explicit polynomial lists for the four structure statements.

    lemma6      eigenspace of the unit shift: monomials x^(p^k) plus
                (x^p - x)^i for non-p-power i in [2, p^(n-1) - 1].
    theorem7    ker^m of the unit shift: x^j (x^p - x)^i and x^k
                (j < m, 1 <= i <= p^(n-1) - 1, k <= m); products whose
                degree would leave V[x] (only possible at m = p) are
                omitted, which does not change the span.
    theorem11   eigenspace of the shift by r: monomials plus
                (x^p - bx)^i with b = r^(p-1).
    corollary3  prime fields: x, x^2, ..., x^m.
    """
    p, n, q = ctx.p, ctx.n, ctx.q
    pn1 = p ** (n - 1)
    if variant == "lemma6":
        basis = [monomial(p**k) for k in range(n)]
        basis += [poly_pow(ctx, [0, ctx.neg(1)] + [0] * (p - 2) + [1], i)
                  for i in range(2, pn1) if _not_p_power(ctx, i)]
        return basis
    if variant == "theorem11":
        if r is None or r == 0:
            raise OutOfRangeError("theorem11 needs a nonzero shift r")
        b = ctx.pow(r, p - 1)
        basis = [monomial(p**k) for k in range(n)]
        base_poly = [0] * (p + 1)
        base_poly[1] = ctx.neg(b)
        base_poly[p] = 1
        basis += [poly_pow(ctx, base_poly, i) for i in range(2, pn1) if _not_p_power(ctx, i)]
        return basis
    if variant == "theorem7":
        if m is None or not 1 <= m <= p:
            raise OutOfRangeError(f"theorem7 needs m in [1, {p}]")
        base_poly = [0] * (p + 1)
        base_poly[1] = ctx.neg(1)
        base_poly[p] = 1
        basis = []
        power = [1]
        for i in range(1, pn1):
            power = poly_pow(ctx, base_poly, i)
            for j in range(m):
                if j + i * p <= q - 2:
                    shifted = [0] * j + power
                    basis.append(normalize(shifted))
        basis += [monomial(k) for k in range(1, m + 1) if k <= q - 2]
        return basis
    if variant == "corollary3":
        if n != 1:
            raise OutOfRangeError("corollary3 applies to prime fields only")
        if m is None or not 1 <= m <= p:
            raise OutOfRangeError(f"corollary3 needs m in [1, {p}]")
        return [monomial(k) for k in range(1, min(m, q - 2) + 1)]
    raise OutOfRangeError(f"unknown basis variant {variant!r}")


def span_of_polys(ctx: FieldContext, polys) -> Subspace:
    """Row-reduce a list of V[x] polynomials into a canonical subspace."""
    return Subspace.from_vectors(ctx, [coords(ctx, f) for f in polys], ctx.q - 2)
