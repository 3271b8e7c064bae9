"""Exact arithmetic in small finite fields F_q, q = p^n.

An element is its index: the integer whose base-p digits are the
coefficients (c_0, ..., c_{n-1}) of the residue c_0 + c_1*t + ... +
c_{n-1}*t^(n-1) modulo a fixed monic irreducible of degree n. Index 0
is the additive identity and index 1 the multiplicative identity; for
n = 1 the index is simply the residue mod p.

Construction is deterministic so element encodings are reproducible:
the modulus is the lexicographically smallest monic irreducible of
degree n (coefficients compared from degree 0 upward, with an override
hook for cross-checking), and the primitive element is the smallest
index of multiplicative order q - 1. Multiplication and division run
on discrete exp/log tables; small fields additionally get flat q*q
add/sub/mul tables that hot loops index directly.

Contexts are immutable after construction and safe to share between
threads; every operation is a pure read.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    NonPrimeError,
    NotADivisorError,
    NotIrreducibleError,
)

DEFAULT_FIELD_CAP = 1 << 16

# Largest q for which the flat q*q operation tables are built.
FLAT_TABLE_LIMIT = 512


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, ascending."""
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


def _poly_rem(f: list[int], g: tuple[int, ...], p: int) -> list[int]:
    # remainder of f modulo monic g, coefficients mod p
    f = [c % p for c in f]
    dg = len(g) - 1
    for i in range(len(f) - 1, dg - 1, -1):
        c = f[i]
        if c:
            for j in range(dg + 1):
                f[i - dg + j] = (f[i - dg + j] - c * g[j]) % p
    while f and f[-1] == 0:
        f.pop()
    return f


def _is_irreducible(candidate: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    n = len(candidate) - 1
    if n == 1:
        return True
    if candidate[0] == 0:  # divisible by t
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            divisor = (*low, 1)
            if not _poly_rem(list(candidate), divisor, p):
                return False
    return True


def _smallest_modulus(p: int, n: int) -> tuple[int, ...]:
    for low in itertools.product(range(p), repeat=n):
        candidate = (*low, 1)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FieldContext:
    """Immutable arithmetic context for F_{p^n}."""

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.q = q = p**n
        self.modulus = modulus
        self._pows = [p**i for i in range(n + 1)]

        # primitive element: smallest index of multiplicative order q - 1,
        # verified against the prime factorization of q - 1
        if q == 2:
            self.primitive = 1
        else:
            checks = [(q - 1) // f for f in prime_factors(q - 1)]
            for g in range(2, q):
                if all(self._pow_raw(g, e) != 1 for e in checks):
                    self.primitive = g
                    break
            else:
                raise AssertionError("no primitive element found")

        exp = [1] * (q - 1)
        x = 1
        for i in range(1, q - 1):
            x = self._mul_raw(x, self.primitive)
            exp[i] = x
        self.exp_table = exp
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        log[0] = -1  # sentinel, never valid
        self.log_table = log

        self.neg_table = [self._neg_digits(x) for x in range(q)]
        self.frob_table = [self.pow(x, p) for x in range(q)]

        if q <= FLAT_TABLE_LIMIT:
            add_t = [0] * (q * q)
            for x in range(q):
                base = x * q
                for y in range(x, q):
                    s = self._add_digits(x, y)
                    add_t[base + y] = s
                    add_t[y * q + x] = s
            neg = self.neg_table
            sub_t = [0] * (q * q)
            for x in range(q):
                base = x * q
                for y in range(q):
                    sub_t[base + y] = add_t[base + neg[y]]
            mul_t = [0] * (q * q)
            for x in range(1, q):
                lx = log[x]
                base = x * q
                for y in range(1, q):
                    mul_t[base + y] = exp[(lx + log[y]) % (q - 1)]
            self.add_table = add_t
            self.sub_table = sub_t
            self.mul_table = mul_t
        else:
            self.add_table = None
            self.sub_table = None
            self.mul_table = None

    # -- raw digit arithmetic (used before tables exist) --

    def digits(self, x: int) -> tuple[int, ...]:
        p = self.p
        return tuple((x // self._pows[i]) % p for i in range(self.n))

    def from_digits(self, digs) -> int:
        return sum(d % self.p * self._pows[i] for i, d in enumerate(digs))

    def _mul_raw(self, x: int, y: int) -> int:
        p, n = self.p, self.n
        if n == 1:
            return (x * y) % p
        a = self.digits(x)
        b = self.digits(y)
        conv = [0] * (2 * n - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        g = self.modulus
        for i in range(2 * n - 2, n - 1, -1):
            c = conv[i] % p
            if c:
                for j in range(n):
                    conv[i - n + j] = (conv[i - n + j] - c * g[j]) % p
        return self.from_digits(conv[:n])

    def _pow_raw(self, x: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_raw(r, x)
            x = self._mul_raw(x, x)
            e >>= 1
        return r

    def _add_digits(self, x: int, y: int) -> int:
        p = self.p
        if self.n == 1:
            return (x + y) % p
        if p == 2:
            return x ^ y
        s = 0
        for pw in self._pows[: self.n]:
            s += ((x // pw + y // pw) % p) * pw
        return s

    def _neg_digits(self, x: int) -> int:
        p = self.p
        if self.n == 1:
            return (p - x) % p
        if p == 2:
            return x
        s = 0
        for pw in self._pows[: self.n]:
            s += ((p - (x // pw) % p) % p) * pw
        return s

    # -- element operations --

    def add(self, x: int, y: int) -> int:
        t = self.add_table
        if t is not None:
            return t[x * self.q + y]
        return self._add_digits(x, y)

    def sub(self, x: int, y: int) -> int:
        t = self.sub_table
        if t is not None:
            return t[x * self.q + y]
        return self._add_digits(x, self.neg_table[y])

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def mul(self, x: int, y: int) -> int:
        t = self.mul_table
        if t is not None:
            return t[x * self.q + y]
        if x == 0 or y == 0:
            return 0
        return self.exp_table[(self.log_table[x] + self.log_table[y]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp_table[-self.log_table[x] % (self.q - 1)]

    def div(self, x: int, y: int) -> int:
        if y == 0:
            raise ZeroDivisionError("division by zero")
        if x == 0:
            return 0
        return self.exp_table[(self.log_table[x] - self.log_table[y]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        """x**e with the exponent reduced mod q - 1 for nonzero x."""
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[x] * e) % (self.q - 1)]

    def frobenius(self, x: int) -> int:
        return self.frob_table[x]

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def __repr__(self):
        return f"FieldContext(p={self.p}, n={self.n})"


def build_field(
    p: int,
    n: int = 1,
    modulus_override=None,
    cap: int = DEFAULT_FIELD_CAP,
) -> FieldContext:
    """Construct F_{p^n} with deterministic modulus and primitive element.

    modulus_override, when given, is a coefficient list (degree 0 first)
    of a monic irreducible of degree n and replaces the default
    lexicographically smallest choice.
    """
    if not isinstance(p, int) or not is_prime(p):
        raise NonPrimeError(f"p = {p} is not prime")
    if not isinstance(n, int) or n < 1:
        raise NotIrreducibleError(f"extension degree n = {n} must be >= 1")
    q = p**n
    if q > cap:
        raise CapExceededError(f"q = {q} exceeds cap {cap}")
    if modulus_override is not None:
        mod = tuple(int(c) % p for c in modulus_override)
        if len(mod) != n + 1 or mod[-1] != 1:
            raise NotIrreducibleError(f"override {modulus_override!r} is not monic of degree {n}")
        if not _is_irreducible(mod, p):
            raise NotIrreducibleError(f"override {modulus_override!r} is reducible over F_{p}")
    else:
        mod = _smallest_modulus(p, n)
    return FieldContext(p, n, mod)


@dataclass(frozen=True)
class Line:
    """The nonzero F_p-multiples of one element, with b = r^(p-1)."""

    representative: int
    members: tuple[int, ...]
    b: int


def line_count(ctx: FieldContext) -> int:
    return (ctx.q - 1) // (ctx.p - 1)


def line_decomposition(ctx: FieldContext) -> list[Line]:
    """Partition F_q^* into its (q-1)/(p-1) lines, smallest member first."""
    seen = [False] * ctx.q
    lines = []
    for r in range(1, ctx.q):
        if seen[r]:
            continue
        members = tuple(sorted(ctx.mul(i, r) for i in range(1, ctx.p)))
        for m in members:
            seen[m] = True
        lines.append(Line(representative=r, members=members, b=ctx.pow(r, ctx.p - 1)))
    return lines


def roots_of_unity(ctx: FieldContext, d: int) -> list[int]:
    """All x with x^d = 1, sorted by index. Requires d | q - 1."""
    if d < 1 or (ctx.q - 1) % d != 0:
        raise NotADivisorError(f"{d} does not divide q - 1 = {ctx.q - 1}")
    step = (ctx.q - 1) // d
    return sorted(ctx.exp_table[(i * step) % (ctx.q - 1)] for i in range(d))
