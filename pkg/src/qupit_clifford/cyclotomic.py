"""Exact arithmetic in Q(w), w a primitive 4p-th root of unity.

Elements are stored in the power basis 1, x, ..., x^(2p-3) modulo the
cyclotomic polynomial Phi_4p(x) = Phi_p(-x^2), with integer numerators over
one positive common denominator.  Every value is kept fully reduced, so two
elements are equal iff their stored data are identical.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


@dataclass(frozen=True)
class CycCtx:
    """Field data for a fixed odd prime p.

    ``modulus`` holds the integer coefficients of Phi_4p, lowest degree
    first.  Use :func:`context` rather than constructing this directly.
    """

    p: int
    m: int = field(init=False)
    modulus: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        p = self.p
        if not isinstance(p, int) or p < 3 or not is_prime(p):
            raise ValueError(f"p must be an odd prime, got {p!r}")
        coeffs = [0] * (2 * p - 1)
        for k in range(p):
            coeffs[2 * k] = (-1) ** k
        object.__setattr__(self, "m", 4 * p)
        object.__setattr__(self, "modulus", tuple(coeffs))

    @property
    def degree(self) -> int:
        return 2 * (self.p - 1)

    @property
    def zero(self) -> Cyc:
        return Cyc._raw(self, (0,) * self.degree, 1)

    @property
    def one(self) -> Cyc:
        return self.omega(0)

    @property
    def i(self) -> Cyc:
        return self.omega(self.p)

    def lam(self, k: int = 1) -> Cyc:
        """lambda^k with lambda = w^4, a primitive p-th root of unity."""
        return self.omega(4 * k)

    def omega(self, k: int = 1) -> Cyc:
        return _omega_cached(self, k % self.m)

    def const(self, q) -> Cyc:
        q = Fraction(q)
        num = [0] * self.degree
        num[0] = q.numerator
        return Cyc._raw(self, tuple(num), q.denominator)

    def from_coeffs(self, coeffs) -> Cyc:
        """Build an element from rational coefficients of any length.

        Coefficients of x^k for k >= 2p-2 are reduced modulo Phi_4p.
        """
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        num = [int(c * den) for c in fr]
        return Cyc._make(self, _reduce(self, num), den)


@lru_cache(maxsize=None)
def context(p: int) -> CycCtx:
    return CycCtx(p)


@lru_cache(maxsize=4096)
def _omega_cached(ctx: CycCtx, k: int) -> Cyc:
    num = [0] * (2 * ctx.p)
    if k < 2 * ctx.p:
        num[k] = 1
    else:
        num[k - 2 * ctx.p] = -1
    return Cyc._raw(ctx, tuple(_reduce(ctx, num)), 1)


def omega_pow(ctx: CycCtx, k: int) -> Cyc:
    return ctx.omega(k)


def _reduce(ctx: CycCtx, num: list[int]) -> list[int]:
    """Reduce an integer coefficient list modulo Phi_4p (destroys ``num``)."""
    p = ctx.p
    d = ctx.degree
    # fold x^(2p) = -1 first; Phi_4p divides x^(2p) + 1
    if len(num) > 2 * p:
        folded = [0] * (2 * p)
        for k, c in enumerate(num):
            if c:
                q, r = divmod(k, 2 * p)
                folded[r] += -c if q & 1 else c
        num = folded
    elif len(num) < d:
        num = num + [0] * (d - len(num))
    mod = ctx.modulus
    for top in range(len(num) - 1, d - 1, -1):
        c = num[top]
        if c:
            shift = top - d
            for j in range(0, d, 2):
                # monic modulus, only even-degree terms are nonzero
                num[shift + j] -= c * mod[j]
    return num[:d]


class Cyc:
    """An exact element of Q(w)."""

    __slots__ = ("ctx", "_num", "_den", "_hash")

    def __init__(self, ctx: CycCtx, coeffs):
        other = ctx.from_coeffs(coeffs)
        self.ctx = ctx
        self._num = other._num
        self._den = other._den
        self._hash = None

    @classmethod
    def _raw(cls, ctx, num: tuple, den: int) -> Cyc:
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, ctx, num, den: int) -> Cyc:
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            if c:
                g = math.gcd(g, c)
                if g == 1:
                    break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        elif not any(num):
            den = 1
        return cls._raw(ctx, tuple(num), den)

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self._den) for c in self._num)

    def is_zero(self) -> bool:
        return not any(self._num)

    def is_rational(self) -> bool:
        return not any(self._num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self._num[0], self._den)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Cyc):
            return (self.ctx.p == other.ctx.p and self._den == other._den
                    and self._num == other._num)
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self._num[0], self._den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._num[0], self._den))
            else:
                self._hash = hash((self.ctx.p, self._num, self._den))
        return self._hash

    def __repr__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if k == 0 else f"{c}*w^{k}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyc[p={self.ctx.p}]({body})"

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> Cyc:
        if isinstance(other, Cyc):
            if other.ctx.p != self.ctx.p:
                raise ValueError(
                    f"context mismatch: p={self.ctx.p} vs p={other.ctx.p}")
            return other
        if isinstance(other, (int, Rational)):
            return self.ctx.const(other)
        raise TypeError(f"cannot combine Cyc with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            num = [a + b for a, b in zip(self._num, other._num)]
            return Cyc._make(self.ctx, num, d1)
        num = [a * d2 + b * d1 for a, b in zip(self._num, other._num)]
        return Cyc._make(self.ctx, num, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Cyc._raw(self.ctx, tuple(-c for c in self._num), self._den)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyc):
            q = Fraction(other)
            return Cyc._make(self.ctx, [c * q.numerator for c in self._num],
                             self._den * q.denominator)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        n2 = 2 * self.ctx.p
        acc = [0] * n2
        b_items = [(j, b) for j, b in enumerate(other._num) if b]
        for i, a in enumerate(self._num):
            if not a:
                continue
            for j, b in b_items:
                k = i + j
                if k < n2:
                    acc[k] += a * b
                else:
                    acc[k - n2] -= a * b
        return Cyc._make(self.ctx, _reduce(self.ctx, acc), self._den * other._den)

    __rmul__ = __mul__

    def mul_omega(self, k: int) -> Cyc:
        """Multiply by w^k; a negacyclic shift followed by reduction."""
        p = self.ctx.p
        k %= 4 * p
        if k == 0:
            return self
        n2 = 2 * p
        acc = [0] * n2
        for j, c in enumerate(self._num):
            if c:
                q, r = divmod(j + k, n2)
                acc[r] += -c if q & 1 else c
        return Cyc._raw(self.ctx, tuple(_reduce(self.ctx, acc)), self._den)

    def conj(self) -> Cyc:
        """Complex conjugation, the automorphism w -> w^-1."""
        p = self.ctx.p
        acc = [0] * (2 * p)
        acc[0] = self._num[0]
        for k in range(1, len(self._num)):
            # w^-k = w^(4p-k) = -w^(2p-k)
            acc[2 * p - k] -= self._num[k]
        return Cyc._raw(self.ctx, tuple(_reduce(self.ctx, acc)), self._den)

    def inv(self) -> Cyc:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(w)")
        if self.is_rational():
            return self.ctx.const(1 / self.to_fraction())
        u = _poly_inverse_mod(list(self.coeffs), [Fraction(c) for c in self.ctx.modulus])
        return self.ctx.from_coeffs(u)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Cyc):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- numerics and serialization ---------------------------------------

    def approx(self) -> complex:
        """Numeric value at w = exp(2 pi i / 4p), by Horner's rule."""
        w = cmath.exp(2j * math.pi / self.ctx.m)
        acc = 0j
        for c in reversed(self._num):
            acc = acc * w + c
        return acc / self._den

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, ctx: CycCtx, data) -> Cyc:
        if len(data) != ctx.degree:
            raise ValueError(f"expected {ctx.degree} coefficients, got {len(data)}")
        return ctx.from_coeffs(Fraction(s) for s in data)


def _poly_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_poly_trim(a)) >= len(b):
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for j, c in enumerate(b):
            a[shift + j] -= f * c
    return q, a


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _poly_trim([x - y for x, y in zip(a, b)])


def _poly_inverse_mod(a, m):
    """u with a*u = 1 mod m, by the extended Euclidean algorithm over Q."""
    r0, r1 = _poly_trim(list(m)), _poly_trim(list(a))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, _poly_trim(r)
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if not r1:
        raise ZeroDivisionError("element is not invertible")
    c = r1[0]
    return [x / c for x in s1]
