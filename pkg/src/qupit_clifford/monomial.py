"""Monomial matrices of degree 2p with entries in <w>.

Column convention: ``M e_j = w^phase[j] e_perm[j]`` (0-based indices; the
basis vector e_h of 1-based notation is index h-1).  Signs are phase
exponents too, -1 being w^(2p).
"""

from __future__ import annotations

import json
from array import array
from functools import lru_cache
from typing import Sequence

from .cyclotomic import Cyc, CycCtx, context

# sigma e_j = e_(j + SIGMA_SHIFT mod p).  With -1, A B A^-1 = lambda B holds
# exactly; +1 would give lambda^-1 B instead.
SIGMA_SHIFT = -1


class Monomial:
    __slots__ = ("ctx", "perm", "phase", "_hash")

    def __init__(self, ctx: CycCtx, perm: Sequence[int], phase: Sequence[int]):
        n = 2 * ctx.p
        perm = tuple(int(j) for j in perm)
        if len(perm) != n or len(phase) != n:
            raise ValueError(f"expected length {n}, got {len(perm)} and {len(phase)}")
        if sorted(perm) != list(range(n)):
            raise ValueError(f"not a permutation: {perm}")
        self.ctx = ctx
        self.perm = perm
        self.phase = tuple(int(k) % ctx.m for k in phase)
        self._hash = None

    @classmethod
    def _raw(cls, ctx, perm, phase):
        obj = object.__new__(cls)
        obj.ctx = ctx
        obj.perm = perm
        obj.phase = phase
        obj._hash = None
        return obj

    @property
    def n(self) -> int:
        return len(self.perm)

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return (self.ctx.p == other.ctx.p and self.perm == other.perm
                and self.phase == other.phase)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.perm, self.phase))
        return self._hash

    def __repr__(self):
        return f"Monomial(p={self.ctx.p}, perm={list(self.perm)}, phase={list(self.phase)})"

    def __matmul__(self, other: Monomial) -> Monomial:
        return mul(self, other)

    def key(self) -> bytes:
        return canonical_key(self)

    def to_json(self) -> dict:
        return {"n": self.n, "perm": list(self.perm), "phase": list(self.phase)}

    @classmethod
    def from_json(cls, ctx: CycCtx, data) -> Monomial:
        if isinstance(data, str):
            data = json.loads(data)
        if data["n"] != 2 * ctx.p:
            raise ValueError(f"dimension {data['n']} does not match p={ctx.p}")
        if any(not 0 <= k < ctx.m for k in data["phase"]):
            raise ValueError("phase exponents must lie in [0, 4p)")
        return cls(ctx, data["perm"], data["phase"])


def identity(ctx: CycCtx) -> Monomial:
    n = 2 * ctx.p
    return Monomial._raw(ctx, tuple(range(n)), (0,) * n)


@lru_cache(maxsize=None)
def generators(ctx: CycCtx) -> tuple[Monomial, Monomial, Monomial]:
    """The three generators A, B, C.

    A = diag(sigma, sigma^-1), B = diag(i tau, i^-1 tau^-1) and C the block
    antidiagonal matrix with I_p top right and -I_p bottom left.
    """
    p = ctx.p
    s = SIGMA_SHIFT
    a_perm = [(j + s) % p for j in range(p)] + [p + (j - s) % p for j in range(p)]
    a = Monomial(ctx, a_perm, [0] * (2 * p))
    # i = w^p, lambda^j = w^(4j)
    b_phase = [p + 4 * j for j in range(p)] + [-p - 4 * j for j in range(p)]
    b = Monomial(ctx, range(2 * p), b_phase)
    c_perm = [j + p for j in range(p)] + list(range(p))
    c = Monomial(ctx, c_perm, [2 * p] * p + [0] * p)
    return a, b, c


def mul(m: Monomial, n: Monomial) -> Monomial:
    if m.ctx.p != n.ctx.p or len(m.perm) != len(n.perm):
        raise ValueError("dimension mismatch")
    mp, mph = m.perm, m.phase
    mod = m.ctx.m
    perm = tuple(mp[j] for j in n.perm)
    phase = tuple((k + mph[j]) % mod for j, k in zip(n.perm, n.phase))
    return Monomial._raw(m.ctx, perm, phase)


def inverse(m: Monomial) -> Monomial:
    n = len(m.perm)
    mod = m.ctx.m
    perm = [0] * n
    phase = [0] * n
    for j, (r, k) in enumerate(zip(m.perm, m.phase)):
        perm[r] = j
        phase[r] = -k % mod
    return Monomial._raw(m.ctx, tuple(perm), tuple(phase))


def power(m: Monomial, k: int) -> Monomial:
    if k < 0:
        return power(inverse(m), -k)
    out = identity(m.ctx)
    for _ in range(k):
        out = mul(m, out)
    return out


def scale(m: Monomial, k: int) -> Monomial:
    """Multiply by the scalar w^k."""
    mod = m.ctx.m
    return Monomial._raw(m.ctx, m.perm, tuple((x + k) % mod for x in m.phase))


def order(m: Monomial) -> int:
    e = identity(m.ctx)
    x, k = m, 1
    while x != e:
        x = mul(m, x)
        k += 1
    return k


def is_scalar(m: Monomial) -> bool:
    return m.perm == tuple(range(len(m.perm))) and len(set(m.phase)) == 1


def trace(m: Monomial) -> Cyc:
    counts = trace_exponents(m)
    ctx = m.ctx
    if not counts:
        return ctx.zero
    return ctx.from_coeffs(_expand_counts(ctx, counts))


def trace_exponents(m: Monomial) -> dict[int, int]:
    """Multiset of w-exponents on the diagonal, as {exponent: count}."""
    counts: dict[int, int] = {}
    for j, (r, k) in enumerate(zip(m.perm, m.phase)):
        if r == j:
            counts[k] = counts.get(k, 0) + 1
    return counts


def _expand_counts(ctx: CycCtx, counts: dict[int, int]) -> list[int]:
    n2 = 2 * ctx.p
    coeffs = [0] * n2
    for k, c in counts.items():
        if k < n2:
            coeffs[k] += c
        else:
            coeffs[k - n2] -= c
    return coeffs


def apply(m: Monomial, v: Sequence[Cyc]) -> tuple[Cyc, ...]:
    if len(v) != len(m.perm):
        raise ValueError(f"length mismatch: {len(v)} vs {len(m.perm)}")
    out = [m.ctx.zero] * len(v)
    for j, (r, k) in enumerate(zip(m.perm, m.phase)):
        x = v[j]
        if x:
            out[r] = out[r] + x.mul_omega(k)
    return tuple(out)


def canonical_key(m: Monomial) -> bytes:
    return array("I", m.perm + m.phase).tobytes()


def to_dense(m: Monomial) -> list[list[Cyc]]:
    ctx = m.ctx
    n = len(m.perm)
    rows = [[ctx.zero] * n for _ in range(n)]
    for j, (r, k) in enumerate(zip(m.perm, m.phase)):
        rows[r][j] = ctx.omega(k)
    return rows


def dense_mul(x: Sequence[Sequence[Cyc]], y: Sequence[Sequence[Cyc]]) -> list[list[Cyc]]:
    """Plain matrix product; used as an oracle against :func:`mul`."""
    n, inner, cols = len(x), len(y), len(y[0])
    zero = x[0][0].ctx.zero
    out = [[zero] * cols for _ in range(n)]
    for r in range(n):
        for k in range(inner):
            a = x[r][k]
            if not a:
                continue
            row = y[k]
            for c in range(cols):
                if row[c]:
                    out[r][c] = out[r][c] + a * row[c]
    return out


def conj_transpose(x: Sequence[Sequence[Cyc]]) -> list[list[Cyc]]:
    return [[x[r][c].conj() for r in range(len(x))] for c in range(len(x[0]))]


__all__ = [
    "Monomial", "SIGMA_SHIFT", "apply", "canonical_key", "conj_transpose",
    "context", "dense_mul", "generators", "identity", "inverse", "is_scalar",
    "mul", "order", "power", "scale", "to_dense", "trace", "trace_exponents",
]
