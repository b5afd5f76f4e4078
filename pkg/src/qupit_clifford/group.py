"""Finite groups of monomial matrices, plus the (a, b, c, kind) normal form.

Every element of G = <A, B, C> is uniquely

    diag:  lambda^a * diag((i tau)^b sigma^c, (i tau)^-b sigma^-c)
    anti:  lambda^a * [[0, (i tau)^b sigma^c], [-(i tau)^-b sigma^-c, 0]]

with a, c mod p and b mod 4p.  The anti form is the diag form times C.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .cyclotomic import CycCtx
from .monomial import (
    SIGMA_SHIFT, Monomial, canonical_key, generators, identity, inverse, mul,
)

DEFAULT_CAP = 10**6


class CapExceeded(RuntimeError):
    pass


class NotInGroup(ValueError):
    pass


class Group:
    """A closed set of monomial matrices with its generators.

    Elements are kept in discovery order; membership is a dict lookup on the
    canonical key.
    """

    def __init__(self, gens: Sequence[Monomial], elements: Sequence[Monomial]):
        self.gens = tuple(gens)
        self.elements = tuple(elements)
        self._index = {canonical_key(g): k for k, g in enumerate(self.elements)}
        if len(self._index) != len(self.elements):
            raise ValueError("duplicate elements")

    @property
    def ctx(self) -> CycCtx:
        return self.elements[0].ctx

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.elements)

    def __contains__(self, g: Monomial) -> bool:
        return canonical_key(g) in self._index

    def keys(self) -> frozenset[bytes]:
        return frozenset(self._index)

    def issubset(self, other: Group) -> bool:
        return all(g in other for g in self.elements)

    def same_elements(self, other: Group) -> bool:
        return self.keys() == other.keys()

    def __repr__(self):
        return f"Group(p={self.ctx.p}, order={self.order}, ngens={len(self.gens)})"

    def to_json(self, with_elements: bool = False) -> dict:
        out = {
            "p": self.ctx.p,
            "generators": [g.to_json() for g in self.gens],
            "order": self.order,
        }
        if with_elements:
            out["element_keys"] = [canonical_key(g).hex() for g in self.elements]
        return out


def closure(gens: Iterable[Monomial], cap: int = DEFAULT_CAP) -> Group:
    """Breadth-first saturation under left multiplication by the generators."""
    gens = list(gens)
    if not gens:
        raise ValueError("closure needs at least one generator")
    n = gens[0].n
    if any(g.n != n or g.ctx.p != gens[0].ctx.p for g in gens):
        raise ValueError("generators must share dimension and context")
    order_gens = sorted(gens, key=canonical_key)
    e = identity(gens[0].ctx)
    seen = {canonical_key(e)}
    elements = [e]
    queue = deque([e])
    while queue:
        g = queue.popleft()
        for s in order_gens:
            h = mul(s, g)
            k = canonical_key(h)
            if k not in seen:
                if len(elements) >= cap:
                    raise CapExceeded(f"group order exceeds cap={cap}")
                seen.add(k)
                elements.append(h)
                queue.append(h)
    return Group(gens, elements)


def commutes(g: Monomial, h: Monomial) -> bool:
    return mul(g, h) == mul(h, g)


def center(G: Group) -> Group:
    elems = [g for g in G if all(commutes(g, s) for s in G.gens)]
    return closure(elems)


def _require_subset(S: Group, G: Group):
    if not S.issubset(G):
        raise ValueError("subgroup is not contained in the group")


def is_normal(S: Group, G: Group, exhaustive: bool = False) -> bool:
    _require_subset(S, G)
    outer = G.elements if exhaustive else G.gens
    inner = S.elements if exhaustive else S.gens
    for g in outer:
        gi = inverse(g)
        for s in inner:
            if mul(mul(g, s), gi) not in S:
                return False
    return True


def index(G: Group, S: Group) -> int:
    _require_subset(S, G)
    q, r = divmod(G.order, S.order)
    if r:
        raise ValueError(f"|S|={S.order} does not divide |G|={G.order}")
    return q


def is_abelian(S: Group) -> bool:
    gens = S.gens
    return all(commutes(g, h) for g, h in combinations(gens, 2))


def coset_representatives(Q: Group, Z: Group) -> list[Monomial]:
    """One representative per left coset gZ, in discovery order of Q."""
    covered: set[bytes] = set()
    reps = []
    for g in Q:
        if canonical_key(g) in covered:
            continue
        reps.append(g)
        covered.update(canonical_key(mul(g, z)) for z in Z)
    return reps


def subgroups_between(Z: Group, Q: Group, abelian_only: bool = False,
                      max_cosets: int = 20) -> list[Group]:
    """All subgroups H with Z <= H <= Q, by brute force over coset subsets."""
    _require_subset(Z, Q)
    reps = [g for g in coset_representatives(Q, Z) if g not in Z]
    if len(reps) > max_cosets:
        raise ValueError(f"{len(reps)} nontrivial cosets; brute force is capped at {max_cosets}")
    base = list(Z.gens) or [identity(Q.ctx)]
    found: dict[frozenset, Group] = {}
    for r in range(len(reps) + 1):
        for subset in combinations(reps, r):
            H = closure(base + list(subset), cap=Q.order)
            found.setdefault(H.keys(), H)
    groups = list(found.values())
    if abelian_only:
        groups = [H for H in groups if is_abelian(H)]
    groups.sort(key=lambda H: (H.order, sorted(H.keys())))
    return groups


# -- normal form -------------------------------------------------------------

DIAG = "diag"
ANTI = "anti"


@dataclass(frozen=True)
class SymbolicElement:
    p: int
    a: int
    b: int
    c: int
    kind: str = DIAG

    def __post_init__(self):
        p = self.p
        object.__setattr__(self, "a", self.a % p)
        object.__setattr__(self, "b", self.b % (4 * p))
        object.__setattr__(self, "c", self.c % p)
        if self.kind not in (DIAG, ANTI):
            raise ValueError(f"kind must be {DIAG!r} or {ANTI!r}")

    def astuple(self) -> tuple[int, int, int, str]:
        return (self.a, self.b, self.c, self.kind)


def _diag_block(ctx: CycCtx, a: int, b: int, c: int) -> Monomial:
    p = ctx.p
    d = SIGMA_SHIFT
    perm = [0] * (2 * p)
    phase = [0] * (2 * p)
    for j in range(p):
        r = (j + d * c) % p
        perm[j] = r
        phase[j] = 4 * a + p * b + 4 * b * r
        r2 = (j - d * c) % p
        perm[p + j] = p + r2
        phase[p + j] = 4 * a - p * b - 4 * b * r2
    return Monomial(ctx, perm, phase)


def decode(ctx: CycCtx, s: SymbolicElement) -> Monomial:
    if s.p != ctx.p:
        raise ValueError("context mismatch")
    g = _diag_block(ctx, s.a, s.b, s.c)
    if s.kind == ANTI:
        g = mul(g, generators(ctx)[2])
    return g


def all_symbolic(p: int) -> Iterator[SymbolicElement]:
    for kind in (DIAG, ANTI):
        for a in range(p):
            for b in range(4 * p):
                for c in range(p):
                    yield SymbolicElement(p, a, b, c, kind)


def parameterize(g: Monomial) -> SymbolicElement:
    ctx = g.ctx
    p = ctx.p
    kind = DIAG if g.perm[0] < p else ANTI
    x = g
    if kind == ANTI:
        # g = D C, so D = g C^-1 = g (-C)
        c_inv = inverse(generators(ctx)[2])
        x = mul(g, c_inv)
    col_of_row = {r: j for j, r in enumerate(x.perm[:p])}
    if sorted(col_of_row) != list(range(p)):
        raise NotInGroup("upper block is not a permutation of the first p indices")
    c = (SIGMA_SHIFT * x.perm[0]) % p
    e0 = x.phase[col_of_row[0]]
    e1 = x.phase[col_of_row[1]]
    if (e1 - e0) % 4:
        raise NotInGroup("phase step is not a power of lambda")
    b_p = ((e1 - e0) // 4) % p
    b_4 = (e0 * p) % 4  # p is its own inverse mod 4
    t = ((b_p - b_4) * pow(4, -1, p)) % p
    b = b_4 + 4 * t
    if (e0 - p * b) % 4:
        raise NotInGroup("scalar part is not a power of lambda")
    a = ((e0 - p * b) // 4) % p
    s = SymbolicElement(p, a, b, c, kind)
    if decode(ctx, s) != g:
        raise NotInGroup(f"no normal form matches {g!r}")
    return s


def _dmul(s: SymbolicElement, t: SymbolicElement) -> tuple[int, int, int]:
    # sigma^c tau^b' = lambda^(-SIGMA_SHIFT c b') tau^b' sigma^c
    return (s.a + t.a - SIGMA_SHIFT * s.c * t.b, s.b + t.b, s.c + t.c)


def _flip(t: SymbolicElement) -> SymbolicElement:
    # C D(a, b, c) = D(a, -b, -c) C
    return SymbolicElement(t.p, t.a, -t.b, -t.c, DIAG)


def symbolic_mul(s: SymbolicElement, t: SymbolicElement) -> SymbolicElement:
    if s.p != t.p:
        raise ValueError("context mismatch")
    p = s.p
    if s.kind == DIAG:
        return SymbolicElement(p, *_dmul(s, t), t.kind)
    prod = SymbolicElement(p, *_dmul(s, _flip(t)), DIAG)
    if t.kind == DIAG:
        return SymbolicElement(p, prod.a, prod.b, prod.c, ANTI)
    # C^2 = -I = D(0, 2p, 0)
    minus_one = SymbolicElement(p, 0, 2 * p, 0, DIAG)
    return SymbolicElement(p, *_dmul(prod, minus_one), DIAG)


__all__ = [
    "ANTI", "DEFAULT_CAP", "DIAG", "CapExceeded", "Group", "NotInGroup",
    "SymbolicElement", "all_symbolic", "center", "closure", "commutes",
    "coset_representatives", "decode", "index", "is_abelian", "is_normal",
    "parameterize", "subgroups_between", "symbolic_mul",
]
