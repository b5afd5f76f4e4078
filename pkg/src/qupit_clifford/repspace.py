"""Characters, code spaces and exact linear algebra over Q(w).

Vectors are tuples of :class:`Cyc`; matrices are tuples of row tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .cyclotomic import Cyc, CycCtx
from .group import Group
from .monomial import Monomial, apply, canonical_key, trace

CycVector = tuple  # tuple[Cyc, ...]
CycMatrix = tuple  # tuple[tuple[Cyc, ...], ...]

MINUS = "minus"
PLUS = "plus"


def code_basis(ctx: CycCtx, sign: str = MINUS) -> list[CycVector]:
    """Spanning vectors of V1 (sign minus) or V2 (sign plus).

    v_x = e_x -/+ i e_(p + (-x mod p)) for x = 0..p-1, 0-based indices.
    """
    if sign not in (MINUS, PLUS):
        raise ValueError(f"sign must be {MINUS!r} or {PLUS!r}")
    p = ctx.p
    coeff = -ctx.i if sign == MINUS else ctx.i
    basis = []
    for x in range(p):
        v = [ctx.zero] * (2 * p)
        v[x] = ctx.one
        v[p + (-x) % p] = coeff
        basis.append(tuple(v))
    return basis


def unit_vector(ctx: CycCtx, j: int) -> CycVector:
    v = [ctx.zero] * (2 * ctx.p)
    v[j] = ctx.one
    return tuple(v)


def hdot(v: Sequence[Cyc], w: Sequence[Cyc]) -> Cyc:
    """v^dagger w."""
    acc = v[0].ctx.zero
    for a, b in zip(v, w):
        if a and b:
            acc = acc + a.conj() * b
    return acc


def qupit_qubit_label(p: int, j: int) -> tuple[int, int]:
    """0-based index j = m + p*s -> (qupit level m, qubit level s)."""
    s, m = divmod(j, p)
    return m, s


# -- matrices ----------------------------------------------------------------

def identity_matrix(ctx: CycCtx, n: int) -> CycMatrix:
    return tuple(tuple(ctx.one if r == c else ctx.zero for c in range(n)) for r in range(n))


def mat_add(x: CycMatrix, y: CycMatrix) -> CycMatrix:
    return tuple(tuple(a + b for a, b in zip(rx, ry)) for rx, ry in zip(x, y))


def mat_mul(x: CycMatrix, y: CycMatrix) -> CycMatrix:
    n, inner, cols = len(x), len(y), len(y[0])
    zero = x[0][0].ctx.zero
    out = [[zero] * cols for _ in range(n)]
    for r in range(n):
        for k in range(inner):
            a = x[r][k]
            if not a:
                continue
            for c, b in enumerate(y[k]):
                if b:
                    out[r][c] = out[r][c] + a * b
    return tuple(tuple(row) for row in out)


def mat_vec(x: CycMatrix, v: Sequence[Cyc]) -> CycVector:
    zero = v[0].ctx.zero
    out = []
    for row in x:
        acc = zero
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return tuple(out)


def adjoint(x: CycMatrix) -> CycMatrix:
    return tuple(tuple(x[r][c].conj() for r in range(len(x))) for c in range(len(x[0])))


def mat_trace(x: CycMatrix) -> Cyc:
    acc = x[0][0].ctx.zero
    for k in range(len(x)):
        acc = acc + x[k][k]
    return acc


def projector(basis: Sequence[CycVector]) -> CycMatrix:
    """Orthogonal projector sum_v v v^dagger / (v^dagger v)."""
    if not basis:
        raise ValueError("empty basis")
    norms = []
    for k, v in enumerate(basis):
        nv = hdot(v, v)
        if not nv:
            raise ValueError(f"basis vector {k} is zero")
        norms.append(nv)
        for l in range(k):
            if hdot(basis[l], v):
                raise ValueError(f"basis vectors {l} and {k} are not orthogonal")
    ctx = basis[0][0].ctx
    n = len(basis[0])
    out = [[ctx.zero] * n for _ in range(n)]
    for v, nv in zip(basis, norms):
        scale = nv.inv()
        support = [j for j in range(n) if v[j]]
        for r in support:
            vr = v[r] * scale
            for c in support:
                out[r][c] = out[r][c] + vr * v[c].conj()
    return tuple(tuple(row) for row in out)


# -- linear systems ----------------------------------------------------------

def span_membership(v: Sequence[Cyc], basis: Sequence[CycVector]) -> Optional[list[Cyc]]:
    """Coefficients c with v = sum_x c_x basis_x, or None if v is not in the span.

    Gaussian elimination on the augmented system, pivoting on the first
    nonzero entry of each column.  If the basis is dependent, free
    coefficients are set to zero.
    """
    ctx = v[0].ctx
    k = len(basis)
    rows = [[basis[x][r] for x in range(k)] + [v[r]] for r in range(len(v))]
    pivots = []
    top = 0
    for col in range(k):
        piv = next((r for r in range(top, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        inv = rows[top][col].inv()
        rows[top] = [a * inv if a else a for a in rows[top]]
        for r in range(len(rows)):
            if r != top and rows[r][col]:
                f = rows[r][col]
                rows[r] = [a - f * b if b else a for a, b in zip(rows[r], rows[top])]
        pivots.append(col)
        top += 1
    if any(rows[r][k] for r in range(top, len(rows))):
        return None
    coeffs = [ctx.zero] * k
    for r, col in enumerate(pivots):
        coeffs[col] = rows[r][k]
    return coeffs


def rank(vectors: Sequence[CycVector]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    top = 0
    for col in range(ncols):
        piv = next((r for r in range(top, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[top], rows[piv] = rows[piv], rows[top]
        inv = rows[top][col].inv()
        for r in range(top + 1, len(rows)):
            if rows[r][col]:
                f = rows[r][col] * inv
                rows[r] = [a - f * b if b else a for a, b in zip(rows[r], rows[top])]
        top += 1
    return top


@dataclass
class InvarianceResult:
    invariant: bool
    witness: Optional[tuple[int, int]] = None  # (generator index, basis index)

    def __bool__(self):
        return self.invariant


def is_invariant(basis: Sequence[CycVector], gens: Sequence[Monomial]) -> InvarianceResult:
    for gi, g in enumerate(gens):
        for vi, v in enumerate(basis):
            if span_membership(apply(g, v), basis) is None:
                return InvarianceResult(False, (gi, vi))
    return InvarianceResult(True)


# -- characters --------------------------------------------------------------

class Character:
    """Values of a class function on every element of ``group``."""

    def __init__(self, group: Group, values: Mapping[bytes, Cyc]):
        self.group = group
        self.values = dict(values)

    def __call__(self, g: Monomial) -> Cyc:
        try:
            return self.values[canonical_key(g)]
        except KeyError:
            raise KeyError(f"character has no value at {g!r}") from None

    @property
    def degree(self) -> Cyc:
        return self(self.group.elements[0])  # closure lists the identity first

    def restrict(self, S: Group) -> Character:
        return Character(S, {canonical_key(s): self(s) for s in S})

    def __add__(self, other: Character) -> Character:
        return Character(self.group, {k: v + other.values[k] for k, v in self.values.items()})

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.values == other.values


def natural_character(G: Group) -> Character:
    return Character(G, {canonical_key(g): trace(g) for g in G})


def trace_against(m: Monomial, P: CycMatrix) -> Cyc:
    """tr(M P) in O(n): sum_k w^phase[k] P[k][perm[k]]."""
    acc = m.ctx.zero
    for k, (r, e) in enumerate(zip(m.perm, m.phase)):
        x = P[k][r]
        if x:
            acc = acc + x.mul_omega(e)
    return acc


def restricted_character(S: Group, P: CycMatrix) -> Character:
    return Character(S, {canonical_key(s): trace_against(s, P) for s in S})


def inner_product(chi: Character, psi: Character, over: Group, check: bool = True) -> Cyc:
    """(1/|over|) sum_g chi(g) conj(psi(g)).

    With ``check`` the result must be a nonnegative rational integer, as it
    is for genuine characters; anything else raises ArithmeticError.
    """
    acc = over.ctx.zero
    for g in over:
        x = chi(g)
        if not x:
            continue
        y = psi(g)
        if y:
            acc = acc + x * y.conj()
    result = acc / over.order
    if check:
        if not result.is_rational():
            raise ArithmeticError(f"character inner product {result} is not rational")
        q = result.to_fraction()
        if q.denominator != 1 or q < 0:
            raise ArithmeticError(f"character inner product {q} is not a nonnegative integer")
    return result


# -- export ------------------------------------------------------------------

def vector_to_json(v: Sequence[Cyc]) -> list:
    return [x.to_json() for x in v]


def matrix_to_json(x: CycMatrix) -> list:
    return [vector_to_json(row) for row in x]


def vector_from_json(ctx: CycCtx, data) -> CycVector:
    return tuple(Cyc.from_json(ctx, x) for x in data)


def matrix_from_json(ctx: CycCtx, data) -> CycMatrix:
    return tuple(vector_from_json(ctx, row) for row in data)


def export_code_data(ctx: CycCtx) -> dict:
    p = ctx.p
    v1 = code_basis(ctx, MINUS)
    v2 = code_basis(ctx, PLUS)
    labels = []
    for j in range(2 * p):
        m, s = qupit_qubit_label(p, j)
        labels.append({"index": j, "qupit": m, "qubit": s})
    return {
        "p": p,
        "dimension": 2 * p,
        "labels": labels,
        "V1": [vector_to_json(v) for v in v1],
        "V2": [vector_to_json(v) for v in v2],
        "P1": matrix_to_json(projector(v1)),
        "P2": matrix_to_json(projector(v2)),
    }
