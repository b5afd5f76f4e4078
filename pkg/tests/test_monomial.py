import json
import random

import pytest
from hypothesis import given, strategies as st

from qupit_clifford.cyclotomic import context
from qupit_clifford.group import closure
from qupit_clifford.monomial import (
    Monomial, apply, canonical_key, conj_transpose, dense_mul, generators,
    identity, inverse, mul, order, power, scale, to_dense, trace,
)
from qupit_clifford.repspace import code_basis

PRIMES = [3, 5, 7]


@st.composite
def monomials(draw, p):
    ctx = context(p)
    perm = draw(st.permutations(range(2 * p)))
    phase = draw(st.lists(st.integers(0, 4 * p - 1), min_size=2 * p, max_size=2 * p))
    return Monomial(ctx, perm, phase)


@st.composite
def vectors(draw, p):
    ctx = context(p)
    return tuple(ctx.from_coeffs(draw(st.lists(st.integers(-3, 3), min_size=ctx.degree,
                                                max_size=ctx.degree)))
                 for _ in range(2 * p))


def monomial_pairs():
    return st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(monomials(p), monomials(p)))


def dense_identity(ctx, n):
    return [[ctx.one if r == c else ctx.zero for c in range(n)] for r in range(n)]


@pytest.mark.parametrize("p", PRIMES)
def test_identity(p):
    ctx = context(p)
    e = identity(ctx)
    assert trace(e) == 2 * p
    A, B, C = generators(ctx)
    assert mul(e, C) == C and mul(C, e) == C
    assert inverse(e) == e
    assert to_dense(e) == dense_identity(ctx, 2 * p)


@pytest.mark.parametrize("p", PRIMES)
def test_generator_relations(p):
    ctx = context(p)
    A, B, C = generators(ctx)
    e = identity(ctx)
    assert mul(mul(A, B), inverse(A)) == scale(B, 4)
    assert mul(C, C) == scale(e, 2 * p)
    assert (order(A), order(B), order(C)) == (p, 4 * p, 4)
    assert inverse(A) == power(A, p - 1)
    assert inverse(C) == scale(C, 2 * p)


@pytest.mark.parametrize("p", PRIMES)
def test_traces_of_generators(p):
    ctx = context(p)
    A, B, C = generators(ctx)
    assert trace(A).is_zero() and trace(C).is_zero()
    assert trace(B).is_zero()
    dense_b = to_dense(B)
    assert abs(sum(dense_b[k][k].approx() for k in range(2 * p))) < 1e-12


def test_c_blocks():
    ctx = context(3)
    C = to_dense(generators(ctx)[2])
    for r in range(3):
        for c in range(3):
            assert C[r][c + 3] == (1 if r == c else 0)
            assert C[r + 3][c] == (-1 if r == c else 0)
            assert C[r][c].is_zero() and C[r + 3][c + 3].is_zero()


def test_scale():
    ctx = context(5)
    A, B, C = generators(ctx)
    assert scale(B, 0) == B
    assert scale(scale(B, 7), 20 - 7) == B
    lam = scale(identity(ctx), 4)
    assert all(mul(lam, g) == mul(g, lam) for g in (A, B, C))
    assert to_dense(lam)[2][2] == ctx.lam()


def test_dense_product_of_a_and_c():
    ctx = context(3)
    A, B, C = generators(ctx)
    assert to_dense(mul(A, C)) == dense_mul(to_dense(A), to_dense(C))


@given(monomial_pairs())
def test_mul_matches_dense(mn):
    m, n = mn
    assert to_dense(mul(m, n)) == dense_mul(to_dense(m), to_dense(n))


@given(monomial_pairs())
def test_trace_is_cyclic(mn):
    m, n = mn
    assert trace(mul(m, n)) == trace(mul(n, m))


@given(st.sampled_from(PRIMES).flatmap(lambda p: st.tuples(monomials(p), monomials(p), vectors(p))))
def test_apply_is_homomorphism(data):
    m, n, v = data
    assert apply(mul(m, n), v) == apply(m, apply(n, v))
    assert apply(identity(m.ctx), v) == v


@given(st.sampled_from(PRIMES).flatmap(monomials))
def test_inverse_is_conj_transpose(m):
    assert mul(m, inverse(m)) == identity(m.ctx)
    assert to_dense(inverse(m)) == conj_transpose(to_dense(m))


@given(monomial_pairs())
def test_key_injective(mn):
    m, n = mn
    assert (canonical_key(m) == canonical_key(n)) == (m == n)


def test_key_stable():
    ctx = context(3)
    assert canonical_key(identity(ctx)) == canonical_key(identity(ctx))


def test_keys_distinct_over_group():
    G = closure(generators(context(3)))
    assert len({canonical_key(g) for g in G}) == 216


@pytest.mark.parametrize("p", PRIMES)
def test_unitarity_exact(p):
    ctx = context(p)
    G = closure(generators(ctx))
    rng = random.Random(p)
    sample = list(generators(ctx)) + [G.elements[rng.randrange(G.order)] for _ in range(100)]
    eye = dense_identity(ctx, 2 * p)
    for g in sample:
        d = to_dense(g)
        assert dense_mul(d, conj_transpose(d)) == eye


@pytest.mark.parametrize("p", PRIMES)
def test_generator_action_on_code_basis(p):
    ctx = context(p)
    A, B, C = generators(ctx)
    v = code_basis(ctx, "minus")
    for x in range(p):
        # sigma shifts down, so A moves v_x to v_(x-1)
        assert apply(A, v[x]) == v[(x - 1) % p]
        assert apply(C, v[x]) == tuple(-ctx.i * c for c in v[(-x) % p])


def test_apply_length_mismatch():
    ctx = context(3)
    with pytest.raises(ValueError):
        apply(identity(ctx), (ctx.one,) * 5)


def test_json_roundtrip_and_validation():
    ctx = context(3)
    C = generators(ctx)[2]
    data = json.loads(json.dumps(C.to_json()))
    assert data == {"n": 6, "perm": [3, 4, 5, 0, 1, 2], "phase": [6, 6, 6, 0, 0, 0]}
    assert Monomial.from_json(ctx, data) == C
    with pytest.raises(ValueError):
        Monomial.from_json(ctx, {"n": 6, "perm": [0, 0, 1, 2, 3, 4], "phase": [0] * 6})
    with pytest.raises(ValueError):
        Monomial.from_json(ctx, {"n": 6, "perm": list(range(6)), "phase": [12] + [0] * 5})
    with pytest.raises(ValueError):
        Monomial.from_json(ctx, {"n": 10, "perm": list(range(10)), "phase": [0] * 10})
