import random

import pytest

from qupit_clifford.cyclotomic import context
from qupit_clifford.monomial import apply, generators, identity, inverse, mul, scale
from qupit_clifford.repspace import (
    adjoint, code_basis, export_code_data, hdot, identity_matrix, inner_product,
    is_invariant, mat_add, mat_mul, mat_trace, mat_vec, matrix_from_json,
    natural_character, projector, qupit_qubit_label, rank, restricted_character,
    span_membership, unit_vector, vector_from_json,
)


def test_basis_at_p3():
    ctx = context(3)
    v = code_basis(ctx, "minus")
    # v_0 = e_1 - i e_4 in 1-based labels
    assert v[0][0] == ctx.one and v[0][3] == -ctx.i
    assert sum(1 for x in v[0] if x) == 2
    u = code_basis(ctx, "plus")
    assert u[1][1] == ctx.one and u[1][5] == ctx.i


def test_bad_sign():
    with pytest.raises(ValueError):
        code_basis(context(3), "both")


@pytest.mark.parametrize("p", [3, 5, 7])
def test_orthogonality(p):
    ctx = context(p)
    v = code_basis(ctx, "minus")
    u = code_basis(ctx, "plus")
    for x in range(p):
        for y in range(p):
            assert hdot(v[x], v[y]) == (2 if x == y else 0)
            assert hdot(v[x], u[y]).is_zero()
    assert rank(v + u) == 2 * p
    assert rank(v) == p


@pytest.mark.parametrize("p", [3, 5])
def test_projectors(p):
    ctx = context(p)
    v = code_basis(ctx, "minus")
    u = code_basis(ctx, "plus")
    P1, P2 = projector(v), projector(u)
    assert mat_mul(P1, P1) == P1
    assert adjoint(P1) == P1
    assert mat_trace(P1) == p
    assert mat_add(P1, P2) == identity_matrix(ctx, 2 * p)
    assert mat_vec(P1, v[0]) == v[0]
    assert all(x.is_zero() for x in mat_vec(P1, u[0]))


def test_projector_rejects_bad_input():
    ctx = context(3)
    v = code_basis(ctx, "minus")
    with pytest.raises(ValueError):
        projector([v[0], tuple(a + b for a, b in zip(v[0], v[1]))])
    with pytest.raises(ValueError):
        projector([tuple([ctx.zero] * 6)])
    with pytest.raises(ValueError):
        projector([])


def test_span_membership():
    ctx = context(3)
    v = code_basis(ctx, "minus")
    u = code_basis(ctx, "plus")
    assert span_membership(v[0], v) == [ctx.one, ctx.zero, ctx.zero]
    assert span_membership(tuple([ctx.zero] * 6), v) == [ctx.zero] * 3
    e1 = unit_vector(ctx, 0)
    assert span_membership(e1, v) is None
    coeffs = span_membership(e1, v + u)
    half = ctx.const(1) / 2
    assert coeffs[0] == half and coeffs[3] == half
    w = tuple(2 * a - ctx.i * b for a, b in zip(v[1], v[2]))
    assert span_membership(w, v) == [ctx.zero, ctx.const(2), -ctx.i]


@pytest.mark.parametrize("p", [3, 5])
def test_invariance(p, request):
    code = request.getfixturevalue(f"code{p}")
    A, B, C = code.gens
    assert is_invariant(code.V1, [A, code.B4, C])
    assert is_invariant(code.V2, [A, code.B4, C])
    bad = is_invariant(code.V1, [B])
    assert not bad and bad.witness == (0, 0)


@pytest.mark.parametrize("p", [3, 5])
def test_b_swaps_code_spaces(p):
    ctx = context(p)
    B = generators(ctx)[1]
    v = code_basis(ctx, "minus")
    u = code_basis(ctx, "plus")
    for x in range(p):
        scale_x = ctx.i * ctx.lam(x)
        assert apply(B, v[x]) == tuple(scale_x * c for c in u[x])


def test_invariance_exhaustive_p3(code3):
    assert is_invariant(code3.V1, list(code3.N))
    assert is_invariant(code3.V2, list(code3.N))


def test_natural_character(code3):
    phi = code3.phi
    ctx = code3.ctx
    assert phi(identity(ctx)) == 6
    for a in range(3):
        assert phi(scale(identity(ctx), 4 * a)) == 6 * ctx.lam(a)
    assert phi(code3.A).is_zero()
    assert phi.degree == 6


def test_restricted_character_values(code3):
    ctx = code3.ctx
    chi1 = code3.chi1
    assert chi1(identity(ctx)) == 3
    assert chi1(code3.C) == -ctx.i
    assert chi1(code3.B4).is_zero()
    # agrees with the dense definition tr(n P)
    from qupit_clifford.monomial import to_dense
    for n in code3.N.elements[:20]:
        assert chi1(n) == mat_trace(mat_mul(to_dense(n), code3.P1))


@pytest.mark.parametrize("p", [3, 5])
def test_inner_products(p, request):
    code = request.getfixturevalue(f"code{p}")
    G, N = code.G, code.N
    assert inner_product(code.phi, code.phi, G) == 1
    assert inner_product(code.phi_N, code.phi_N, N) == 2
    assert inner_product(code.chi1, code.chi1, N) == 1
    assert inner_product(code.chi2, code.chi2, N) == 1
    assert inner_product(code.chi1, code.chi2, N) == 0
    assert inner_product(code.chi1, code.phi_N, N) == 1


def test_inner_product_rejects_non_integral(code3):
    from qupit_clifford.repspace import Character
    from qupit_clifford.monomial import canonical_key
    N = code3.N
    half = Character(N, {canonical_key(n): code3.ctx.zero for n in N})
    e = identity(code3.ctx)
    half.values[canonical_key(e)] = code3.ctx.one
    with pytest.raises(ArithmeticError):
        inner_product(half, half, N)
    assert inner_product(half, half, N, check=False) == code3.ctx.const(1) / N.order


def test_missing_value(code3):
    with pytest.raises(KeyError):
        inner_product(code3.chi1, code3.phi, code3.G)


@pytest.mark.parametrize("p", [3, 5])
def test_class_function_and_split(p, request):
    code = request.getfixturevalue(f"code{p}")
    rng = random.Random(p)
    N = code.N
    for _ in range(50):
        g = N.elements[rng.randrange(N.order)]
        h = N.elements[rng.randrange(N.order)]
        conj = mul(mul(g, h), inverse(g))
        assert code.chi1(conj) == code.chi1(h)
        assert code.phi(conj) == code.phi(h)
    assert code.chi1 + code.chi2 == code.phi_N


def test_labels():
    assert qupit_qubit_label(5, 0) == (0, 0)
    assert qupit_qubit_label(5, 7) == (2, 1)
    assert [qupit_qubit_label(3, j) for j in range(6)] == [
        (0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]


def test_export_roundtrip():
    ctx = context(5)
    data = export_code_data(ctx)
    assert len(data["V1"]) == 5 and len(data["V2"]) == 5
    assert vector_from_json(ctx, data["V1"][2]) == code_basis(ctx, "minus")[2]
    assert matrix_from_json(ctx, data["P2"]) == projector(code_basis(ctx, "plus"))
    assert all(l["index"] == l["qupit"] + 5 * l["qubit"] for l in data["labels"])
