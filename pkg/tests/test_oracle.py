import random

import numpy as np
import pytest

from qupit_clifford.clifford import certify
from qupit_clifford.cyclotomic import context
from qupit_clifford.monomial import generators, identity, mul
from qupit_clifford.oracle import (
    check_unitary, cross_check, lower, numeric_basis, numeric_generators,
)
from qupit_clifford.repspace import code_basis


def test_lower_basics():
    ctx = context(3)
    assert np.array_equal(lower(identity(ctx)), np.eye(6))
    C = lower(generators(ctx)[2])
    assert set(np.round(C.real, 12).ravel()) <= {0.0, 1.0, -1.0}
    assert np.max(np.abs(C.imag)) < 1e-15
    v = lower(code_basis(ctx, "minus")[0])
    assert np.allclose(v, numeric_basis(3, -1)[:, 0], atol=1e-15)


def test_lower_respects_products(code7):
    G = code7.G
    rng = random.Random(1)
    for _ in range(50):
        g = G.elements[rng.randrange(G.order)]
        h = G.elements[rng.randrange(G.order)]
        assert np.max(np.abs(lower(mul(g, h)) - lower(g) @ lower(h))) < 1e-9


@pytest.mark.parametrize("p", [3, 5, 7])
def test_generators_match_formula(p):
    exact = generators(context(p))
    for g, X in zip(exact, numeric_generators(p)):
        assert np.max(np.abs(lower(g) - X)) < 1e-12
        assert check_unitary(g, 1e-12).passed


def test_unitary_failure_detected():
    X = lower(generators(context(3))[0])
    r, c = np.argwhere(X != 0)[0]
    X[r, c] *= 2
    r = check_unitary(X, 1e-12)
    assert not r.passed and r.value > 0.5


def test_random_elements_unitary(code7):
    rng = random.Random(7)
    for _ in range(100):
        g = code7.G.elements[rng.randrange(code7.G.order)]
        assert check_unitary(g, 1e-9).passed


def test_cross_check_p3(code3):
    checks = cross_check(certify(3, code=code3), code=code3)
    failed = [c.name for c in checks if not c.passed]
    assert failed == []
    by_name = {c.name: c for c in checks}
    assert by_name["phi_G_norm"].value < 1e-9
    assert by_name["B_breaks_V1"].passed and by_name["B_breaks_V1"].value > 1


def test_cross_check_catches_wrong_report(code3):
    report = certify(3, code=code3)
    report.norms["phi_G"] = 2
    report.quasikernel_order = 12
    failed = {c.name for c in cross_check(report, code=code3) if not c.passed}
    assert failed == {"phi_G_norm", "quasikernel_order"}
