"""Double-precision re-verification of the exact results.

The numeric generators, code bases and projectors here are built straight
from their matrix definitions with numpy, so they share no arithmetic with
the exact layer; only the list of group elements is borrowed from it.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from typing import Optional, Sequence

import numpy as np

from .clifford import CliffordCode, CliffordCodeReport
from .cyclotomic import Cyc
from .monomial import SIGMA_SHIFT, Monomial, generators

SINGLE_TOL = 1e-12
SUM_TOL = 1e-9


def lower(obj) -> np.ndarray:
    """Complex counterpart of a Monomial, a Cyc vector or a Cyc matrix."""
    if isinstance(obj, Monomial):
        n = obj.n
        out = np.zeros((n, n), dtype=complex)
        cols = np.arange(n)
        out[list(obj.perm), cols] = np.exp(2j * np.pi * np.array(obj.phase) / obj.ctx.m)
        return out
    if isinstance(obj, Cyc):
        return np.array(obj.approx())
    return np.array([lower(x) for x in obj], dtype=complex)


def numeric_generators(p: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lam = np.exp(2j * np.pi / p)
    sigma = np.roll(np.eye(p), SIGMA_SHIFT, axis=0)
    tau = np.diag(lam ** np.arange(p))
    zero = np.zeros((p, p))
    A = np.block([[sigma, zero], [zero, np.linalg.inv(sigma)]])
    B = np.block([[1j * tau, zero], [zero, -1j * np.linalg.inv(tau)]])
    C = np.block([[zero, np.eye(p)], [-np.eye(p), zero]])
    return A, B, C


def numeric_basis(p: int, sign: int) -> np.ndarray:
    """Columns e_x + sign*i e_(p + (-x mod p)); sign -1 gives V1, +1 gives V2."""
    V = np.zeros((2 * p, p), dtype=complex)
    for x in range(p):
        V[x, x] = 1
        V[p + (-x) % p, x] = sign * 1j
    return V


def numeric_projector(V: np.ndarray) -> np.ndarray:
    return V @ np.linalg.inv(V.conj().T @ V) @ V.conj().T


@dataclass
class NumericCheck:
    name: str
    passed: bool
    value: float
    tol: float


def check_unitary(M, tol: float = SINGLE_TOL) -> NumericCheck:
    X = lower(M) if not isinstance(M, np.ndarray) else M
    dev = float(np.max(np.abs(X @ X.conj().T - np.eye(X.shape[0]))))
    return NumericCheck("unitary", bool(np.isfinite(dev) and dev <= tol), dev, tol)


def _char_norm(traces_a: np.ndarray, traces_b: np.ndarray) -> complex:
    return complex(np.mean(traces_a * traces_b.conj()))


def cross_check(report: CliffordCodeReport, tol: float = SUM_TOL,
                code: Optional[CliffordCode] = None, samples: int = 100,
                seed: int = 0) -> list[NumericCheck]:
    """Re-derive the report's key numbers in floating point."""
    p = report.p
    code = code or CliffordCode(p)
    out: list[NumericCheck] = []

    def record(name, value, expected=0.0, t=tol, above=False):
        dev = abs(value - expected)
        ok = bool(np.isfinite(dev) and (dev > t if above else dev <= t))
        out.append(NumericCheck(name, ok, float(dev), t))

    A, B, C = numeric_generators(p)
    exact = generators(code.ctx)
    gen_dev = max(float(np.max(np.abs(lower(g) - X))) for g, X in zip(exact, (A, B, C)))
    record("generators_match", gen_dev, t=SINGLE_TOL)
    for name, X in zip("ABC", (A, B, C)):
        u = check_unitary(X, SINGLE_TOL)
        record(f"unitary_{name}", u.value, t=SINGLE_TOL)

    G, N = code.G, code.N
    tr_G = np.array([np.trace(lower(g)) for g in G])
    record("phi_G_norm", _char_norm(tr_G, tr_G), report.norms["phi_G"])
    n_index = np.array([G._index[k] for k in N._index])
    tr_N = tr_G[n_index]
    record("phi_N_norm", _char_norm(tr_N, tr_N), report.norms["phi_N"])

    V1, V2 = numeric_basis(p, -1), numeric_basis(p, +1)
    P1, P2 = numeric_projector(V1), numeric_projector(V2)
    record("projector_idempotent", float(np.max(np.abs(P1 @ P1 - P1))), t=SINGLE_TOL)
    record("projector_hermitian", float(np.max(np.abs(P1 - P1.conj().T))), t=SINGLE_TOL)
    record("projectors_sum_to_identity", float(np.max(np.abs(P1 + P2 - np.eye(2 * p)))), t=SINGLE_TOL)
    record("projector_matches_exact", float(np.max(np.abs(lower(code.P1) - P1))), t=SINGLE_TOL)

    chi1 = np.array([np.trace(lower(n) @ P1) for n in N])
    chi2 = np.array([np.trace(lower(n) @ P2) for n in N])
    record("chi1_norm", _char_norm(chi1, chi1), report.norms["chi1_N"])
    record("chi1_chi2_orthogonal", _char_norm(chi1, chi2), 0.0)
    record("chi1_phi_N_multiplicity", _char_norm(chi1, tr_N), report.multiplicity_chi1_phiN)
    record("chi1_plus_chi2_is_phi_N", float(np.max(np.abs(chi1 + chi2 - tr_N))))

    I = np.eye(2 * p)
    B4 = np.linalg.matrix_power(B, 4)
    for label, V, P in (("V1", V1, P1), ("V2", V2, P2)):
        res = max(float(np.max(np.abs((I - P) @ g @ V))) for g in (A, B4, C))
        record(f"invariance_residual_{label}", res, t=SINGLE_TOL)
    record("B_breaks_V1", float(np.linalg.norm((I - P1) @ B @ V1[:, 0])), t=tol, above=True)

    scalar_count = 0
    worst = 0.0
    for g in G:
        W = lower(g) @ V1
        mu = W[0, 0] / V1[0, 0]
        res = float(np.max(np.abs(W - mu * V1)))
        if res <= tol:
            scalar_count += 1
            worst = max(worst, res)
    record("quasikernel_order", scalar_count, report.quasikernel_order, t=0.5)
    record("quasikernel_scalar_residual", worst)

    rng = random.Random(seed)
    picks = [G.elements[rng.randrange(G.order)] for _ in range(samples)]
    record("unitary_random_elements", max(check_unitary(g, tol).value for g in picks))
    return out


def attach(report: CliffordCodeReport, checks: Sequence[NumericCheck]) -> CliffordCodeReport:
    report.oracle = [asdict(c) for c in checks]
    return report
