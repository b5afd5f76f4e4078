"""Exact construction and certification of a non-stabilizer Clifford code
encoding one qupit into a qupit-qubit pair, for any odd prime p."""

from .clifford import CliffordCode, CliffordCodeReport, certify, verify_props
from .cyclotomic import Cyc, CycCtx, context, omega_pow
from .group import Group, closure
from .monomial import Monomial, generators

__all__ = [
    "CliffordCode", "CliffordCodeReport", "Cyc", "CycCtx", "Group", "Monomial",
    "certify", "closure", "context", "generators", "omega_pow", "verify_props",
]
