"""The Clifford code (G, rho, N, chi_1), its quasikernel and certification.

:class:`CliffordCode` builds every object lazily, so a single proposition
check only pays for what it touches.  :func:`certify` runs all checks and
returns a :class:`CliffordCodeReport`.
"""

from __future__ import annotations

import json
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Optional, Sequence

from .cyclotomic import Cyc, CycCtx, context, is_prime
from .group import (
    ANTI, DEFAULT_CAP, DIAG, CapExceeded, Group, all_symbolic, center, closure,
    decode, index, is_abelian, is_normal, parameterize, subgroups_between,
)
from .monomial import (
    Monomial, apply, canonical_key, generators, identity, inverse, is_scalar,
    mul, power, scale,
)
from .repspace import (
    MINUS, PLUS, Character, CycVector, code_basis, inner_product, is_invariant,
    natural_character, projector, rank, restricted_character,
)

SCHEMA_VERSION = 1

STABILIZER = "stabilizer"
NON_STABILIZER = "non-stabilizer"


def scalar_action(g: Monomial, basis: Sequence[CycVector]) -> Optional[Cyc]:
    """The scalar mu with g v = mu v for every basis vector, else None."""
    if not basis:
        raise ValueError("empty basis")
    mu = None
    for v in basis:
        w = apply(g, v)
        j = next(k for k, x in enumerate(v) if x)
        m = w[j] / v[j]
        if mu is None:
            mu = m
        elif m != mu:
            return None
        if any(wk != vk * m for wk, vk in zip(w, v)):
            return None
    return mu


def quasikernel(G: Group, basis: Sequence[CycVector]) -> Group:
    elems = [g for g in G if scalar_action(g, basis) is not None]
    Q = closure(elems, cap=G.order)
    if Q.order != len(elems):
        raise ArithmeticError("scalar-acting elements do not form a subgroup")
    return Q


# -- stabilizer criterion ----------------------------------------------------

@dataclass
class Candidate:
    order: int
    N_over_H: int
    chi1_sq: int
    deg_rho: int
    stabilizer_match: bool
    deg_rho_match: bool


@dataclass
class StabilizerVerdict:
    quasikernel_order: int
    candidates: list[Candidate]
    verdict: str
    criteria_agree: bool

    @property
    def candidate_orders(self) -> list[int]:
        return [c.order for c in self.candidates]


def stabilizer_test(G: Group, N: Group, basis: Sequence[CycVector],
                    chi: Character, Z: Optional[Group] = None) -> StabilizerVerdict:
    """Decide whether the code is a stabilizer code.

    Candidates are the abelian H with Z(G) <= H <= quasikernel.  The code is
    a stabilizer code iff some candidate has chi(1)^2 = |N|/|H|.  The
    comparison deg rho = |N|/|H| is recorded next to it, and
    ``criteria_agree`` is False if the two ever disagree.
    """
    Z = Z if Z is not None else center(G)
    if not is_normal(N, G):
        raise ValueError("N is not normal in G")
    if not Z.issubset(N):
        raise ValueError("N does not contain Z(G)")
    if inner_product(chi, chi, N) != 1:
        raise ValueError("chi is not irreducible on N")
    Q = quasikernel(G, basis)
    if not Z.issubset(Q):
        raise ArithmeticError("Z(G) is not inside the quasikernel")
    deg = chi.degree.to_fraction()
    chi1_sq = deg * deg
    deg_rho = len(basis[0])
    candidates = []
    for H in subgroups_between(Z, Q, abelian_only=True):
        if not (Z.issubset(H) and H.issubset(Q) and is_abelian(H)):
            raise ArithmeticError("candidate subgroup violates Z <= H <= Q, abelian")
        ratio = Fraction(N.order, H.order)
        candidates.append(Candidate(
            order=H.order,
            N_over_H=_as_int(ratio),
            chi1_sq=_as_int(chi1_sq),
            deg_rho=deg_rho,
            stabilizer_match=chi1_sq == ratio,
            deg_rho_match=deg_rho == ratio,
        ))
    verdict = STABILIZER if any(c.stabilizer_match for c in candidates) else NON_STABILIZER
    agree = (any(c.deg_rho_match for c in candidates) == (verdict == STABILIZER))
    return StabilizerVerdict(Q.order, candidates, verdict, agree)


def _as_int(q: Fraction):
    return int(q) if q.denominator == 1 else str(q)


# -- lazily assembled code data ----------------------------------------------

class CliffordCode:
    def __init__(self, p: int, cap: int = DEFAULT_CAP):
        self.ctx: CycCtx = context(p)
        self.p = p
        self.cap = cap

    @cached_property
    def gens(self) -> tuple[Monomial, Monomial, Monomial]:
        return generators(self.ctx)

    @property
    def A(self):
        return self.gens[0]

    @property
    def B(self):
        return self.gens[1]

    @property
    def C(self):
        return self.gens[2]

    @cached_property
    def B4(self) -> Monomial:
        return power(self.B, 4)

    @cached_property
    def AB(self) -> Group:
        return closure([self.A, self.B], cap=self.cap)

    @cached_property
    def G(self) -> Group:
        return closure(self.gens, cap=self.cap)

    @cached_property
    def N(self) -> Group:
        return closure([self.A, self.B4, self.C], cap=self.cap)

    @cached_property
    def Z(self) -> Group:
        return center(self.G)

    @cached_property
    def V1(self) -> list[CycVector]:
        return code_basis(self.ctx, MINUS)

    @cached_property
    def V2(self) -> list[CycVector]:
        return code_basis(self.ctx, PLUS)

    @cached_property
    def P1(self):
        return projector(self.V1)

    @cached_property
    def P2(self):
        return projector(self.V2)

    @cached_property
    def phi(self) -> Character:
        return natural_character(self.G)

    @cached_property
    def phi_N(self) -> Character:
        return self.phi.restrict(self.N)

    @cached_property
    def chi1(self) -> Character:
        return restricted_character(self.N, self.P1)

    @cached_property
    def chi2(self) -> Character:
        return restricted_character(self.N, self.P2)

    @cached_property
    def quasikernel_V1(self) -> Group:
        return quasikernel(self.G, self.V1)

    @cached_property
    def quasikernel_V2(self) -> Group:
        return quasikernel(self.G, self.V2)

    @cached_property
    def verdict_V1(self) -> StabilizerVerdict:
        return stabilizer_test(self.G, self.N, self.V1, self.chi1, self.Z)

    @cached_property
    def verdict_V2(self) -> StabilizerVerdict:
        return stabilizer_test(self.G, self.N, self.V2, self.chi2, self.Z)

    def norm(self, x: Character, y: Character, over: Group) -> int:
        return int(inner_product(x, y, over).to_fraction())


# -- proposition checks ------------------------------------------------------

@dataclass
class CheckResult:
    id: str
    title: str
    passed: bool
    detail: dict = field(default_factory=dict)
    error: Optional[str] = None


PROPOSITIONS: dict[str, tuple[str, Callable]] = {}
PREREQUISITES: dict[str, tuple[str, ...]] = {
    "T4.5": ("C3.4", "C3.6", "C4.2", "P4.4"),
    "P5.2": ("C4.2", "P4.4", "P5.1"),
}


def _proposition(pid: str, title: str):
    def register(fn):
        PROPOSITIONS[pid] = (title, fn)
        return fn
    return register


@_proposition("L3.1", "A B A^-1 = lambda B")
def _check_l31(code: CliffordCode):
    lhs = mul(mul(code.A, code.B), inverse(code.A))
    ok = lhs == scale(code.B, 4)
    return ok, {"lhs_phase": list(lhs.phase)} if not ok else {}


@_proposition("L3.2", "<A, B> has order 4p^3 and only diagonal-block elements")
def _check_l32(code: CliffordCode):
    p = code.p
    AB = code.AB
    expected = {canonical_key(decode(code.ctx, s)) for s in all_symbolic(p) if s.kind == DIAG}
    ok_order = AB.order == 4 * p**3
    ok_set = AB.keys() == expected
    return ok_order and ok_set, {"order": AB.order, "expected": 4 * p**3, "set_form": ok_set}


@_proposition("P3.3", "G has order 8p^3 and every element has a unique normal form")
def _check_p33(code: CliffordCode):
    p = code.p
    G = code.G
    decoded = {canonical_key(decode(code.ctx, s)) for s in all_symbolic(p)}
    roundtrip = all(decode(code.ctx, parameterize(g)) == g for g in G)
    ok = G.order == 8 * p**3 and len(decoded) == 8 * p**3 and decoded == G.keys() and roundtrip
    return ok, {"order": G.order, "expected": 8 * p**3, "decoded_distinct": len(decoded),
                "roundtrip": roundtrip}


@_proposition("C3.4", "rho is irreducible: (phi, phi)_G = 1")
def _check_c34(code: CliffordCode):
    n = code.norm(code.phi, code.phi, code.G)
    return n == 1, {"norm": n}


@_proposition("C3.5", "|Z(G)| = 2p, and Z(G) is the scalars +-lambda^a I")
def _check_c35(code: CliffordCode):
    p = code.p
    Z = code.Z
    e = identity(code.ctx)
    scalars = {canonical_key(scale(e, 4 * a + 2 * p * s)) for a in range(p) for s in range(2)}
    ok = Z.order == 2 * p and Z.keys() == scalars and all(is_scalar(z) for z in Z)
    return ok, {"order": Z.order, "expected": 2 * p}


@_proposition("C3.6", "deg rho = (G : Z(G))^(1/2)")
def _check_c36(code: CliffordCode):
    deg = code.G.elements[0].n
    idx = index(code.G, code.Z)
    return deg * deg == idx, {"deg_rho": deg, "index_G_Z": idx}


@_proposition("P4.1", "N has order 4p^3 and its normal forms have even b")
def _check_p41(code: CliffordCode):
    p = code.p
    N = code.N
    expected = {canonical_key(decode(code.ctx, s)) for s in all_symbolic(p) if s.b % 2 == 0}
    even = all(parameterize(n).b % 2 == 0 for n in N)
    ok = N.order == 4 * p**3 and N.keys() == expected and even
    return ok, {"order": N.order, "expected": 4 * p**3, "even_b": even}


@_proposition("C4.2", "N is normal in G, (G : N) = 2, and Z(G) <= N")
def _check_c42(code: CliffordCode):
    normal = is_normal(code.N, code.G)
    idx = index(code.G, code.N)
    contains = code.Z.issubset(code.N)
    return normal and idx == 2 and contains, {"normal": normal, "index": idx, "contains_center": contains}


@_proposition("P4.3", "V1 and V2 are N-invariant")
def _check_p43(code: CliffordCode, exhaustive: Optional[bool] = None):
    gens = [code.A, code.B4, code.C]
    if exhaustive is None:
        exhaustive = code.p == 3
    if exhaustive:
        gens = list(code.N)
    r1 = is_invariant(code.V1, gens)
    r2 = is_invariant(code.V2, gens)
    control = is_invariant(code.V1, [code.B])
    detail = {"V1": r1.invariant, "V2": r2.invariant, "exhaustive": exhaustive,
              "B_preserves_V1": control.invariant, "B_witness": control.witness}
    if not r1:
        detail["V1_witness"] = r1.witness
    if not r2:
        detail["V2_witness"] = r2.witness
    return r1.invariant and r2.invariant and not control.invariant, detail


@_proposition("P4.4", "chi1 and chi2 are irreducible characters of N")
def _check_p44(code: CliffordCode):
    N = code.N
    phi_n = code.norm(code.phi_N, code.phi_N, N)
    c11 = code.norm(code.chi1, code.chi1, N)
    c22 = code.norm(code.chi2, code.chi2, N)
    c12 = code.norm(code.chi1, code.chi2, N)
    split = (code.chi1 + code.chi2) == code.phi_N
    meet_zero = rank(list(code.V1) + list(code.V2)) == 2 * code.p
    ok = phi_n == 2 and c11 == 1 and c22 == 1 and c12 == 0 and split and meet_zero
    return ok, {"phi_N": phi_n, "chi1_chi1": c11, "chi2_chi2": c22, "chi1_chi2": c12,
                "chi1_plus_chi2_is_phi_N": split, "V1_meet_V2_zero": meet_zero}


@_proposition("T4.5", "V1 is a Clifford code with parameters (G, rho, N, chi1)")
def _check_t45(code: CliffordCode):
    mult = code.norm(code.chi1, code.phi_N, code.N)
    deg = code.chi1.degree.to_fraction()
    ok = mult != 0 and deg == code.p
    return ok, {"multiplicity_chi1_phiN": mult, "chi1_degree": int(deg)}


@_proposition("P5.1", "the quasikernel on chi of G is Z(G)")
def _check_p51(code: CliffordCode):
    q1, q2 = code.quasikernel_V1, code.quasikernel_V2
    no_anti = all(parameterize(g).kind != ANTI for g in q1)
    ok = q1.same_elements(code.Z) and q2.same_elements(code.Z) and no_anti
    return ok, {"order_V1": q1.order, "order_V2": q2.order, "center_order": code.Z.order,
                "excludes_antidiagonal": no_anti}


@_proposition("P5.2", "V1 and V2 are non-stabilizer Clifford codes")
def _check_p52(code: CliffordCode):
    v1, v2 = code.verdict_V1, code.verdict_V2
    sole = all(v.candidate_orders == [code.Z.order] for v in (v1, v2))
    ok = v1.verdict == NON_STABILIZER and v2.verdict == NON_STABILIZER and sole
    return ok, {"verdict_V1": v1.verdict, "verdict_V2": v2.verdict,
                "candidates": [asdict(c) for c in v1.candidates],
                "criteria_agree": v1.criteria_agree and v2.criteria_agree}


def run_check(code: CliffordCode, pid: str) -> CheckResult:
    title, fn = PROPOSITIONS[pid]
    try:
        passed, detail = fn(code)
        return CheckResult(pid, title, bool(passed), _jsonable(detail))
    except CapExceeded:
        raise
    except Exception as exc:  # recorded in the report, never fatal
        return CheckResult(pid, title, False, {}, f"{type(exc).__name__}: {exc}")


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def expand_props(props: Sequence[str]) -> list[str]:
    """Requested IDs plus prerequisites, in canonical order."""
    unknown = [pid for pid in props if pid not in PROPOSITIONS]
    if unknown:
        raise KeyError(f"unknown proposition id(s): {', '.join(unknown)}")
    wanted = set()
    stack = list(props)
    while stack:
        pid = stack.pop()
        if pid not in wanted:
            wanted.add(pid)
            stack.extend(PREREQUISITES.get(pid, ()))
    return [pid for pid in PROPOSITIONS if pid in wanted]


def validate_prime(p: int, cap: int = DEFAULT_CAP):
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    if 8 * p**3 > cap:
        raise CapExceeded(f"|G| = {8 * p**3} exceeds cap={cap}")


def verify_props(p: int, props: Sequence[str], cap: int = DEFAULT_CAP) -> list[CheckResult]:
    validate_prime(p, cap)
    ids = expand_props(props)
    code = CliffordCode(p, cap)
    return [run_check(code, pid) for pid in ids]


# -- report ------------------------------------------------------------------

@dataclass
class CliffordCodeReport:
    p: int
    orders: dict
    index_G_N: int
    norms: dict
    multiplicity_chi1_phiN: int
    invariance: dict
    quasikernel_order: int
    candidates: list
    verdict: str
    verdict_V2: str
    criteria_agree: bool
    checks: list
    timing: dict = field(default_factory=dict)
    oracle: list = field(default_factory=list)
    schema_version: int = SCHEMA_VERSION

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(o["passed"] for o in self.oracle)

    def failed_ids(self) -> list[str]:
        return [c.id for c in self.checks if not c.passed]

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d.pop("timing")
        return d

    def to_json(self, timing: bool = True, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> CliffordCodeReport:
        d = dict(d)
        d["candidates"] = [Candidate(**c) for c in d["candidates"]]
        d["checks"] = [CheckResult(**c) for c in d["checks"]]
        d.setdefault("timing", {})
        d.setdefault("oracle", [])
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> CliffordCodeReport:
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"Clifford code certification, p = {self.p}"]
        o = self.orders
        lines.append(f"  |G| = {o['G']}  |Z(G)| = {o['ZG']}  |N| = {o['N']}  |<A,B>| = {o['AB']}"
                     f"  (G:N) = {self.index_G_N}")
        n = self.norms
        lines.append(f"  (phi,phi)_G = {n['phi_G']}  (phi_N,phi_N)_N = {n['phi_N']}"
                     f"  (chi1,chi1)_N = {n['chi1_N']}  (chi1,phi_N)_N = {self.multiplicity_chi1_phiN}")
        lines.append(f"  quasikernel order = {self.quasikernel_order}  verdict = {self.verdict}")
        for c in self.candidates:
            lines.append(f"    H of order {c.order}: |N|/|H| = {c.N_over_H}, chi(1)^2 = {c.chi1_sq}"
                         f" (match {c.stabilizer_match}), deg rho = {c.deg_rho} (match {c.deg_rho_match})")
        if not self.criteria_agree:
            lines.append("  note: chi(1)^2 and deg rho criteria disagree")
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            extra = f"  [{c.error}]" if c.error else ""
            lines.append(f"  {mark} {c.id:5s} {c.title}{extra}")
        for r in self.oracle:
            mark = "PASS" if r["passed"] else "FAIL"
            lines.append(f"  {mark} oracle {r['name']} (value {r['value']:.3e})")
        return "\n".join(lines)


REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["p", "orders", "index_G_N", "norms", "multiplicity_chi1_phiN",
                 "invariance", "quasikernel_order", "candidates", "verdict", "schema_version"],
    "properties": {
        "p": {"type": "integer", "minimum": 3},
        "orders": {
            "type": "object",
            "required": ["G", "ZG", "N", "AB"],
            "properties": {k: {"type": ["integer", "null"]} for k in ("G", "ZG", "N", "AB")},
        },
        "index_G_N": {"type": ["integer", "null"]},
        "norms": {
            "type": "object",
            "required": ["phi_G", "phi_N", "chi1_N"],
            "properties": {k: {"type": ["integer", "null"]} for k in ("phi_G", "phi_N", "chi1_N")},
        },
        "multiplicity_chi1_phiN": {"type": ["integer", "null"]},
        "invariance": {
            "type": "object",
            "required": ["V1", "V2"],
            "properties": {"V1": {"type": ["boolean", "null"]}, "V2": {"type": ["boolean", "null"]}},
        },
        "quasikernel_order": {"type": ["integer", "null"]},
        "candidates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["order", "N_over_H", "chi1_sq", "deg_rho", "stabilizer_match"],
                "properties": {
                    "order": {"type": "integer"},
                    "N_over_H": {"type": ["integer", "string"]},
                    "chi1_sq": {"type": ["integer", "string"]},
                    "deg_rho": {"type": "integer"},
                    "stabilizer_match": {"type": "boolean"},
                    "deg_rho_match": {"type": "boolean"},
                },
            },
        },
        "verdict": {"enum": [STABILIZER, NON_STABILIZER, "undetermined"]},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "title", "passed"],
                "properties": {"id": {"type": "string"}, "passed": {"type": "boolean"}},
            },
        },
        "schema_version": {"const": SCHEMA_VERSION},
    },
}


def validate_report(data: dict):
    import jsonschema

    jsonschema.validate(data, REPORT_SCHEMA)


def _safe(fn, default=None):
    try:
        return fn()
    except CapExceeded:
        raise
    except Exception:
        return default


def certify(p: int, cap: int = DEFAULT_CAP,
            code: Optional[CliffordCode] = None) -> CliffordCodeReport:
    validate_prime(p, cap)
    code = code or CliffordCode(p, cap)
    timing = {}
    checks = []
    start = time.perf_counter()
    for pid in PROPOSITIONS:
        t0 = time.perf_counter()
        checks.append(run_check(code, pid))
        timing[pid] = round(time.perf_counter() - t0, 4)
    timing["total"] = round(time.perf_counter() - start, 4)

    v1 = _safe(lambda: code.verdict_V1)
    v2 = _safe(lambda: code.verdict_V2)
    n = code.norm
    return CliffordCodeReport(
        p=p,
        orders={"G": _safe(lambda: code.G.order), "ZG": _safe(lambda: code.Z.order),
                "N": _safe(lambda: code.N.order), "AB": _safe(lambda: code.AB.order)},
        index_G_N=_safe(lambda: index(code.G, code.N)),
        norms={"phi_G": _safe(lambda: n(code.phi, code.phi, code.G)),
               "phi_N": _safe(lambda: n(code.phi_N, code.phi_N, code.N)),
               "chi1_N": _safe(lambda: n(code.chi1, code.chi1, code.N))},
        multiplicity_chi1_phiN=_safe(lambda: n(code.chi1, code.phi_N, code.N)),
        invariance={"V1": _safe(lambda: is_invariant(code.V1, code.N.gens).invariant),
                    "V2": _safe(lambda: is_invariant(code.V2, code.N.gens).invariant)},
        quasikernel_order=v1.quasikernel_order if v1 else None,
        candidates=v1.candidates if v1 else [],
        verdict=v1.verdict if v1 else "undetermined",
        verdict_V2=v2.verdict if v2 else "undetermined",
        criteria_agree=bool(v1 and v2 and v1.criteria_agree and v2.criteria_agree),
        checks=checks,
        timing=timing,
    )
