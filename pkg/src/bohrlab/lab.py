"""Left-hand sides of the refined Bohr inequalities and their verification.

The ``lhs_*`` functions evaluate on an arbitrary disk function through its
truncated coefficient series (tail bounds included, so every value is an
upper estimate).  ``closed_form`` gives the exact value on the extremal
Mobius families at a real point ``z = r`` and is what the sharpness probe
uses, because a -> 1 makes the series converge too slowly to truncate.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from . import analytic as an
from .analytic import (
    DEFAULT_ORDER,
    DiskFunction,
    Lacunary,
    LacunaryFStar,
    Monomial,
    MobiusF,
    MobiusPhi,
    SchwarzFunction,
)
from .radii import (
    A_STAR,
    LOG3_BOUND,
    RadiusQuery,
    Theorem,
    psi6,
    radius_R5,
    solve,
    theorem6_radius,
)

PASS_TOL = 1e-9
DEFAULT_FRACTIONS = tuple(np.linspace(0.125, 1.0, 8))
DEFAULT_ANGLES = 32
SHARPNESS_A = (1 - 1e-2, 1 - 1e-3, 1 - 1e-4)


class TheoremId(str, enum.Enum):
    T1 = "T1"  # A_f
    T2 = "T2"  # B_f
    T3 = "T3"  # C_f, p in (0, 2]
    T4 = "T4"  # C_f, p > 0, radius depends on |f(0)|
    T5 = "T5"  # D_f, lacunary
    T6 = "T6"  # E_f
    A1 = "A1"  # prior result, first inequality
    A2 = "A2"  # prior result, second inequality


@dataclass(frozen=True)
class TheoremParams:
    k: int = 1
    m: int = 1
    p: float = 1.0
    lam: float = 1.0
    s: int = 1
    t: int = 0
    q: int = 1

    def __post_init__(self):
        if self.k < 1 or self.m < 1 or self.q < 1:
            raise ValueError("k, m, q must be positive integers")
        if self.s < 1 or not 0 <= self.t < self.s:
            raise ValueError("need s >= 1 and 0 <= t < s")
        if self.p <= 0 or self.lam <= 0:
            raise ValueError("p and lambda must be positive")


def _rho(omega: SchwarzFunction, z: complex) -> float:
    return abs(an.evaluate_schwarz(omega, z))


def _a(series) -> float:
    return abs(series.a0)


# -- left-hand sides --------------------------------------------------------


def lhs_A(f: DiskFunction, omega_k, omega_m, p: float, z: complex,
          n_max: int = DEFAULT_ORDER) -> float:
    if not 0 < p <= 2:
        raise ValueError("p must lie in (0, 2]")
    ser = an.taylor_coefficients(f, n_max)
    rho = _rho(omega_k, z)
    w = an.evaluate_schwarz(omega_m, z)
    return (_a(ser) ** p + an.majorant_sum(ser, 1, rho) + an.refined_term(ser, rho)
            + abs(an.evaluate(f, w) - ser.a0))


def lhs_B(f: DiskFunction, omega_k, omega_m, p: float, lam: float, s: int, t: int,
          z: complex, n_max: int = DEFAULT_ORDER) -> float:
    if s < 1 or not 0 <= t < s:
        raise ValueError("need s >= 1 and 0 <= t < s")
    ser = an.taylor_coefficients(f, n_max)
    rho = _rho(omega_k, z)
    fw = an.evaluate(f, an.evaluate_schwarz(omega_m, z))
    return abs(fw) ** p + lam * an.lacunary_majorant(ser, s, t, rho)


def lhs_C(f: DiskFunction, omega_k, omega_m, p: float, lam: float, z: complex,
          n_max: int = DEFAULT_ORDER) -> float:
    if p <= 0:
        raise ValueError("p must be positive")
    ser = an.taylor_coefficients(f, n_max)
    rho = _rho(omega_k, z)
    fw = an.evaluate(f, an.evaluate_schwarz(omega_m, z))
    return abs(fw) ** p + lam * (an.majorant_sum(ser, 1, rho) + an.refined_term(ser, rho))


def lhs_D(f: DiskFunction, omega_k, p: float, q: int, z: complex,
          n_max: int = DEFAULT_ORDER) -> float:
    ser = an.taylor_coefficients(f, n_max)
    c = ser.coefficients
    off = np.ones(c.size, dtype=bool)
    off[::q] = False
    if np.any(np.abs(c[off]) > 1e-14):
        raise ValueError(f"function has coefficients off the multiples of q={q}")
    rho = _rho(omega_k, z)
    mods = np.abs(c[q::q])
    idx = np.arange(q, c.size, q)
    s1 = float(mods @ rho ** idx) + ser.tail_bound(rho)
    s2 = float((mods * mods) @ rho ** (2 * idx)) + ser.quadratic_tail_bound(rho)
    a = _a(ser)
    rq = rho**q
    return a**p + s1 + (1 / (1 + a) + rq / (1 - rq)) * s2


def lhs_E(f: DiskFunction, omega_k, omega_m, z: complex,
          n_max: int = DEFAULT_ORDER) -> float:
    ser = an.taylor_coefficients(f, n_max)
    rho = _rho(omega_k, z)
    w = an.evaluate_schwarz(omega_m, z)
    return (an.majorant_sum(ser, 0, rho) + an.refined_term(ser, rho)
            + abs(an.evaluate(f, w) - ser.a0) ** 2)


def theorem_lhs(theorem: TheoremId, f: DiskFunction, omega_k, omega_m,
                params: TheoremParams, z: complex, n_max: int = DEFAULT_ORDER) -> float:
    th = TheoremId(theorem)
    P = params
    if th is TheoremId.T1:
        return lhs_A(f, omega_k, omega_m, P.p, z, n_max)
    if th is TheoremId.A1:
        return lhs_A(f, omega_k, omega_m, 1.0, z, n_max)
    if th is TheoremId.A2:
        return lhs_A(f, omega_k, omega_m, 2.0, z, n_max)
    if th is TheoremId.T2:
        return lhs_B(f, omega_k, omega_m, P.p, P.lam, P.s, P.t, z, n_max)
    if th in (TheoremId.T3, TheoremId.T4):
        return lhs_C(f, omega_k, omega_m, P.p, P.lam, z, n_max)
    if th is TheoremId.T5:
        return lhs_D(f, omega_k, P.p, P.q, z, n_max)
    return lhs_E(f, omega_k, omega_m, z, n_max)


def default_schwarz(theorem: TheoremId, params: TheoremParams):
    """Monomial Schwarz functions; the prior results use ``omega_k(z) = z``."""
    th = TheoremId(theorem)
    k = 1 if th in (TheoremId.A1, TheoremId.A2) else params.k
    return Monomial(k), Monomial(params.m)


def theorem_radius(theorem: TheoremId, params: TheoremParams, a: float = 0.0,
                   tol: float = 1e-13) -> float:
    """Radius below which the theorem guarantees ``lhs <= 1``.

    Only Theorem 4's radius depends on ``a = |f(0)|``.
    """
    th = TheoremId(theorem)
    P = params
    if th is TheoremId.T1:
        q = RadiusQuery(Theorem.R1, k=P.k, m=P.m, p=P.p)
    elif th is TheoremId.T2:
        q = RadiusQuery(Theorem.R2, k=P.k, m=P.m, p=P.p, s=P.s, t=P.t, lam=P.lam)
    elif th is TheoremId.T3:
        q = RadiusQuery(Theorem.R3, k=P.k, m=P.m, p=P.p, lam=P.lam)
    elif th is TheoremId.T4:
        q = RadiusQuery(Theorem.R4, k=P.k, m=P.m, p=P.p, lam=P.lam, a=a)
    elif th is TheoremId.T5:
        return radius_R5(P.k, P.p, P.q)
    elif th is TheoremId.T6:
        return theorem6_radius(P.k)
    elif th is TheoremId.A1:
        q = RadiusQuery(Theorem.ZetaM, m=P.m)
    else:
        q = RadiusQuery(Theorem.EtaM, m=P.m)
    return solve(q, tol).value


def extremal_function(theorem: TheoremId, a: float, params: TheoremParams) -> DiskFunction:
    th = TheoremId(theorem)
    if th in (TheoremId.T2, TheoremId.T3, TheoremId.T4):
        return MobiusF(a)
    if th is TheoremId.T5:
        return LacunaryFStar(a, params.q)
    return MobiusPhi(a)


def closed_form(theorem: TheoremId, a: float, r: float, params: TheoremParams) -> float:
    """Exact LHS of the extremal function at ``z = r`` with monomial Schwarz maps."""
    th = TheoremId(theorem)
    P = params
    k = 1 if th in (TheoremId.A1, TheoremId.A2) else P.k
    p = {TheoremId.A1: 1.0, TheoremId.A2: 2.0}.get(th, P.p)
    rho, rm = r**k, r**P.m
    b = 1 - a * a
    if th in (TheoremId.T1, TheoremId.A1, TheoremId.A2):
        return a**p + b * rho / (1 - rho) + b * rm / (1 - a * rm)
    if th is TheoremId.T2:
        st = P.s + P.t
        return (((a + rm) / (1 + a * rm)) ** p
                + P.lam * b * a ** (st - 1) * rho**st / (1 - a**P.s * rho**P.s))
    if th in (TheoremId.T3, TheoremId.T4):
        return ((a + rm) / (1 + a * rm)) ** p + P.lam * b * rho / (1 - rho)
    if th is TheoremId.T5:
        rq = rho**P.q
        return a**p + b * rq / (1 - rq)
    return a + b * rho / (1 - rho) + b * b * rm * rm / (1 - a * rm) ** 2


# -- reports ----------------------------------------------------------------


@dataclass
class VerificationReport:
    theorem: str
    params: dict
    radius: float
    grid: list = field(default_factory=list)  # (member, r, theta, lhs)
    max_lhs: float = 0.0
    verdict: str = "pass"
    witness: dict | None = None
    note: str = ""

    @property
    def margin(self) -> float:
        return 1.0 - self.max_lhs

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def summary(self) -> dict:
        return {
            "theorem": self.theorem,
            "params": self.params,
            "radius": self.radius,
            "max_lhs": self.max_lhs,
            "margin": self.margin,
            "verdict": self.verdict,
            "witness": self.witness,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary(), sort_keys=True, indent=2)

    def to_markdown(self) -> str:
        lines = [
            f"# {self.theorem}",
            "",
            "| field | value |",
            "|---|---|",
            f"| params | `{json.dumps(self.params, sort_keys=True)}` |",
            f"| radius | {self.radius:.6f} |",
            f"| max_lhs | {self.max_lhs:.12f} |",
            f"| margin | {self.margin:.3e} |",
            f"| verdict | {self.verdict} |",
            f"| witness | {json.dumps(self.witness, sort_keys=True) if self.witness else '-'} |",
        ]
        if self.note:
            lines += ["", self.note]
        return "\n".join(lines) + "\n"


def verify(theorem: TheoremId, params: TheoremParams, family: Sequence[DiskFunction],
           r_fractions: Sequence[float] = DEFAULT_FRACTIONS,
           angle_count: int = DEFAULT_ANGLES, omega_k=None, omega_m=None,
           n_max: int = DEFAULT_ORDER) -> VerificationReport:
    """Evaluate the theorem's LHS at ``r = fraction * radius`` on a polar grid."""
    th = TheoremId(theorem)
    if any(not 0 < fr <= 1 for fr in r_fractions):
        raise ValueError("radius fractions must lie in (0, 1]")
    dk, dm = default_schwarz(th, params)
    omega_k = omega_k or dk
    omega_m = omega_m or dm
    thetas = 2 * np.pi * np.arange(angle_count) / angle_count
    base_radius = theorem_radius(th, params) if th is not TheoremId.T4 else None
    report = VerificationReport(th.value, asdict(params), base_radius or 1.0)
    best = -math.inf
    for idx, f in enumerate(family):
        R = base_radius
        if R is None:
            R = theorem_radius(th, params, a=abs(an.evaluate(f, 0)))
            report.radius = min(report.radius, R)
        for fr in r_fractions:
            r = fr * R
            for theta in thetas:
                z = r * complex(math.cos(theta), math.sin(theta))
                val = theorem_lhs(th, f, omega_k, omega_m, params, z, n_max)
                report.grid.append((idx, r, float(theta), val))
                if val > best:
                    best = val
                    if val > 1 + PASS_TOL:
                        report.witness = {"member": idx, "r": r, "theta": float(theta),
                                          "a": abs(an.evaluate(f, 0)), "lhs": val}
    report.max_lhs = best if family else 0.0
    report.verdict = "pass" if report.max_lhs <= 1 + PASS_TOL else "fail"
    return report


def sharpness_probe(theorem: TheoremId, params: TheoremParams,
                    eps_list: Sequence[float] = (0.01,),
                    a_list: Sequence[float] | None = None,
                    relative: bool = False) -> VerificationReport:
    """Search just beyond the radius for an extremal member with ``lhs > 1``.

    With ``relative`` the probe radius is ``R * (1 + eps)``, otherwise ``R + eps``.
    Theorem 4's radius is recomputed for every ``a`` because it depends on it.
    The default ``a`` grid approaches 1; for Theorem 5 with ``p > 2`` the
    extremal case is ``a = 0`` instead, so 0 is added there.
    """
    th = TheoremId(theorem)
    if a_list is None:
        a_list = SHARPNESS_A
        if th is TheoremId.T5 and params.p > 2:
            a_list = (0.0, *a_list)
    report = VerificationReport(th.value, asdict(params), theorem_radius(th, params, a=0.0))
    best = -math.inf
    for a in a_list:
        R = theorem_radius(th, params, a=a) if th is TheoremId.T4 else report.radius
        for eps in eps_list:
            r = R * (1 + eps) if relative else R + eps
            if r >= 1:
                continue
            val = closed_form(th, a, r, params)
            report.grid.append((a, r, 0.0, val))
            if val > best:
                best = val
                report.witness = {"r": r, "a": a, "lhs": val, "radius": R}
    report.max_lhs = best
    if best > 1:
        report.verdict = "pass"
    else:
        report.verdict = "fail"
        report.witness = None
        report.note = "NoWitness: no probe point exceeded 1"
    return report


# -- lemma oracles ----------------------------------------------------------


@dataclass
class LemmaResult:
    name: str
    passed: bool
    worst: float  # largest (lhs - bound); <= tolerance when passed
    violation: dict | None = None


@dataclass
class LemmaReport:
    results: list

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def first_failure(self) -> LemmaResult | None:
        return next((r for r in self.results if not r.passed), None)

    def summary(self) -> dict:
        return {"passed": self.passed, "results": [asdict(r) for r in self.results]}


def random_family(count: int, seed: int = 0, max_degree: int = 5) -> list:
    """``count`` random Blaschke products, degrees cycling through 1..max_degree.

    Degree 0 is skipped: it gives a unimodular constant, for which ``a = 1``.
    """
    return [an.random_member(seed + i, 1 + i % max_degree, 0) for i in range(count)]


def lemma1_bound(a: float, r: float) -> float:
    if a >= r:
        return r * (1 - a * a) / (1 - r * a)
    return r * math.sqrt((1 - a * a) / (1 - r * r))


def _track(name, checks, tol):
    worst, violation = -math.inf, None
    for excess, where in checks:
        if excess > worst:
            worst = excess
            if excess > tol:
                violation = {**where, "excess": excess}
    return LemmaResult(name, violation is None, worst, violation)


def check_lemma1(family, radii=np.linspace(0.05, 0.9, 18), tol=1e-10) -> LemmaResult:
    def gen():
        for i, f in enumerate(family):
            ser = an.taylor_coefficients(f)
            a = abs(ser.a0)
            for r in radii:
                yield an.majorant_sum(ser, 1, r) - lemma1_bound(a, r), {"member": i, "r": float(r)}
    return _track("lemma1", gen(), tol)


def check_lemma2(family, radii=np.linspace(0.05, 0.9, 18), tol=1e-10) -> LemmaResult:
    def gen():
        for i, f in enumerate(family):
            ser = an.taylor_coefficients(f)
            a = abs(ser.a0)
            for r in radii:
                lhs = an.majorant_sum(ser, 1, r) + an.refined_term(ser, r)
                yield lhs - (1 - a * a) * r / (1 - r), {"member": i, "r": float(r)}
    return _track("lemma2", gen(), tol)


LEMMA4_CASES = tuple(
    (p, m, k, lam)
    for p in (0.5, 1.0, 2.0)
    for m in (1, 2, 5)
    for k in (1, 3)
    for lam in (0.5, 1.0, 3.0)
)


def lemma4_D(a, r, p, m, k, lam):
    """``D_{p,m}(a)`` with ``phi_0 = 1`` and ``N(r) = lam r^k/(1-r^k)``."""
    rm, rk = r**m, r**k
    return ((a + rm) / (1 + a * rm)) ** p - 1 + (1 - a * a) * lam * rk / (1 - rk)


def check_lemma4(cases=LEMMA4_CASES, r_points=60, a_points=401, tol=1e-12) -> LemmaResult:
    a = np.linspace(0.0, 1.0, a_points)

    def gen():
        for p, m, k, lam in cases:
            R = solve(RadiusQuery(Theorem.R3, k=k, m=m, p=p, lam=lam)).value
            for r in np.linspace(0.0, R, r_points):
                d = lemma4_D(a, r, p, m, k, lam)
                j = int(np.argmax(d))
                yield float(d[j]), {"p": p, "m": m, "k": k, "lam": lam,
                                    "r": float(r), "a": float(a[j])}
    return _track("lemma4", gen(), tol)


def lemma5_pairs(m_max: int = 30):
    return [(k, m) for m in range(1, m_max + 1) for k in range(2, m + 1)
            if k <= m / LOG3_BOUND]


def check_lemma5(m_max: int = 30, points: int = 10_000, tol=1e-12) -> LemmaResult:
    def gen():
        for k, m in lemma5_pairs(m_max):
            r = np.linspace(0.0, theorem6_radius(k), points)
            v = psi6(r, k, m)
            j = int(np.argmin(v))
            yield -float(v[j]), {"k": k, "m": m, "r": float(r[j])}
    return _track("lemma5", gen(), tol)


def lemma_checks(seed: int = 0, family_size: int = 20) -> LemmaReport:
    family = random_family(family_size, seed) + [MobiusPhi(a) for a in (0.0, 0.3, 0.6, 0.9)]
    return LemmaReport([
        check_lemma1(family),
        check_lemma2(family),
        check_lemma4(),
        check_lemma5(),
    ])
