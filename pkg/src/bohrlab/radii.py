"""Radius-defining equations and a scan-and-bisect minimal root finder.

Each ``psi*`` / equation function accepts a float or a numpy array for ``r``
so the left-to-right scan can be evaluated in one vectorized pass.
"""

from __future__ import annotations

import enum
import math
from dataclasses import asdict, dataclass

import numpy as np

SCAN_STEP = 1e-4
BISECT_TOL = 1e-13
SCAN_END = 1.0 - 1e-9
RESIDUAL_LIMIT = 1e-10


class NoRootFound(RuntimeError):
    """No sign change of the defining function in (0, 1 - 1e-9)."""


def _radius(r):
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0) or np.any(arr >= 1):
        raise ValueError("r must satisfy 0 <= r < 1")
    return arr if arr.ndim else float(arr)


def psi1(r, k, m, p):
    r = _radius(r)
    rk, rm = r**k, r**m
    return rk / (1 - rk) + rm / (1 - rm) - p / 2


def psi2(r, lam, s, t, p, m, k):
    r = _radius(r)
    rm = r**m
    return 2 * lam * r ** (k * (s + t)) / (1 - r ** (k * s)) - p * (1 - rm) / (1 + rm)


def psi3(r, lam, p, k, m):
    r = _radius(r)
    rk, rm = r**k, r**m
    return p * (1 - rm) / (1 + rm) - 2 * lam * rk / (1 - rk)


def psi4(r, lam, p, a, k, m):
    r = _radius(r)
    rk, rm = r**k, r**m
    return (1 + a * rm) ** p * (1 + (lam * a * a - lam - 1) * rk) - (1 - rk) * (a + rm) ** p


def psi5(r, a, p, q, k):
    r = _radius(r)
    ap = a**p
    return (2 - a * a - ap) * r ** (q * k) + ap - 1


def psi6(r, k, m):
    """Lemma polynomial ``11r^(2m+k) - 6r^(2m) - 8r^(k+m) + 2r^m + r^k``."""
    r = np.asarray(r, dtype=float)
    return 11 * r ** (2 * m + k) - 6 * r ** (2 * m) - 8 * r ** (k + m) + 2 * r**m + r**k


def zeta_m(r, m):
    return r**m * (3 - 5 * r) + 3 * r - 1


def eta_m(r, m):
    return r**m * (2 - 3 * r) + 2 * r - 1


def zeta_kmp(r, k, m, p):
    return 2 * r**k * (1 + r**m) - p * (1 - r**m) * (1 - r**k)


def eta_kmp(r, k, m, p):
    return 1 - 2 * r**k - r ** (m * p) * (1 - r**k)


class Theorem(str, enum.Enum):
    R1 = "R1"
    R2 = "R2"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"
    ZetaM = "ZetaM"
    EtaM = "EtaM"
    AlphaKMP = "AlphaKMP"
    BetaKMP = "BetaKMP"


@dataclass(frozen=True)
class RadiusQuery:
    theorem: Theorem
    k: int = 1
    m: int = 1
    p: float = 1.0
    q: int = 1
    s: int = 1
    t: int = 0
    lam: float = 1.0
    a: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theorem", Theorem(self.theorem))
        th = self.theorem
        if self.k < 1 or self.m < 1 or self.q < 1:
            raise ValueError("k, m and q must be positive integers")
        if self.s < 1 or not 0 <= self.t < self.s:
            raise ValueError("need s >= 1 and 0 <= t < s")
        if self.lam <= 0:
            raise ValueError("lambda must be positive")
        if not 0.0 <= self.a < 1.0:
            raise ValueError("a must lie in [0, 1)")
        if th in (Theorem.R1, Theorem.R2, Theorem.R3) and not 0 < self.p <= 2:
            raise ValueError(f"{th.value} requires p in (0, 2]")
        if self.p <= 0:
            raise ValueError("p must be positive")

    def defining_function(self):
        """The scalar/vector function whose minimal positive root is sought."""
        th, k, m, p = self.theorem, self.k, self.m, self.p
        if th is Theorem.R1:
            return lambda r: psi1(r, k, m, p)
        if th is Theorem.R2:
            return lambda r: psi2(r, self.lam, self.s, self.t, p, m, k)
        if th is Theorem.R3:
            return lambda r: psi3(r, self.lam, p, k, m)
        if th is Theorem.R4:
            return lambda r: psi4(r, self.lam, p, self.a, k, m)
        if th is Theorem.R5:
            return lambda r: psi5(r, self.a, p, self.q, k)
        if th is Theorem.ZetaM:
            return lambda r: zeta_m(r, m)
        if th is Theorem.EtaM:
            return lambda r: eta_m(r, m)
        if th is Theorem.AlphaKMP:
            return lambda r: zeta_kmp(r, k, m, p)
        return lambda r: eta_kmp(r, k, m, p)

    def as_dict(self) -> dict:
        d = asdict(self)
        d["theorem"] = self.theorem.value
        return d


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float
    scan_step: float


def find_min_root(func, tol: float = BISECT_TOL, step: float = SCAN_STEP,
                  stop: float = SCAN_END) -> RadiusResult:
    """Minimal root of ``func`` in (0, stop) by a left-to-right scan then bisection."""
    grid = np.append(np.arange(0.0, stop, step), stop)
    vals = np.asarray(func(grid), dtype=float)
    if vals[0] == 0:
        raise NoRootFound("defining function vanishes at r = 0")
    sign = np.sign(vals)
    hits = np.nonzero(sign[1:] != sign[:-1])[0]
    if hits.size == 0:
        raise NoRootFound("no sign change in (0, 1 - 1e-9)")
    i = int(hits[0])
    lo, hi = float(grid[i]), float(grid[i + 1])
    if vals[i + 1] == 0:
        return RadiusResult(hi, hi, hi, 0.0, step)
    f_lo = float(func(lo))
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = float(func(mid))
        if f_mid == 0:
            lo = hi = mid
            break
        if (f_mid < 0) == (f_lo < 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    value = 0.5 * (lo + hi)
    return RadiusResult(value, lo, hi, float(func(value)), step)


def solve(query: RadiusQuery, tol: float = BISECT_TOL) -> RadiusResult:
    if tol < 1e-14:
        raise ValueError("tol must be >= 1e-14")
    return find_min_root(query.defining_function(), tol=tol)


def radius_R5(k: int, p: float, q: int = 1) -> float:
    """Uniform lacunary radius ``(min(p,2)/(2+min(p,2)))**(1/(q k))``."""
    if k < 1 or q < 1 or p <= 0:
        raise ValueError("need k, q >= 1 and p > 0")
    c = min(p, 2.0)
    return (c / (2.0 + c)) ** (1.0 / (q * k))


def _ratio(delta, p):
    # (1 - a^p)/(2 - a^2 - a^p) at a = 1 - delta, cancellation-free
    with np.errstate(divide="ignore"):
        one_minus_ap = -np.expm1(p * np.log1p(-delta))
    one_minus_a2 = delta * (2.0 - delta)
    return one_minus_ap / (one_minus_a2 + one_minus_ap)


def infimum_oracle(p: float, grid_size: int = 100_000) -> float:
    """Grid minimum of ``(1-a^p)/(2-a^2-a^p)`` over ``a in [0, 1)``.

    The endpoint a -> 1 is handled by Richardson extrapolation of the two
    points closest to 1, since the infimum may only be approached there.
    """
    if p <= 0 or grid_size < 1000:
        raise ValueError("need p > 0 and grid_size >= 1000")
    delta = np.linspace(1.0, 1e-6, grid_size)
    vals = _ratio(delta, p)
    d1, d2 = 1e-6, 2e-6
    limit = 2 * _ratio(d1, p) - _ratio(d2, p)
    return float(min(vals.min(), limit))


A_STAR = 4 * math.sqrt(2) - 5
LOG3_BOUND = math.log(2 * math.sqrt(2) + 1, 3)


def theorem6_radius(k: int) -> float:
    return 3.0 ** (-1.0 / k)
