"""Finite-dimensional realizations in C^d with the sup and euclidean norms.

Ball functions are restricted to ``g(T_v(z))`` with ``g`` a scalar disk map,
so the homogeneous parts are ``P_j(z) = c_j T_v(z)**j`` with ``c_j`` the
Taylor coefficients of ``g``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import analytic as an
from .analytic import DEFAULT_ORDER, LacunaryFStar, Monomial, MobiusF, MobiusPhi
from . import lab

NORMS = ("sup", "l2")


@dataclass(frozen=True)
class NormedSpace:
    dimension: int
    norm: str = "sup"

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError("dimension must be >= 1")
        if self.norm not in NORMS:
            raise ValueError(f"norm must be one of {NORMS}")

    def __call__(self, z) -> float:
        z = np.asarray(z, dtype=complex)
        if self.norm == "sup":
            return float(np.max(np.abs(z)))
        return float(np.linalg.norm(z))

    def dual_norm(self, w) -> float:
        """Operator norm of ``z -> w . z``."""
        w = np.asarray(w, dtype=complex)
        return float(np.sum(np.abs(w))) if self.norm == "sup" else float(np.linalg.norm(w))


@dataclass(frozen=True)
class SupportFunctional:
    space: NormedSpace
    v: tuple
    weights: tuple  # T_v(z) = sum_i weights[i] * z[i]

    def __call__(self, z) -> complex:
        return complex(np.dot(np.asarray(self.weights), np.asarray(z, dtype=complex)))

    @property
    def norm(self) -> float:
        return self.space.dual_norm(self.weights)


def support_functional(space: NormedSpace, v) -> SupportFunctional:
    v = np.asarray(v, dtype=complex)
    if v.shape != (space.dimension,):
        raise ValueError("vector has the wrong dimension")
    if abs(space(v) - 1.0) > 1e-12:
        raise ValueError("base point must have unit norm")
    w = np.zeros_like(v)
    if space.norm == "sup":
        i = int(np.argmax(np.abs(v)))  # first index on ties
        w[i] = v[i].conjugate() / abs(v[i])
    else:
        w = v.conjugate()
    return SupportFunctional(space, tuple(complex(x) for x in v), tuple(complex(x) for x in w))


def default_direction(space: NormedSpace) -> np.ndarray:
    """A fixed unit vector with a non-trivial phase, used for ray checks."""
    if space.norm == "sup":
        v = np.array([0.5, cmath.exp(1j * math.pi / 4), -0.2j, 0.3][: space.dimension])
        if space.dimension == 1:
            v = np.array([1.0 + 0j])
        return v
    v = np.array([1.0, 1j, 0.5 - 0.5j, 0.25][: space.dimension], dtype=complex)
    return v / np.linalg.norm(v)


@dataclass(frozen=True)
class VectorSchwarzMap:
    functional: SupportFunctional
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be >= 1")

    def __call__(self, z) -> np.ndarray:
        return eval_mu(self, z)


def eval_mu(mu: VectorSchwarzMap, z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    if mu.functional.space(z) >= 1.0:
        raise ValueError("z must lie in the open unit ball")
    return mu.functional(z) ** (mu.order - 1) * z


BALL_KINDS = ("eta", "xi", "eta_star")


@dataclass(frozen=True)
class BallFunction:
    """``g(T_v(z))`` for ``g`` one of the extremal disk maps."""

    kind: str
    a: float
    functional: SupportFunctional
    q: int = 1

    def __post_init__(self):
        if self.kind not in BALL_KINDS:
            raise ValueError(f"kind must be one of {BALL_KINDS}")

    @property
    def scalar(self) -> an.DiskFunction:
        if self.kind == "eta":
            return MobiusPhi(self.a)
        if self.kind == "xi":
            return MobiusF(self.a)
        return LacunaryFStar(self.a, self.q)

    def __call__(self, z) -> complex:
        return self.scalar(self.functional(z))

    def homogeneous_parts(self, z, n_max: int = DEFAULT_ORDER) -> np.ndarray:
        """``P_0(z), ..., P_N(z)``."""
        c = an.taylor_coefficients(self.scalar, n_max).coefficients
        t = self.functional(z)
        return c * t ** np.arange(c.size)


def multidim_lhs(which: str, f: BallFunction, mu_k: VectorSchwarzMap, mu_m: VectorSchwarzMap,
                 params: lab.TheoremParams, z, n_max: int = DEFAULT_ORDER) -> float:
    """One of the G, H, I, J, K left-hand sides at the point ``z``.

    The refinement factor uses ``r = ||z||`` as in the theorem statements; the
    same Wiener tail bounds as the scalar functionals are added.
    """
    space = f.functional.space
    r = space(z)
    if r >= 1:
        raise ValueError("z must lie in the open unit ball")
    P = params
    wk = mu_k(z)
    parts = np.abs(f.homogeneous_parts(wk, n_max))
    ser = an.taylor_coefficients(f.scalar, n_max)
    rho = abs(f.functional(wk))
    tail1 = ser.tail_bound(rho)
    tail2 = ser.quadratic_tail_bound(rho)
    a = parts[0]
    f0 = f(np.zeros(space.dimension))
    rk = r**P.k

    if which == "J":
        q = P.q
        lat = parts[q::q]
        rqk = r ** (q * P.k)
        return (a**P.p + lat.sum() + tail1
                + (1 / (1 + a) + rqk / (1 - rqk)) * ((lat * lat).sum() + tail2))

    s1 = parts[1:].sum() + tail1
    s2 = (parts[1:] ** 2).sum() + tail2
    refine = (1 / (1 + a) + rk / (1 - rk)) * s2
    fm = f(mu_m(z))
    if which == "G":
        return a**P.p + s1 + refine + abs(fm - f0)
    if which == "H":
        lac = parts[P.s + P.t::P.s].sum() + tail1
        return abs(fm) ** P.p + P.lam * lac
    if which == "I":
        return abs(fm) ** P.p + P.lam * (s1 + refine)
    if which == "K":
        return a + s1 + refine + abs(fm - f0) ** 2
    raise ValueError("which must be one of G, H, I, J, K")


# which -> (ball function kind, scalar theorem)
REDUCTIONS = {
    "G": ("eta", lab.TheoremId.T1),
    "H": ("xi", lab.TheoremId.T2),
    "I": ("xi", lab.TheoremId.T3),
    "J": ("eta_star", lab.TheoremId.T5),
    "K": ("eta", lab.TheoremId.T6),
}


@dataclass
class ReductionReport:
    which: str
    dimension: int
    norm: str
    max_difference: float
    passed: bool
    points: int
    mismatch: dict | None = None

    def summary(self) -> dict:
        return dict(self.__dict__)


def reduction_check(which: str, params: lab.TheoremParams, d: int, norm: str,
                    a_grid=(0.0, 0.25, 0.5, 0.75, 0.9), r_grid=(0.1, 0.2, 0.3, 0.4, 0.5),
                    v=None, tol: float = 1e-10) -> ReductionReport:
    """Compare the ball LHS on the ray ``z = r v`` with the scalar LHS at ``z = r``."""
    if which not in REDUCTIONS:
        raise ValueError("which must be one of G, H, I, J, K")
    space = NormedSpace(d, norm)
    T = support_functional(space, default_direction(space) if v is None else v)
    v = np.asarray(T.v)
    kind, theorem = REDUCTIONS[which]
    mu_k = VectorSchwarzMap(T, params.k)
    mu_m = VectorSchwarzMap(T, params.m)
    worst, mismatch, count = 0.0, None, 0
    for a in a_grid:
        f = BallFunction(kind, a, T, params.q)
        g = lab.extremal_function(theorem, a, params)
        for r in r_grid:
            multi = multidim_lhs(which, f, mu_k, mu_m, params, r * v)
            scalar = lab.theorem_lhs(theorem, g, Monomial(params.k), Monomial(params.m),
                                     params, complex(r))
            diff = abs(multi - scalar)
            count += 1
            if diff > worst:
                worst = diff
            if diff > tol and mismatch is None:
                mismatch = {"a": a, "r": r, "multidim": multi, "scalar": scalar}
    return ReductionReport(which, d, norm, worst, mismatch is None, count, mismatch)


def lemma3_check(params: lab.TheoremParams, d: int, norm: str, seed: int = 0,
                 samples: int = 200, tol: float = 1e-10) -> float:
    """Largest excess of the Lemma-3 sum over ``(1-a^2) r^k/(1-r^k)`` at random points.

    Uses random unit directions, so ``mu_k`` is evaluated off the ray as well.
    """
    rng = np.random.default_rng(seed)
    space = NormedSpace(d, norm)
    T = support_functional(space, default_direction(space))
    mu_k = VectorSchwarzMap(T, params.k)
    worst = -math.inf
    for _ in range(samples):
        a = float(rng.uniform(0, 0.95))
        f = BallFunction(("eta", "xi")[int(rng.integers(2))], a, T)
        z = rng.normal(size=d) + 1j * rng.normal(size=d)
        z *= rng.uniform(0.01, 0.9) / space(z)
        r = space(z)
        parts = np.abs(f.homogeneous_parts(mu_k(z)))
        rk = r**params.k
        lhs = parts[1:].sum() + (1 / (1 + a) + rk / (1 - rk)) * (parts[1:] ** 2).sum()
        worst = max(worst, lhs - (1 - a * a) * rk / (1 - rk))
    return worst
