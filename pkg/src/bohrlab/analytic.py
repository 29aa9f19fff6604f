"""Self-maps of the unit disk, Schwarz functions and the coefficient functionals.

Every function here is a member of the closed unit ball of H-infinity, so the
Wiener bound ``|a_n| <= 1 - |a_0|**2`` gives a rigorous geometric tail for any
truncated coefficient series.  The functionals therefore return *upper*
estimates: partial sum plus tail bound.
"""

from __future__ import annotations

import cmath
import functools
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import lfilter

DEFAULT_ORDER = 256
MAX_RANDOM_ZERO = 0.95


def _check_disk(z: complex, what: str = "z") -> None:
    if abs(z) >= 1.0:
        raise ValueError(f"{what} must lie in the open unit disk, got |{what}| = {abs(z)!r}")


def _check_radius(r: float) -> None:
    if not 0.0 <= r < 1.0:
        raise ValueError(f"radius must satisfy 0 <= r < 1, got {r!r}")


@dataclass(frozen=True)
class CoefficientSeries:
    """Taylor coefficients ``a_0..a_N`` plus a Wiener tail bound.

    ``tail_scale`` is the constant ``C`` in ``sum_{n>N} |a_n| r^n <= C r^(N+1)/(1-r)``;
    it is ``1 - |a_0|**2`` for members of the unit ball and ``0`` when the
    function is a polynomial of degree ``<= N``.
    """

    coefficients: np.ndarray
    tail_scale: float

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def a0(self) -> complex:
        return complex(self.coefficients[0])

    def moduli(self) -> np.ndarray:
        return np.abs(self.coefficients)

    def tail_bound(self, r: float) -> float:
        _check_radius(r)
        if self.tail_scale == 0.0 or r == 0.0:
            return 0.0
        return self.tail_scale * r ** (self.truncation_order + 1) / (1.0 - r)

    def quadratic_tail_bound(self, r: float) -> float:
        # sum_{n>N} |a_n|^2 r^2n  <=  C * (C r'^(N+1)/(1-r')),  r' = r^2
        _check_radius(r)
        return self.tail_scale * self.tail_bound(r * r)


# -- disk functions ---------------------------------------------------------


class DiskFunction:
    """Base class for evaluatable members of the unit ball of H-infinity."""

    def __call__(self, z: complex) -> complex:
        _check_disk(z)
        return self._eval(complex(z))

    def _eval(self, z: complex) -> complex:
        raise NotImplementedError

    def _coefficients(self, n_max: int) -> np.ndarray:
        raise NotImplementedError

    #: degree if the function is a polynomial, else None
    polynomial_degree: int | None = None


@dataclass(frozen=True)
class Constant(DiskFunction):
    value: complex = 0.0

    def __post_init__(self):
        if abs(self.value) > 1.0:
            raise ValueError("constant must have modulus <= 1")

    polynomial_degree = 0

    def _eval(self, z):
        return complex(self.value)

    def _coefficients(self, n_max):
        c = np.zeros(n_max + 1, dtype=complex)
        c[0] = self.value
        return c


@dataclass(frozen=True)
class BlaschkeProduct(DiskFunction):
    """``rotation * z**order * prod_j (z - z_j) / (1 - conj(z_j) z)``."""

    zeros: tuple[complex, ...] = ()
    rotation: complex = 1.0
    order: int = 0

    def __post_init__(self):
        object.__setattr__(self, "zeros", tuple(complex(w) for w in self.zeros))
        for w in self.zeros:
            _check_disk(w, "Blaschke zero")
        if abs(abs(self.rotation) - 1.0) > 1e-12:
            raise ValueError("rotation must be unimodular")
        if self.order < 0:
            raise ValueError("vanishing order must be >= 0")

    def _eval(self, z):
        val = complex(self.rotation) * z**self.order
        for w in self.zeros:
            val *= (z - w) / (1.0 - w.conjugate() * z)
        return val

    def _coefficients(self, n_max):
        num = np.array([1.0 + 0j])
        den = np.array([1.0 + 0j])
        for w in self.zeros:
            # ascending-power coefficient arrays
            num = np.convolve(num, [-w, 1.0])
            den = np.convolve(den, [1.0, -w.conjugate()])
        impulse = np.zeros(n_max + 1, dtype=complex)
        impulse[0] = 1.0
        quotient = lfilter(num, den, impulse)
        c = np.zeros(n_max + 1, dtype=complex)
        if self.order <= n_max:
            c[self.order:] = complex(self.rotation) * quotient[: n_max + 1 - self.order]
        return c

    @property
    def polynomial_degree(self):
        return None if self.zeros else self.order


@dataclass(frozen=True)
class MobiusPhi(DiskFunction):
    """The automorphism ``(a - z)/(1 - a z)``."""

    a: float

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise ValueError("a must lie in [0, 1)")

    def _eval(self, z):
        return (self.a - z) / (1.0 - self.a * z)

    def _coefficients(self, n_max):
        a = self.a
        c = np.empty(n_max + 1, dtype=complex)
        c[0] = a
        c[1:] = -(1.0 - a * a) * a ** np.arange(n_max)
        return c


@dataclass(frozen=True)
class MobiusF(DiskFunction):
    """The automorphism ``(z + a)/(1 + a z)``."""

    a: float

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise ValueError("a must lie in [0, 1)")

    def _eval(self, z):
        return (z + self.a) / (1.0 + self.a * z)

    def _coefficients(self, n_max):
        a = self.a
        c = np.empty(n_max + 1, dtype=complex)
        c[0] = a
        c[1:] = (1.0 - a * a) * (-a) ** np.arange(n_max)
        return c


@dataclass(frozen=True)
class Lacunary(DiskFunction):
    """``base(z**q)``: a series supported on the multiples of ``q``."""

    base: DiskFunction
    q: int

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("gap q must be >= 1")

    def _eval(self, z):
        return self.base._eval(z**self.q)

    def _coefficients(self, n_max):
        inner = self.base._coefficients(n_max // self.q)
        c = np.zeros(n_max + 1, dtype=complex)
        c[:: self.q] = inner
        return c

    @property
    def polynomial_degree(self):
        d = self.base.polynomial_degree
        return None if d is None else d * self.q


@dataclass(frozen=True)
class LacunaryFStar(DiskFunction):
    """``(a - z**q)/(1 - a z**q)``, extremal for lacunary series."""

    a: float
    q: int = 1

    def __post_init__(self):
        if not 0.0 <= self.a < 1.0:
            raise ValueError("a must lie in [0, 1)")
        if self.q < 1:
            raise ValueError("gap q must be >= 1")

    def _eval(self, z):
        w = z**self.q
        return (self.a - w) / (1.0 - self.a * w)

    def _coefficients(self, n_max):
        a = self.a
        c = np.zeros(n_max + 1, dtype=complex)
        c[0] = a
        idx = np.arange(self.q, n_max + 1, self.q)
        c[idx] = -(1.0 - a * a) * a ** (idx // self.q - 1)
        return c


# -- Schwarz functions ------------------------------------------------------


class SchwarzFunction(DiskFunction):
    order: int


@dataclass(frozen=True)
class Monomial(SchwarzFunction):
    order: int = 1

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("Schwarz order must be >= 1")

    @property
    def polynomial_degree(self):
        return self.order

    def _eval(self, z):
        return z**self.order

    def _coefficients(self, n_max):
        c = np.zeros(n_max + 1, dtype=complex)
        if self.order <= n_max:
            c[self.order] = 1.0
        return c


@dataclass(frozen=True)
class BlaschkeTimesMonomial(BlaschkeProduct, SchwarzFunction):
    """``z**order`` times a finite Blaschke product without a zero at 0."""

    order: int = 1

    def __post_init__(self):
        super().__post_init__()
        if self.order < 1:
            raise ValueError("Schwarz order must be >= 1")
        if any(w == 0 for w in self.zeros):
            raise ValueError("zero at the origin would raise the vanishing order")


# -- operations -------------------------------------------------------------


@functools.lru_cache(maxsize=512)
def _cached_series(f: DiskFunction, n_max: int) -> CoefficientSeries:
    coeffs = np.asarray(f._coefficients(n_max), dtype=complex)
    coeffs.setflags(write=False)
    deg = f.polynomial_degree
    if deg is not None and deg <= n_max:
        scale = 0.0
    else:
        scale = max(0.0, 1.0 - abs(coeffs[0]) ** 2)
    return CoefficientSeries(coeffs, scale)


def taylor_coefficients(f: DiskFunction, n_max: int = DEFAULT_ORDER) -> CoefficientSeries:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    return _cached_series(f, n_max)


def majorant_sum(series: CoefficientSeries, N: int, r: float) -> float:
    """Upper estimate of ``sum_{n>=N} |a_n| r^n``."""
    _check_radius(r)
    if N < 0:
        raise ValueError("N must be >= 0")
    mod = series.moduli()[N:]
    if mod.size == 0:
        return series.tail_bound(r)
    powers = float(r) ** np.arange(N, N + mod.size)
    return float(mod @ powers) + series.tail_bound(r)


def lacunary_majorant(series: CoefficientSeries, s: int, t: int, r: float) -> float:
    """Upper estimate of ``sum_{j>=1} |a_{sj+t}| r^(sj+t)``."""
    _check_radius(r)
    idx = np.arange(s + t, series.truncation_order + 1, s)
    partial = float(series.moduli()[idx] @ (float(r) ** idx)) if idx.size else 0.0
    return partial + series.tail_bound(r)


def quadratic_norm(series: CoefficientSeries, r: float) -> float:
    """Upper estimate of ``sum_{n>=1} |a_n|^2 r^(2n)``."""
    _check_radius(r)
    mod = series.moduli()[1:]
    powers = float(r * r) ** np.arange(1, mod.size + 1)
    return float((mod * mod) @ powers) + series.quadratic_tail_bound(r)


def refined_term(series: CoefficientSeries, r: float) -> float:
    _check_radius(r)
    return (1.0 / (1.0 + abs(series.a0)) + r / (1.0 - r)) * quadratic_norm(series, r)


def evaluate(f: DiskFunction, z: complex) -> complex:
    return f(z)


def evaluate_schwarz(omega: SchwarzFunction, z: complex) -> complex:
    return omega(z)


def random_member(seed: int, degree: int, vanishing_order: int = 0) -> BlaschkeProduct:
    """Deterministic random finite Blaschke product times ``z**vanishing_order``.

    Zeros are uniform in the disk of radius 0.95 (never exactly 0); the result
    is a :class:`BlaschkeTimesMonomial` when ``vanishing_order >= 1``.
    """
    if degree < 0 or vanishing_order < 0:
        raise ValueError("degree and vanishing_order must be >= 0")
    rng = np.random.default_rng(seed)
    radii = MAX_RANDOM_ZERO * np.sqrt(1.0 - rng.random(degree))
    angles = 2 * np.pi * rng.random(degree)
    zeros = tuple(complex(z) for z in radii * np.exp(1j * angles))
    rotation = cmath.exp(2j * np.pi * rng.random())
    if vanishing_order >= 1:
        return BlaschkeTimesMonomial(zeros=zeros, rotation=rotation, order=vanishing_order)
    return BlaschkeProduct(zeros=zeros, rotation=rotation, order=0)
