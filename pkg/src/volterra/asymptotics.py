"""Expansion coefficients and truncated small/large-argument expansions.

Coefficients are Taylor derivatives of two generating functions,

    1/Gamma(alpha + 1 + x)                     ->  D-coefficients
    (1-x)^(-alpha-1) ((-x)/log(1-x))^(beta+1)  ->  E-coefficients

computed numerically from the Cauchy integral formula discretized by the
trapezoidal rule on a circle |x| = rho (spectrally accurate for analytic
integrands; one set of function samples serves every derivative order via
a single FFT).  The E generating function is evaluated through the ratio
(-x)/log(1-x), which is analytic and equal to 1 at x = 0, so no separate
branch choices for (-x)^(beta+1) and log(1-x)^(beta+1) are needed.

The truncated expansions built from them:

  * mu_small   -- 0 < t < 1:   t^a * sum_n D_n (log 1/t)^(-b-1-n)
  * mu_large   -- t > 1:       e^t * sum_n E_n t^(b-n)/Gamma(b+1-n) plus,
                  for integer b only, the same logarithmic series as
                  mu_small continued to t > 1 (see note below)
  * mu_negint_expansion -- exact finite form for b = -n-1
  * ramanujan_expansion -- N(t) ~ (1/log t) sum_n D_n (log t)^(-n)
  * nk_expansion_conjecture -- empirical large-t form of N_k(t, alpha)

Note on the logarithmic series for t > 1: its powers (log 1/t)^(-b-1-n)
have a negative base.  They are real only when the exponent is an
integer, so the series is included in mu_large only for integer b and
omitted otherwise (where it is exponentially negligible against the e^t
term anyway).  This convention is applied consistently here and in
nk_expansion_conjecture.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import DomainError, NonFiniteIntegrand
from .scalars import principal_log, recip_gamma, recip_gamma_complex


class CoefficientKind(enum.Enum):
    D_ALPHA = "D_alpha"
    D_ALPHA_BETA = "D_alpha_beta"
    E_ALPHA_BETA = "E_alpha_beta"
    GENERIC_TAYLOR = "generic_taylor"


@dataclass(frozen=True)
class CoefficientSeries:
    """Computed coefficients plus the circle parameters that produced them."""

    values: tuple
    radius: float
    node_count: int
    kind: CoefficientKind

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("radius must be positive")
        if self.kind is CoefficientKind.E_ALPHA_BETA and self.radius >= 1:
            raise ValueError("E-coefficient circle must have radius < 1")
        if self.node_count < 4 * len(self.values):
            raise ValueError("node_count must be at least 4*(N+1)")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]


def taylor_coeffs_cauchy(func: Callable, n_max: int, rho: float = 0.5,
                         node_count: int | None = None,
                         kind: CoefficientKind = CoefficientKind.GENERIC_TAYLOR,
                         ) -> CoefficientSeries:
    """Raw derivatives F_n = d^n F/dx^n |_0 for n = 0..n_max.

    F must be analytic on |x| <= rho and accept a complex ndarray; the
    trapezoidal sums are evaluated in one FFT over node_count samples
    (x = 0 is never a sample point).  Derivatives, not Taylor
    coefficients, are returned: divide by n! when coefficients are
    wanted.  For an F with real Taylor series the imaginary residuals of
    the sums must stay below 1e-12 * max(1, |F_n|); a violation signals a
    branch or analyticity problem and raises.
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    K = node_count if node_count is not None else max(64, 8 * (n_max + 1))
    if K < 4 * (n_max + 1):
        raise ValueError("node_count must be at least 4*(N+1)")
    theta = 2.0 * np.pi * np.arange(K) / K
    x = rho * np.exp(1j * theta)
    vals = np.asarray(func(x), dtype=complex)
    if not np.all(np.isfinite(vals)):
        raise NonFiniteIntegrand(
            "generating function not finite on the sampling circle")
    sums = np.fft.fft(vals)[: n_max + 1] / K
    ns = np.arange(n_max + 1)
    factorials = np.array([math.factorial(n) for n in ns], dtype=float)
    derivs = factorials * sums / rho ** ns
    bad = np.abs(derivs.imag) > 1e-12 * np.maximum(1.0, np.abs(derivs))
    if bad.any():
        n_bad = int(ns[bad][0])
        raise NonFiniteIntegrand(
            f"imaginary residual too large at derivative order {n_bad}; "
            "the generating function is not real-analytic on this circle")
    return CoefficientSeries(tuple(float(v) for v in derivs.real),
                             rho, K, kind)


def _circle_params(n_max: int, base_rho: float = 0.5):
    # larger derivative orders need a larger circle to tame the rho^-n
    # round-off amplification
    rho = base_rho if n_max <= 12 else min(0.8, 1.5 * base_rho)
    return rho, max(64, 8 * (n_max + 1))


_cache_lock = threading.Lock()
_series_cache: dict = {}


def _cached(key, builder):
    with _cache_lock:
        hit = _series_cache.get(key)
    if hit is not None:
        return hit
    series = builder()
    with _cache_lock:
        _series_cache[key] = series
    return series


def coeff_D(alpha: float, n_max: int) -> CoefficientSeries:
    """D_n = (1/n!) d^n/dx^n [1/Gamma(alpha+1+x)] at x = 0, n = 0..n_max."""
    if alpha <= -1:
        raise DomainError("coeff_D requires alpha > -1")

    def build():
        rho, K = _circle_params(n_max)
        raw = taylor_coeffs_cauchy(
            lambda x: recip_gamma_complex(alpha + 1.0 + x), n_max, rho, K,
            kind=CoefficientKind.D_ALPHA)
        vals = tuple(v / math.factorial(n) for n, v in enumerate(raw.values))
        return CoefficientSeries(vals, raw.radius, raw.node_count,
                                 CoefficientKind.D_ALPHA)

    return _cached(("D", float(alpha), int(n_max)), build)


def coeff_D_ab(alpha: float, beta: float, n_max: int) -> CoefficientSeries:
    """Rising-factorial scaling (beta+1)_n * D_n of the D-coefficients."""
    if beta <= -1:
        raise DomainError("coeff_D_ab requires beta > -1")

    def build():
        base = coeff_D(alpha, n_max)
        vals = []
        rising = 1.0
        for n, d in enumerate(base.values):
            vals.append(rising * d)
            rising *= beta + 1.0 + n
        return CoefficientSeries(tuple(vals), base.radius, base.node_count,
                                 CoefficientKind.D_ALPHA_BETA)

    return _cached(("Dab", float(alpha), float(beta), int(n_max)), build)


def coeff_E(alpha: float, beta: float, n_max: int) -> CoefficientSeries:
    """E_n = ((-1)^n/n!) d^n/dx^n G(x) at 0 for the E generating function.

    G(x) = (1-x)^(-alpha-1) * ((-x)/log(1-x))^(beta+1); the ratio form is
    single-valued and equals 1 at the (removable) point x = 0.
    """
    if alpha <= -1 or beta <= -1:
        raise DomainError("coeff_E requires alpha > -1 and beta > -1")

    def build():
        rho, K = _circle_params(n_max)
        rho = min(rho, 0.8)  # G has a singularity at x = 1

        def gen(x):
            one_minus = 1.0 - x
            ratio = -x / np.log(one_minus)
            return (np.exp(-(alpha + 1.0) * np.log(one_minus))
                    * np.exp((beta + 1.0) * principal_log(ratio)))

        raw = taylor_coeffs_cauchy(gen, n_max, rho, K,
                                   kind=CoefficientKind.E_ALPHA_BETA)
        vals = tuple((-1.0) ** n * v / math.factorial(n)
                     for n, v in enumerate(raw.values))
        return CoefficientSeries(vals, raw.radius, raw.node_count,
                                 CoefficientKind.E_ALPHA_BETA)

    return _cached(("E", float(alpha), float(beta), int(n_max)), build)


def _is_nonneg_integer(beta: float, tol: float = 1e-12) -> bool:
    return abs(beta - round(beta)) <= tol and round(beta) >= 0


def mu_small(t: float, beta: float, alpha: float, n_max: int) -> float:
    """Truncated logarithmic expansion of mu(t, beta, alpha) for 0 < t < 1."""
    if not 0.0 < t < 1.0:
        raise DomainError("mu_small requires 0 < t < 1")
    if alpha <= -1 or beta <= -1:
        raise DomainError("mu_small requires alpha > -1 and beta > -1")
    ell = math.log(1.0 / t)
    d = coeff_D_ab(alpha, beta, n_max)
    acc = 0.0
    for n in range(n_max, -1, -1):
        acc += d[n] * ell ** (-beta - 1.0 - n)
    return t ** alpha * acc


def _log_series_continued(t: float, beta_int: int, alpha: float,
                          n_max: int) -> float:
    """The mu_small series continued to t > 1 for integer beta.

    log(1/t) is negative there; the integer exponents -(beta+1+n) keep
    every power real.
    """
    ell = math.log(t)
    d = coeff_D_ab(alpha, float(beta_int), n_max)
    acc = 0.0
    for n in range(n_max, -1, -1):
        sign = -1.0 if (beta_int + 1 + n) % 2 else 1.0
        acc += d[n] * sign * ell ** (-(beta_int + 1.0 + n))
    return t ** alpha * acc


def mu_large(t: float, beta: float, alpha: float, n_max: int) -> float:
    """Truncated large-argument expansion of mu(t, beta, alpha), t > 1.

    The exponential part e^t sum_n E_n t^(beta-n)/Gamma(beta+1-n) always
    contributes; for integer beta it is a finite sum because
    1/Gamma(beta+1-n) vanishes for n > beta.  The companion logarithmic
    series is added only for integer beta (see module docstring).
    """
    if t <= 1.0:
        raise DomainError("mu_large requires t > 1")
    if alpha <= -1 or beta <= -1:
        raise DomainError("mu_large requires alpha > -1 and beta > -1")
    e = coeff_E(alpha, beta, n_max)
    acc = 0.0
    for n in range(n_max, -1, -1):
        acc += e[n] * t ** (beta - n) * recip_gamma(beta + 1.0 - n)
    value = math.exp(t) * acc
    if _is_nonneg_integer(beta):
        value += _log_series_continued(t, int(round(beta)), alpha, n_max)
    return value


def mu_negint_expansion(t: float, n: int, alpha: float) -> float:
    """Exact finite form of mu(t, -n-1, alpha).

    t^alpha * sum_{k=0}^{n} (-n)_k D_k (log 1/t)^(n-k); the printed series
    runs to k = n+1 but (-n)_{n+1} = 0, so that term is dropped and t = 1
    is admissible (only non-negative powers of log survive).
    """
    if t <= 0:
        raise DomainError("mu_negint_expansion requires t > 0")
    if n < 0:
        raise ValueError("n must be non-negative")
    if alpha <= -1:
        raise DomainError("mu_negint_expansion requires alpha > -1")
    ell = math.log(1.0 / t)
    d = coeff_D(alpha, n)
    acc = 0.0
    falling = 1.0  # (-n)_k
    for k in range(n + 1):
        acc += falling * d[k] * ell ** (n - k)
        falling *= -n + k
    return t ** alpha * acc


def ramanujan_expansion(t: float, n_max: int) -> float:
    """Large-t expansion (1/log t) sum_n D_n (log t)^(-n) of N(t), t > e.

    The D_n here are the raw derivatives of 1/Gamma(1-x) at 0, i.e. the
    coefficients of the series 1/Gamma(1-x) = sum_n D_n x^n/n!.  They
    relate to the D-coefficients above by D_n = (-1)^n n! D_n^(alpha=0);
    this is the normalization under which the series reproduces the
    quadrature values of N(t).
    """
    if t <= math.e:
        raise DomainError("ramanujan_expansion requires t > e")

    def build():
        rho, K = _circle_params(n_max)
        return taylor_coeffs_cauchy(
            lambda x: recip_gamma_complex(1.0 - x), n_max, rho, K)

    d = _cached(("Dram", int(n_max)), build)
    ell = math.log(t)
    acc = 0.0
    for n in range(n_max, -1, -1):
        acc += d[n] * ell ** (-n)
    return acc / ell


def nk_expansion_conjecture(t: float, k: int, alpha: float,
                            n_max: int) -> float:
    """Conjectured large-t expansion of the generalized Ramanujan N_k.

    Equals the negative of the logarithmic series of mu_large (the
    exponential part carries the residue polynomial, and what remains of
    mu is -N_k).  Exposed for empirical comparison against the quadrature
    route, never used as a primary evaluation path.  For k = 0, alpha = 0
    it reduces exactly to ramanujan_expansion.
    """
    if t <= 1.0:
        raise DomainError("nk_expansion_conjecture requires t > 1")
    if k < 0:
        raise ValueError("k must be non-negative")
    if not -1.0 < alpha <= 0.0:
        raise DomainError("nk_expansion_conjecture requires -1 < alpha <= 0")
    return -_log_series_continued(t, k, alpha, n_max)
