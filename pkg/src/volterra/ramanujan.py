"""Ramanujan integrals N(t), their integer-order generalizations N_k(t, alpha),
and the identity route mu(t, k, alpha) = e^t P_k(t)/k! - N_k(t, alpha).

All integrals are rewritten with the substitution r = e^y, which removes
the endpoint singularity at r = 0 and turns them into integrals over the
whole real line:

    N_k(t, a) = (1/pi) * integral_-inf^inf  e^(-t e^y) e^(-a y)
                 sin[a pi + (k+1) Arg(y + i pi)] / (y^2 + pi^2)^((k+1)/2) dy.

The right tail dies doubly exponentially.  The left tail decays like
e^(a y) for a < 0 and only algebraically (order |y|^(k+2), thanks to the
vanishing sine factor) at a = 0; the doubling panels of the semi-infinite
engine make the slow algebraic case cheap because each panel contributes
a fixed fraction of the remaining tail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_semiinfinite
from .residues import residue_at_one
from .scalars import log_gamma_main

_PI2 = math.pi * math.pi
_ALPHA_FLOOR = -1.0 + 1e-6


@dataclass(frozen=True)
class RamanujanParams:
    """Arguments (t, k, alpha) with k the integer order (beta = k)."""

    t: float
    k: int = 0
    alpha: float = 0.0

    def __post_init__(self):
        if not self.t > 0:
            raise DomainError("t must be positive")
        if self.k < 0 or self.k != int(self.k):
            raise DomainError("k must be a non-negative integer")
        if not self.alpha <= 0.0:
            raise DomainError("alpha must be <= 0")
        if self.alpha < _ALPHA_FLOOR:
            raise DomainError(f"alpha must be >= {_ALPHA_FLOOR!r}")


def _exp_neg_t_exp(t: float, y):
    """e^(-t e^y) without overflow for large y."""
    z = y + math.log(t)
    with np.errstate(over="ignore"):
        return np.where(z > 700.0, 0.0, np.exp(-np.exp(np.minimum(z, 700.0))))


def _integrate_real_line(f, cfg: QuadratureConfig) -> float:
    right = integrate_semiinfinite(f, 0.0, cfg)
    left = integrate_semiinfinite(lambda y: f(-y), 0.0, cfg)
    # the y = 0 line is an interior point; both halves are open there
    return right.value + left.value


def N_k(params: RamanujanParams,
        cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Generalized Ramanujan function N_k(t, alpha) by quadrature."""
    t, k, alpha = params.t, params.k, params.alpha
    half_power = 0.5 * (k + 1)

    def integrand(y):
        phase = alpha * math.pi + (k + 1) * np.arctan2(math.pi, y)
        return (_exp_neg_t_exp(t, y) * np.exp(-alpha * y) * np.sin(phase)
                / (y * y + _PI2) ** half_power) / math.pi

    return _integrate_real_line(integrand, cfg)


def N_classic(t: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """The classical Ramanujan integral N(t)."""
    if not t > 0:
        raise DomainError("t must be positive")

    def integrand(y):
        return _exp_neg_t_exp(t, y) / (y * y + _PI2)

    return _integrate_real_line(integrand, cfg)


def N_k_special(t: float, k: int,
                cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """Closed-form integrands of N_k(t, 0) for k = 1, 2, 3.

    These come from expanding sin[(k+1) arctan(pi/ln r)] with multiple
    angle identities and provide an independent check of N_k.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    if k not in (1, 2, 3):
        raise DomainError("special forms exist for k in {1, 2, 3} only")

    if k == 1:
        def integrand(y):
            return 2.0 * _exp_neg_t_exp(t, y) * y / (y * y + _PI2) ** 2
    elif k == 2:
        def integrand(y):
            return _exp_neg_t_exp(t, y) * (3.0 * y * y - _PI2) \
                / (y * y + _PI2) ** 3
    else:
        def integrand(y):
            return 4.0 * _exp_neg_t_exp(t, y) * y * (y * y - _PI2) \
                / (y * y + _PI2) ** 4

    return _integrate_real_line(integrand, cfg)


def wood_derivative(t: float, n: int,
                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """n-th derivative of N(t): e^t - integral_{-n}^inf t^u/Gamma(u+1) du.

    The integrand has removable zeros at the negative integers inside
    [-n, 0), where 1/Gamma(u+1) vanishes; no special handling is needed.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    log_t = math.log(t)

    # 1/Gamma(u+1) = (u+1)(u+2)...(u+n+1)/Gamma(u+n+2); the polynomial is
    # evaluated directly so the sign changes on [-n, 0) survive the
    # log-space assembly of the positive part
    def integrand(u):
        poly = np.ones_like(u)
        for j in range(1, n + 2):
            poly = poly * (u + j)
        return poly * np.exp(u * log_t - log_gamma_main(u + n + 2.0))

    res = integrate_semiinfinite(integrand, float(-n), cfg)
    return math.exp(t) - res.value


def mu_via_identity(t: float, k: int, alpha: float,
                    cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """mu(t, k, alpha) through the residue polynomial and N_k."""
    params = RamanujanParams(t, k, alpha)
    return residue_at_one(t, k, alpha) - N_k(params, cfg)
