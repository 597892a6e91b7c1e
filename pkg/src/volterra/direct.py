"""Reference evaluation of the Volterra functions from their definitions.

mu_direct integrates the defining formula

    mu(t, beta, alpha) = 1/Gamma(beta+1) * integral_0^inf
                         t^(u+alpha) u^beta / Gamma(u+alpha+1) du

with the semi-infinite engine; the generic-u integrand decays faster than
exponentially (the reciprocal gamma wins against t^u for every t), so the
doubling panels converge in a handful of steps.  This route is the slow,
trustworthy oracle the other evaluation paths are checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .asymptotics import taylor_coeffs_cauchy
from .errors import DomainError
from .quadrature import DEFAULT_CONFIG, QuadratureConfig, integrate_semiinfinite
from .scalars import log_gamma_main, recip_gamma, recip_gamma_complex

_BETA_FLOOR = -1.0 + 1e-6  # 1/Gamma(beta+1) prefactor blows up below this
_INTEGER_TOL = 1e-12


@dataclass(frozen=True)
class VolterraParams:
    """Argument triple (t, beta, alpha) of the two-parameter function."""

    t: float
    beta: float = 0.0
    alpha: float = 0.0
    beta_is_integer: bool = field(init=False)

    def __post_init__(self):
        if not self.t > 0:
            raise DomainError("t must be positive")
        is_int = (abs(self.beta - round(self.beta)) <= _INTEGER_TOL
                  and round(self.beta) >= 0)
        object.__setattr__(self, "beta_is_integer", is_int)


def mu_direct(params: VolterraParams,
              cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """mu(t, beta, alpha) by direct quadrature of the defining integral."""
    t, beta, alpha = params.t, params.beta, params.alpha
    if alpha <= -1.0:
        raise DomainError("mu_direct requires alpha > -1")
    if beta < _BETA_FLOOR:
        raise DomainError(
            f"mu_direct requires beta >= {_BETA_FLOOR!r}; the prefactor "
            "1/Gamma(beta+1) is not evaluated closer to the pole")
    log_t = math.log(t)
    prefactor = recip_gamma(beta + 1.0)

    # assembled in log space (1/Gamma(u+alpha+1) = (u+alpha+1)/Gamma(u+alpha+2),
    # a positive quantity for u >= 0, alpha > -1), so the huge-u tail
    # underflows cleanly to 0 instead of producing inf*0
    def integrand(u):
        exponent = (u + alpha) * log_t - log_gamma_main(u + alpha + 2.0)
        return u ** beta * (u + alpha + 1.0) * np.exp(exponent)

    res = integrate_semiinfinite(integrand, 0.0, cfg)
    return prefactor * res.value


def nu(t: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """nu(t) = mu(t, 0, 0)."""
    return mu_direct(VolterraParams(t, 0.0, 0.0), cfg)


def nu_alpha(t: float, alpha: float,
             cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """nu(t, alpha) = mu(t, 0, alpha)."""
    return mu_direct(VolterraParams(t, 0.0, alpha), cfg)


def mu_beta(t: float, beta: float,
            cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """mu(t, beta) = mu(t, beta, 0)."""
    return mu_direct(VolterraParams(t, beta, 0.0), cfg)


def nu_dot(t: float, cfg: QuadratureConfig = DEFAULT_CONFIG) -> float:
    """d nu/dt = integral_0^inf t^(u-1)/Gamma(u) du.

    The integrand vanishes at u = 0 because 1/Gamma(0) = 0, so the
    integral is proper at the left endpoint for every t > 0.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    log_t = math.log(t)

    # 1/Gamma(u) = u/Gamma(u+1); log-space assembly as in mu_direct
    def integrand(u):
        return u * np.exp((u - 1.0) * log_t - log_gamma_main(u + 1.0))

    return integrate_semiinfinite(integrand, 0.0, cfg).value


def mu_negative_integer_beta(t: float, n: int, alpha: float) -> float:
    """mu(t, -n-1, alpha) = (-1)^n d^n/dx^n [t^(alpha+x)/Gamma(alpha+x+1)]|_0.

    The derivative is taken numerically with the Cauchy-circle engine;
    t^(alpha+x) is entire in x, so the default circle applies.
    """
    if not t > 0:
        raise DomainError("t must be positive")
    if n < 0:
        raise ValueError("n must be non-negative")
    if alpha <= -1.0:
        raise DomainError("alpha must exceed -1")
    log_t = math.log(t)

    def gen(x):
        return np.exp((alpha + x) * log_t) * recip_gamma_complex(alpha + x + 1.0)

    derivs = taylor_coeffs_cauchy(gen, n)
    return (-1.0) ** n * derivs[n]
